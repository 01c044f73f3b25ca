// Copyright 2026 The clonesig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clonesig/audit.hpp"
#include "clonesig/cloning.hpp"
#include "clonesig/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace clonesig {
namespace {

AuditConfig fourier_config(int d, std::uint64_t trials) {
  AuditConfig cfg;
  cfg.spec = PhaseEnsembleSpec::uniform(d);
  for (int k = 0; k < d; ++k) {
    std::vector<double> p;
    for (int j = 0; j < d; ++j) p.push_back(kTwoPi * j * k / d);
    cfg.messages.emplace_back(p);
  }
  cfg.trials = trials;
  cfg.seed = 99;
  return cfg;
}

AuditConfig qubit_triple(std::uint64_t trials) {
  AuditConfig cfg = fourier_config(2, trials);
  cfg.messages = {PhasePoint({0.0, 0.0}), PhasePoint({0.0, kTwoPi / 3.0}),
                  PhasePoint({0.0, 2.0 * kTwoPi / 3.0})};
  return cfg;
}

TEST(AuditConfig, Validation) {
  AuditConfig cfg = qubit_triple(100);
  EXPECT_NO_THROW(validate_audit_config(cfg));
  auto expect_config_error = [](const AuditConfig& c) {
    try {
      validate_audit_config(c);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ConfigError);
    }
  };
  AuditConfig few = cfg;
  few.messages.pop_back();
  expect_config_error(few);
  AuditConfig zero = cfg;
  zero.trials = 0;
  expect_config_error(zero);
  AuditConfig bad_gamma = cfg;
  bad_gamma.gamma = 1.5;
  expect_config_error(bad_gamma);
  AuditConfig repeated = cfg;
  repeated.messages[2] = repeated.messages[1];
  expect_config_error(repeated);
}

TEST(Audit, CounterfactualOracleExceedsClassicalCost) {
  const AuditReport r = run_signalling_audit(qubit_triple(20000));
  EXPECT_EQ(r.dim, 2);
  EXPECT_DOUBLE_EQ(r.classical_cost_bits, 1.0);
  EXPECT_EQ(r.conclusive_errors, 0u);
  EXPECT_GT(r.conclusive_count, 0u);
  EXPECT_GE(r.min_rsp_fidelity, 1.0 - 1e-12);
  EXPECT_NEAR(r.conditional_info.bits, std::log2(3.0), 4.0 * r.conditional_info.sigma);
  EXPECT_TRUE(r.violation);
  EXPECT_TRUE(r.impossibility.valid());
  EXPECT_EQ(r.records.size(), 20000u);
  EXPECT_EQ(r.decoder_hypotheses.size(), 3u);
}

TEST(Audit, DefaultGammaIsMaxEqualOfFirstMessages) {
  AuditConfig cfg = qubit_triple(10);
  const AuditReport r = run_signalling_audit(cfg);
  const auto states = cfg.message_states();
  const std::vector<PureState> first(states.begin(), states.begin() + 2);
  EXPECT_DOUBLE_EQ(r.gamma, max_equal_gamma(first));
  cfg.gamma = 0.25;
  EXPECT_DOUBLE_EQ(run_signalling_audit(cfg).gamma, 0.25);
}

TEST(Audit, NoClonerStaysWithinBound) {
  AuditConfig cfg = qubit_triple(20000);
  cfg.cloner_mode = ClonerMode::None;
  const AuditReport r = run_signalling_audit(cfg);
  EXPECT_FALSE(r.violation);
  EXPECT_LE(r.conditional_info.bits, 1.0 + 3.0 * r.conditional_info.sigma);
  ASSERT_EQ(r.decoder_hypotheses.size(), 2u);
  // Only the message the single-copy decoder cannot name is ever misread.
  for (const auto& rec : r.records) {
    EXPECT_FALSE(rec.cloned);
    if (rec.decoded >= 0 && rec.decoded != rec.message) {
      EXPECT_NE(rec.message, r.decoder_hypotheses[0]);
      EXPECT_NE(rec.message, r.decoder_hypotheses[1]);
    }
  }
  const BaselineBound b = baseline_no_cloner_bound(qubit_triple(20000));
  EXPECT_TRUE(b.within_bound());
}

TEST(Audit, ResultsDoNotDependOnThreadCount) {
  AuditConfig a = qubit_triple(3000);
  a.threads = 1;
  AuditConfig b = a;
  b.threads = 7;
  const AuditReport ra = run_signalling_audit(a);
  const AuditReport rb = run_signalling_audit(b);
  ASSERT_EQ(ra.records.size(), rb.records.size());
  for (std::size_t i = 0; i < ra.records.size(); ++i) {
    EXPECT_EQ(ra.records[i].message, rb.records[i].message);
    EXPECT_EQ(ra.records[i].rsp_outcome, rb.records[i].rsp_outcome);
    EXPECT_EQ(ra.records[i].cloned, rb.records[i].cloned);
    EXPECT_EQ(ra.records[i].decoded, rb.records[i].decoded);
  }
  EXPECT_EQ(ra.conditional_info.bits, rb.conditional_info.bits);
}

TEST(Audit, CloneFailuresAreRecorded) {
  AuditConfig cfg = qubit_triple(4000);
  cfg.gamma = 0.5;
  const AuditReport r = run_signalling_audit(cfg);
  std::uint64_t failed = 0;
  for (const auto& rec : r.records) {
    if (!rec.cloned) {
      ++failed;
      EXPECT_EQ(rec.decoded, kDecodeCloneFailed);
    }
  }
  const double n = 4000.0;
  EXPECT_NEAR(failed / n, 0.5, 4.0 * std::sqrt(0.25 / n));
  EXPECT_EQ(r.conclusive_errors, 0u);
}

TEST(Audit, ModeNames) {
  EXPECT_EQ(to_string(ClonerMode::None), "none");
  EXPECT_EQ(to_string(ClonerMode::CounterfactualOracle), "counterfactual-oracle");
  EXPECT_EQ(to_string(UsdObjective::WorstCase), "worst-case");
}

}  // namespace
}  // namespace clonesig
