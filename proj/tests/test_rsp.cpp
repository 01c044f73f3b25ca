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

#include "clonesig/errors.hpp"
#include "clonesig/random.hpp"
#include "clonesig/rsp.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace clonesig {
namespace {

using testing::Gen;

// |<target|bob>|^2 with the target written out from alpha and phases.
double direct_fidelity(const PhaseEnsembleSpec& spec, const PhasePoint& pt, const PureState& bob) {
  Complex acc = 0.0;
  for (int j = 0; j < spec.dim(); ++j) acc += std::polar(spec[j], -pt[j]) * bob[j];
  return std::norm(acc);
}

TEST(Rsp, SupportedDimensions) {
  for (int d : {2, 3, 4, 5, 8, 16}) EXPECT_TRUE(is_supported_rsp_dimension(d));
  for (int d : {1, 6, 7, 9, 32}) EXPECT_FALSE(is_supported_rsp_dimension(d));
  const SharedEntangledState shared{PhaseEnsembleSpec::uniform(6)};
  try {
    enumerate_rsp(shared, PhasePoint(std::vector<double>(6, 0.0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedDimension);
  }
}

TEST(Rsp, EveryOutcomeIsExact) {
  Gen gen(61);
  for (int d : {2, 3, 4, 5, 8, 16}) {
    for (int t = 0; t < 10; ++t) {
      const PhaseEnsembleSpec spec(gen.alpha(d));
      const SharedEntangledState shared{spec};
      const PhasePoint target(gen.phases(d));
      const auto runs = enumerate_rsp(shared, target);
      ASSERT_EQ(runs.size(), static_cast<std::size_t>(d));
      for (int m = 0; m < d; ++m) {
        const RspRun& r = runs[static_cast<std::size_t>(m)];
        EXPECT_EQ(r.transcript.outcome, m);
        EXPECT_DOUBLE_EQ(r.transcript.cbits_sent, std::log2(static_cast<double>(d)));
        EXPECT_GE(direct_fidelity(spec, target, r.bob_state), 1.0 - 1e-12);
        EXPECT_TRUE(r.transcript.correction.is_unitary(1e-12));
      }
      for (double p : rsp_outcome_probabilities(shared, target)) EXPECT_NEAR(p, 1.0 / d, 1e-12);
    }
  }
}

TEST(Rsp, BobMarginalCarriesNoTargetInformation) {
  Gen gen(62);
  for (int d : {2, 4, 8}) {
    const PhaseEnsembleSpec spec(gen.alpha(d));
    const SharedEntangledState shared{spec};
    const auto basis = alice_measurement_basis(spec, PhasePoint(gen.phases(d)));
    const Matrix rho = bob_marginal_before_message(shared, basis);
    Matrix want = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) want(j, j) = spec[j] * spec[j];
    EXPECT_LT((rho - want).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Rsp, AliceBasisIsOrthonormal) {
  Gen gen(63);
  const int d = 5;
  const PhaseEnsembleSpec spec(gen.alpha(d));
  const auto b = alice_measurement_basis(spec, PhasePoint(gen.phases(d)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      EXPECT_NEAR(std::abs(inner(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)])),
                  i == j ? 1.0 : 0.0, 1e-13);
    }
  }
}

TEST(Rsp, SampledRunsAreSeedDeterministic) {
  const SharedEntangledState shared{PhaseEnsembleSpec({0.6, 0.8})};
  const PhasePoint target({0.0, 1.0});
  const RspRun a = run_rsp(shared, target, std::uint64_t{5});
  const RspRun b = run_rsp(shared, target, std::uint64_t{5});
  EXPECT_EQ(a.transcript.outcome, b.transcript.outcome);
  EXPECT_GE(a.transcript.final_fidelity, 1.0 - 1e-12);
}

TEST(Rsp, StateTargetsMustBeInEnsemble) {
  const SharedEntangledState shared{PhaseEnsembleSpec({0.6, 0.8})};
  const PureState inside = make_state({Complex(0.6), std::polar(0.8, 2.0)});
  EXPECT_GE(run_rsp(shared, inside, std::uint64_t{1}).transcript.final_fidelity, 1.0 - 1e-12);
  try {
    run_rsp(shared, make_state({Complex(0.8), Complex(0.6)}), std::uint64_t{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInEnsemble);
  }
}

TEST(RspRealQubit, BothOutcomesExact) {
  Gen gen(64);
  for (int t = 0; t < 100; ++t) {
    const double th = gen.uniform(0.0, kTwoPi);
    const PureState target = make_state({Complex(std::cos(th)), Complex(std::sin(th))});
    for (int m = 0; m < 2; ++m) {
      const RspRun r = run_rsp_real_qubit_outcome(target, m);
      EXPECT_GE(fidelity(r.bob_state, target), 1.0 - 1e-12);
      EXPECT_DOUBLE_EQ(r.transcript.cbits_sent, 1.0);
    }
  }
  EXPECT_GE(run_rsp_real_qubit(make_state({Complex(0.6), Complex(0.8)}), std::uint64_t{3})
                .transcript.final_fidelity,
            1.0 - 1e-12);
}

TEST(RspRealQubit, RejectsComplexTargets) {
  const double r = 1.0 / std::sqrt(2.0);
  try {
    run_rsp_real_qubit(make_state({Complex(r), Complex(0.0, r)}), std::uint64_t{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRealAmplitude);
  }
  // A global phase on a real target is still a real target.
  EXPECT_NO_THROW(run_rsp_real_qubit(make_state({Complex(0.0, 0.6), Complex(0.0, 0.8)}),
                                     std::uint64_t{1}));
}

}  // namespace
}  // namespace clonesig
