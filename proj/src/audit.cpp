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

#include "clonesig/errors.hpp"
#include "clonesig/independence.hpp"
#include "clonesig/linalg.hpp"
#include "clonesig/rsp.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace clonesig {

namespace {

constexpr const char* kOperationalization =
    "Bob's cloner is a counterfactual oracle (non-physical): on the state he "
    "holds it returns two exact copies with probability gamma. Information is "
    "the plug-in mutual information between Alice's message and Bob's decode. "
    "'conditional' uses conclusive decodes only; 'unconditional' counts every "
    "trial with inconclusive and clone-failure as extra outcomes. violation "
    "means conditional bits > log2(d) + 3 sigma.";

constexpr const char* kOperationalizationNone =
    "No cloner: Bob measures his single copy with the unambiguous "
    "discrimination POVM of the best linearly independent d-subset of the "
    "messages. Information measures as in the counterfactual mode.";

struct Decoder {
  std::vector<int> hypotheses;
  Povm povm;
  std::vector<double> success;
  std::vector<double> average;
  std::vector<double> worst;
  bool two_copy = false;
};

Decoder make_decoder(std::span<const PureState> hyps, std::vector<int> indices,
                     UsdObjective objective, bool two_copy) {
  Decoder dec;
  dec.hypotheses = std::move(indices);
  dec.two_copy = two_copy;
  const auto avg = optimize_usd(hyps, {}, UsdObjective::Average);
  const auto worst = optimize_usd(hyps, {}, UsdObjective::WorstCase);
  dec.average = avg.success_probs;
  dec.worst = worst.success_probs;
  const auto& chosen = objective == UsdObjective::Average ? avg : worst;
  dec.povm = chosen.povm;
  dec.success = chosen.success_probs;
  return dec;
}

// d-subset of the messages with the largest equal-probability USD success
// (lambda_min of its Gram matrix); ties keep the lexicographically first.
std::vector<int> best_single_copy_subset(std::span<const PureState> states, int d) {
  const std::size_t n = states.size();
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + d, true);
  std::vector<int> best;
  double best_score = -1.0;
  do {
    std::vector<int> idx;
    std::vector<PureState> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) {
        idx.push_back(static_cast<int>(i));
        sub.push_back(states[i]);
      }
    }
    const double score = min_eigenvalue(gram_matrix(sub));
    if (score > best_score + 1e-15) {
      best_score = score;
      best = std::move(idx);
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best;
}

struct TrialContext {
  const AuditConfig& cfg;
  const SharedEntangledState& shared;
  const Decoder& decoder;
  double gamma;
};

TrialRecord run_trial(const TrialContext& ctx, std::uint64_t trial, double& fidelity_out) {
  Rng rng(derive_seed(ctx.cfg.seed, trial));
  const int messages = static_cast<int>(ctx.cfg.messages.size());
  TrialRecord rec;
  rec.message = std::min(messages - 1, static_cast<int>(uniform01(rng) * messages));

  const RspRun rsp =
      run_rsp(ctx.shared, ctx.cfg.messages[static_cast<std::size_t>(rec.message)], rng);
  rec.rsp_outcome = rsp.transcript.outcome;
  fidelity_out = rsp.transcript.final_fidelity;

  PureState held = rsp.bob_state;
  if (ctx.decoder.two_copy) {
    rec.cloned = uniform01(rng) < ctx.gamma;
    if (!rec.cloned) {
      rec.decoded = kDecodeCloneFailed;
      return rec;
    }
    held = tensor_power(held, 2);
  }
  const int outcome = measure(ctx.decoder.povm, held, rng);
  rec.decoded = outcome == ctx.decoder.povm.inconclusive_index()
                    ? kDecodeInconclusive
                    : ctx.decoder.hypotheses[static_cast<std::size_t>(outcome)];
  return rec;
}

}  // namespace

std::string_view to_string(ClonerMode mode) noexcept {
  return mode == ClonerMode::CounterfactualOracle ? "counterfactual-oracle" : "none";
}

std::string_view to_string(UsdObjective objective) noexcept {
  return objective == UsdObjective::Average ? "average" : "worst-case";
}

std::vector<PureState> AuditConfig::message_states() const {
  std::vector<PureState> out;
  out.reserve(messages.size());
  for (const auto& m : messages) out.push_back(phase_state(spec, m));
  return out;
}

void validate_audit_config(const AuditConfig& cfg) {
  const int d = cfg.dim();
  if (!is_supported_rsp_dimension(d)) {
    throw Error(ErrorCode::ConfigError,
                "dim must be one of 2,3,4,5,8,16 (got " + std::to_string(d) + ")");
  }
  if (static_cast<int>(cfg.messages.size()) != d + 1) {
    throw Error(ErrorCode::ConfigError, "messages: expected d+1 = " + std::to_string(d + 1) +
                                            " phase points, got " +
                                            std::to_string(cfg.messages.size()));
  }
  for (const auto& m : cfg.messages) {
    if (m.dim() != d) throw Error(ErrorCode::ConfigError, "messages: phase point dim != dim");
  }
  if (cfg.trials == 0) throw Error(ErrorCode::ConfigError, "trials must be positive");
  if (cfg.gamma && !(*cfg.gamma >= 0.0 && *cfg.gamma <= 1.0)) {
    throw Error(ErrorCode::ConfigError, "gamma must lie in [0, 1]");
  }
  try {
    require_two_copy_preconditions(cfg.message_states());
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, std::string("messages: ") + e.what());
  }
}

AuditReport run_signalling_audit(const AuditConfig& cfg) {
  validate_audit_config(cfg);
  const int d = cfg.dim();
  const auto states = cfg.message_states();
  const SharedEntangledState shared{cfg.spec};
  const bool clone = cfg.cloner_mode == ClonerMode::CounterfactualOracle;

  AuditReport report;
  report.dim = d;
  report.trials = cfg.trials;
  report.cloner_mode = cfg.cloner_mode;
  report.classical_cost_bits = std::log2(static_cast<double>(d));
  report.impossibility = impossibility_certificate(states);
  report.operationalization = clone ? kOperationalization : kOperationalizationNone;

  Decoder decoder;
  if (clone) {
    report.gamma = cfg.gamma ? *cfg.gamma
                             : max_equal_gamma(std::span<const PureState>(states).first(
                                   static_cast<std::size_t>(d)));
    std::vector<PureState> lifted;
    std::vector<int> idx;
    for (std::size_t k = 0; k < states.size(); ++k) {
      lifted.push_back(tensor_power(states[k], 2));
      idx.push_back(static_cast<int>(k));
    }
    decoder = make_decoder(lifted, std::move(idx), cfg.decoder_objective, true);
  } else {
    const auto idx = best_single_copy_subset(states, d);
    std::vector<PureState> sub;
    for (int i : idx) sub.push_back(states[static_cast<std::size_t>(i)]);
    decoder = make_decoder(sub, idx, cfg.decoder_objective, false);
  }
  report.decoder_hypotheses = decoder.hypotheses;
  report.usd_average_success = decoder.average;
  report.usd_worst_case_success = decoder.worst;
  report.decoder_success = decoder.success;

  // Trials are independent given derive_seed(seed, trial), so the split
  // across workers never changes the records.
  report.records.resize(cfg.trials);
  std::vector<double> fidelities(cfg.trials, 1.0);
  const TrialContext ctx{cfg, shared, decoder, report.gamma};
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials));
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (cfg.trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(cfg.trials, begin + chunk);
      pool.emplace_back([&, begin, end] {
        for (std::uint64_t t = begin; t < end; ++t) {
          report.records[t] = run_trial(ctx, t, fidelities[t]);
        }
      });
    }
  }

  const auto m = static_cast<std::size_t>(d + 1);
  CountTable conclusive(m, std::vector<std::uint64_t>(m, 0));
  CountTable full(m, std::vector<std::uint64_t>(m + 2, 0));
  std::vector<std::uint64_t> sent(m, 0);
  std::vector<std::uint64_t> sent_conclusive(m, 0);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const auto& r = report.records[t];
    const auto x = static_cast<std::size_t>(r.message);
    ++sent[x];
    report.min_rsp_fidelity = std::min(report.min_rsp_fidelity, fidelities[t]);
    if (r.decoded >= 0) {
      const auto y = static_cast<std::size_t>(r.decoded);
      ++conclusive[x][y];
      ++full[x][y];
      ++sent_conclusive[x];
      ++report.conclusive_count;
      if (r.decoded != r.message) ++report.conclusive_errors;
    } else if (r.decoded == kDecodeInconclusive) {
      ++full[x][m];
    } else {
      ++full[x][m + 1];
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    report.conclusive_prob_per_message.push_back(
        sent[x] ? static_cast<double>(sent_conclusive[x]) / static_cast<double>(sent[x]) : 0.0);
  }
  if (report.conclusive_count > 0) report.conditional_info = estimate_mutual_information(conclusive);
  report.unconditional_info = estimate_mutual_information(full);
  report.violation = report.conditional_info.bits >
                     report.classical_cost_bits + 3.0 * report.conditional_info.sigma;
  return report;
}

BaselineBound baseline_no_cloner_bound(const AuditConfig& cfg) {
  AuditConfig none = cfg;
  none.cloner_mode = ClonerMode::None;
  const auto report = run_signalling_audit(none);
  return {report.unconditional_info.bits, report.unconditional_info.sigma,
          report.classical_cost_bits};
}

}  // namespace clonesig
