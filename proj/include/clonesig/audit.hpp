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

#pragma once

// Signalling audit: Alice encodes one of d+1 messages by remotely preparing
// the matching phase-ensemble state (cost log2 d bits). If Bob could clone
// exactly with probability gamma, the two-copy states would be linearly
// independent and unambiguous discrimination would recover the message
// without error whenever it is conclusive, i.e. log2(d+1) bits from a
// log2 d bit message. The cloner here is a labelled counterfactual oracle;
// no physical machine with gamma > 0 exists (see ImpossibilityCertificate).

#include "clonesig/cloning.hpp"
#include "clonesig/discrimination.hpp"
#include "clonesig/information.hpp"
#include "clonesig/state.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace clonesig {

enum class ClonerMode { CounterfactualOracle, None };

struct AuditConfig {
  PhaseEnsembleSpec spec = PhaseEnsembleSpec::uniform(2);
  std::vector<PhasePoint> messages;  // d + 1 phase points
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  ClonerMode cloner_mode = ClonerMode::CounterfactualOracle;
  // Oracle success probability; defaults to max_equal_gamma of the first d
  // messages.
  std::optional<double> gamma;
  UsdObjective decoder_objective = UsdObjective::WorstCase;
  unsigned threads = 0;  // 0: hardware concurrency; results do not depend on it

  int dim() const noexcept { return spec.dim(); }
  std::vector<PureState> message_states() const;
};

/// Throws ConfigError naming the violated invariant.
void validate_audit_config(const AuditConfig& cfg);

inline constexpr int kDecodeInconclusive = -1;
inline constexpr int kDecodeCloneFailed = -2;

struct TrialRecord {
  int message = 0;
  int rsp_outcome = 0;
  bool cloned = false;
  int decoded = kDecodeInconclusive;  // message index, or one of the codes above
};

struct AuditReport {
  int dim = 0;
  std::uint64_t trials = 0;
  ClonerMode cloner_mode = ClonerMode::CounterfactualOracle;
  double classical_cost_bits = 0.0;
  double gamma = 0.0;

  std::vector<int> decoder_hypotheses;  // message indices the decoder can name
  std::vector<double> usd_average_success;
  std::vector<double> usd_worst_case_success;
  std::vector<double> decoder_success;  // the POVM actually used

  std::vector<double> conclusive_prob_per_message;
  std::uint64_t conclusive_count = 0;
  std::uint64_t conclusive_errors = 0;
  double min_rsp_fidelity = 1.0;

  // Mutual information between message and decoded output on conclusive
  // trials only.
  InformationEstimate conditional_info;
  // Mutual information between message and the full outcome (conclusive,
  // inconclusive or clone failure) over all trials.
  InformationEstimate unconditional_info;
  bool violation = false;  // conditional bits > cost + 3 sigma

  ImpossibilityCertificate impossibility;
  std::string operationalization;
  std::vector<TrialRecord> records;
};

AuditReport run_signalling_audit(const AuditConfig& cfg);

struct BaselineBound {
  double bits = 0.0;  // unconditional information without a cloner
  double sigma = 0.0;
  double classical_cost_bits = 0.0;

  bool within_bound() const noexcept { return bits <= classical_cost_bits + 3.0 * sigma; }
};

/// The audit with cloner_mode = None: Bob decodes single copies with the
/// USD measurement of the best independent d-subset.
BaselineBound baseline_no_cloner_bound(const AuditConfig& cfg);

std::string_view to_string(ClonerMode mode) noexcept;
std::string_view to_string(UsdObjective objective) noexcept;

}  // namespace clonesig
