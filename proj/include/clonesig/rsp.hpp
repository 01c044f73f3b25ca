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

// Exact remote state preparation of phase-ensemble states.
//
// Alice and Bob share sum_i alpha_i |i>_A |i>_B. To prepare
// sum_j alpha_j e^{i phi_j} |j> at Bob's side, Alice measures her half in
//
//   b_m = d^{-1/2} sum_j e^{-i phi_j} w^{-jm} |j>,   w = e^{2 pi i / d},
//
// which leaves Bob with sum_j alpha_j e^{i phi_j} w^{jm} |j> (probability 1/d
// for each m). She sends m, one symbol of a d-letter alphabet (log2 d bits),
// and Bob applies diag(w^{-jm}).

#include "clonesig/random.hpp"
#include "clonesig/state.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace clonesig {

/// Dimensions the RSP simulator accepts.
bool is_supported_rsp_dimension(int d) noexcept;

struct SharedEntangledState {
  PhaseEnsembleSpec spec;

  int dim() const noexcept { return spec.dim(); }
  /// J with |psi>_AB = sum_ij J_ij |i>_A |j>_B.
  Matrix joint_amplitudes() const;
};

struct RspTranscript {
  int outcome = 0;
  double cbits_sent = 0.0;  // log2 d
  Operator correction = Operator::identity(1);
  double final_fidelity = 0.0;
};

struct RspRun {
  PureState bob_state;
  RspTranscript transcript;
};

std::vector<PureState> alice_measurement_basis(const PhaseEnsembleSpec& spec,
                                               const PhasePoint& target);

/// Born probabilities of Alice's outcomes.
std::vector<double> rsp_outcome_probabilities(const SharedEntangledState& shared,
                                              const PhasePoint& target);

/// Samples Alice's outcome and returns Bob's corrected state. Throws
/// DimensionMismatch when the target has the wrong dimension and
/// UnsupportedDimension outside {2, 3, 4, 5, 8, 16}.
RspRun run_rsp(const SharedEntangledState& shared, const PhasePoint& target, Rng& rng);
RspRun run_rsp(const SharedEntangledState& shared, const PhasePoint& target,
               std::uint64_t seed);

/// Accepts an arbitrary state; throws NotInEnsemble unless its moduli match
/// the shared alpha profile within 1e-10.
RspRun run_rsp(const SharedEntangledState& shared, const PureState& target,
               std::uint64_t seed);

/// Deterministic branch for a fixed Alice outcome m.
RspRun run_rsp_outcome(const SharedEntangledState& shared, const PhasePoint& target,
                       int outcome);

/// Every branch m = 0..d-1 in order.
std::vector<RspRun> enumerate_rsp(const SharedEntangledState& shared,
                                  const PhasePoint& target);

/// Bob's reduced state averaged over Alice's outcomes, before any message.
/// `alice_basis` may be any orthonormal basis of Alice's system.
Matrix bob_marginal_before_message(const SharedEntangledState& shared,
                                   std::span<const PureState> alice_basis);

/// Real-amplitude qubit protocol over (|00> + |11>)/sqrt(2): Alice measures
/// in {t, t_perp}; on the t_perp outcome Bob applies the pi rotation
/// [[0, 1], [-1, 0]], which maps t_perp = (-t1, t0) to t for every real t.
/// Throws NotRealAmplitude for imaginary parts above 1e-12 and
/// UnsupportedDimension for d != 2.
RspRun run_rsp_real_qubit(const PureState& target, Rng& rng);
RspRun run_rsp_real_qubit(const PureState& target, std::uint64_t seed);
RspRun run_rsp_real_qubit_outcome(const PureState& target, int outcome);

}  // namespace clonesig
