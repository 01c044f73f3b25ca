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

// Probabilistic exact 1 -> 2 cloning.
//
// A machine that succeeds on psi_k with heralded probability gamma_k acts as
//
//   V |psi_k> = sqrt(gamma_k) |psi_k>|psi_k> (x) |flag 0>  +  |f_k> (x) |flag 1>
//
// and unitarity (inner products preserved) forces
//
//   X1 = sqrt(Gamma) X2 sqrt(Gamma) + F,   F_jk = <f_j|f_k>,
//
// with X1_jk = <psi_j|psi_k>, X2 its entrywise square and Gamma =
// diag(gamma). Such failure vectors exist iff X1 - sqrt(Gamma) X2 sqrt(Gamma)
// is PSD, which is the feasibility test used below.

#include "clonesig/independence.hpp"
#include "clonesig/random.hpp"
#include "clonesig/state.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace clonesig {

inline constexpr double kClonePsdTolerance = 1e-10;
inline constexpr double kCloneIsometryTolerance = 1e-9;
// Largest gamma an impossibility certificate may report and still be valid.
inline constexpr double kImpossibilityBound = 1e-9;

struct CloningFeasibility {
  std::vector<double> gammas;
  bool feasible = false;
  double psd_witness = 0.0;  // min eigenvalue of X1 - sqrt(G) X2 sqrt(G)
};

/// Row layout of a ClonerRealization's output register.
struct FlagLayout {
  int success_rows = 0;  // [0, d^2): two-copy register, flag 0
  int failure_rows = 0;  // [d^2, d^2 + ancilla): failure register, flag 1
};

/// Isometry V from the input system (blank and ancilla held in fixed ready
/// states) into success (+) failure registers.
struct ClonerRealization {
  int input_dim = 0;
  int ancilla_dim = 0;
  Matrix isometry;  // (d^2 + ancilla_dim) x d
  FlagLayout flags;
  std::vector<PureState> hypotheses;
  std::vector<double> gammas;

  double isometry_error() const;  // || V^dagger V - I ||
};

struct CloneOutcome {
  bool success = false;
  std::optional<PureState> output;  // normalized two-copy state on success
  double success_probability = 0.0;
};

struct ImpossibilityCertificate {
  DependenceCertificate dependence;
  IndependenceVerdict two_copy_verdict;
  double lifted_min_singular_value = 0.0;
  double linearity_residual = 0.0;  // residual accepted as exact linearity
  double max_gamma_bound = 1.0;

  bool valid() const noexcept {
    return dependence.valid() && two_copy_verdict.independent &&
           max_gamma_bound <= kImpossibilityBound;
  }
};

/// Throws NotIndependent for dependent states and InvalidArgument for gammas
/// outside [0, 1] or of the wrong length.
CloningFeasibility clone_feasibility(std::span<const PureState> states,
                                     std::span<const double> gammas);

/// Largest uniform gamma for which the states can be cloned, bisected on
/// [0, 1] to 1e-10.
double max_equal_gamma(std::span<const PureState> states);

/// Builds V on span{psi_k} from the Gram data (failure vectors from a
/// column-order Cholesky factor of X1 - sqrt(G) X2 sqrt(G), so the ancilla
/// has the minimal dimension rank(F)) and extends it isometrically to the
/// orthogonal complement through extra failure rows. Throws InfeasibleError
/// if the gammas are not feasible.
ClonerRealization build_cloner(std::span<const PureState> states,
                               std::span<const double> gammas);

/// Runs the machine on `state` and measures the flag. Exactness is only
/// promised for the hypotheses the machine was built for.
CloneOutcome apply_cloner(const ClonerRealization& machine, const PureState& state,
                          Rng& rng);
CloneOutcome apply_cloner(const ClonerRealization& machine, const PureState& state,
                          std::uint64_t seed);

/// For d+1 states in dimension d (any d independent): with
/// psi_{d+1} = sum_k lambda_k psi_k, linearity of any flagged cloner gives
///
///   sqrt(g_{d+1}) psi_{d+1}^{(x)2} (x) m_{d+1}
///       = sum_k lambda_k sqrt(g_k) psi_k^{(x)2} (x) m_k .
///
/// The lifted vectors are independent, so with L their column matrix every
/// coefficient obeys |c| <= residual / sigma_min(L). The bound reported is
/// the largest gamma (over all d+1 states) compatible with that, which is 0
/// in exact arithmetic. Throws PreconditionFailed as two_copy_independence.
ImpossibilityCertificate impossibility_certificate(std::span<const PureState> states,
                                                   double linearity_residual = 1e-12);

}  // namespace clonesig
