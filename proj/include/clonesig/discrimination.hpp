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

#include "clonesig/random.hpp"
#include "clonesig/state.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace clonesig {

/// Conclusive elements E_0..E_{n-1} followed by one inconclusive element.
struct Povm {
  std::vector<Operator> elements;

  int conclusive_count() const noexcept {
    return static_cast<int>(elements.size()) - 1;
  }
  int inconclusive_index() const noexcept { return conclusive_count(); }
  int dim() const { return elements.front().dim(); }

  /// Born probabilities <s|E_k|s>.
  std::vector<double> probabilities(const PureState& s) const;
  /// min eigenvalue over all elements.
  double min_element_eigenvalue() const;
  /// || sum_k E_k - I ||.
  double completeness_error() const;
};

enum class UsdObjective { Average, WorstCase };

struct UsdResult {
  Povm povm;
  std::vector<double> success_probs;  // p_k = <psi_k|E_k|psi_k>
  UsdObjective objective = UsdObjective::Average;
  double objective_value = 0.0;
  double remainder_min_eigenvalue = 0.0;  // feasibility witness, >= -1e-10
};

/// Dual vectors with <dual_j|psi_k> = delta_jk, lying in the span of the
/// states. Throws NotIndependent for a dependent set.
std::vector<Vector> reciprocal_basis(std::span<const PureState> states);

/// E_k = p_k |dual_k><dual_k| and E_? = I - sum_k E_k. Throws
/// InfeasibleError (carrying min eig of E_?) when E_? is not PSD.
Povm build_usd_povm(std::span<const PureState> states,
                    std::span<const double> success_probs);

/// Maximizes sum_k eta_k p_k (Average) or min_k p_k (WorstCase) over the
/// feasible set {p : G - diag(p) >= 0}, G the Gram matrix.
///
/// WorstCase is solved exactly by bisection on the uniform ray p = t 1 and
/// returns equal probabilities. Average uses a log-barrier Newton path to
/// approach the optimum from the interior, then pushes each p_k to the PSD
/// boundary by bisection. Empty `priors` means uniform. Deterministic.
/// Throws NotIndependent for dependent states.
UsdResult optimize_usd(std::span<const PureState> states,
                       std::span<const double> priors = {},
                       UsdObjective objective = UsdObjective::Average);

/// Samples an outcome index of `povm` on `state`.
int measure(const Povm& povm, const PureState& state, Rng& rng);
int measure(const Povm& povm, const PureState& state, std::uint64_t seed);

}  // namespace clonesig
