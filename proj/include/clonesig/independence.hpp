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

#include "clonesig/state.hpp"

#include <span>
#include <vector>

namespace clonesig {

// Relative rank tolerance: independent iff sigma_min > tol * sigma_max.
inline constexpr double kRankTolerance = 1e-9;
// Absolute threshold on |det| for the phase-matrix criterion.
inline constexpr double kDeterminantTolerance = 1e-9;
// Largest residual accepted for a dependence expansion.
inline constexpr double kDependenceResidual = 1e-9;

struct IndependenceVerdict {
  bool independent = false;
  double min_singular_value = 0.0;
  double max_singular_value = 0.0;
  double tolerance_used = kRankTolerance;
  std::vector<double> singular_values;  // descending; empty when skipped
};

/// Coefficients lambda with states[target_index] = sum_k lambda_k states[k].
struct DependenceCertificate {
  std::vector<Complex> coefficients;
  int target_index = 0;
  double residual = 0.0;

  bool valid() const noexcept { return residual <= kDependenceResidual; }
};

/// Rank test on the matrix whose columns are the states. More states than
/// dimensions short-circuits to dependent without an SVD.
IndependenceVerdict is_linearly_independent(std::span<const PureState> states,
                                            double tol = kRankTolerance);

/// det of the d x d matrix M_jk = e^{i phi_jk}, where phase_matrix[k] holds
/// the phases of state k. For states sum_j alpha_j e^{i phi_jk}|j> with all
/// alpha_j > 0 the state matrix is diag(alpha) M, so the states are
/// independent iff this determinant is nonzero.
Complex phase_determinant(std::span<const PhasePoint> phase_matrix);

/// Expands the last of d+1 states in the first d. Throws NotABasis if the
/// first d are dependent.
DependenceCertificate dependence_coefficients(std::span<const PureState> states);

/// Throws PreconditionFailed unless there are exactly d+1 states in
/// dimension d, pairwise distinct, with every d-subset independent.
void require_two_copy_preconditions(std::span<const PureState> states);

/// True when every `size`-element subset of `states` is independent.
bool every_subset_independent(std::span<const PureState> states, std::size_t size,
                              double tol = kRankTolerance);

/// Rank test on the two-copy lifts psi_k (x) psi_k of d+1 states that
/// satisfy require_two_copy_preconditions. The expansion psi_{d+1}^{(x)2} =
/// sum_k lambda_k psi_k^{(x)2} would equate a product vector with an
/// entangled one, so the lifted set is always independent.
IndependenceVerdict two_copy_independence(std::span<const PureState> states);

}  // namespace clonesig
