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

#include "clonesig/independence.hpp"

#include "clonesig/errors.hpp"
#include "clonesig/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace clonesig {

IndependenceVerdict is_linearly_independent(std::span<const PureState> states,
                                            double tol) {
  const int d = common_dimension(states);
  IndependenceVerdict v;
  v.tolerance_used = tol;
  if (static_cast<int>(states.size()) > d) return v;

  const Eigen::VectorXd sv = singular_values(column_matrix(states));
  v.singular_values.assign(sv.data(), sv.data() + sv.size());
  v.max_singular_value = sv.maxCoeff();
  v.min_singular_value = sv.minCoeff();
  v.independent = v.min_singular_value > tol * v.max_singular_value;
  return v;
}

Complex phase_determinant(std::span<const PhasePoint> phase_matrix) {
  const auto n = static_cast<int>(phase_matrix.size());
  if (n == 0) throw Error(ErrorCode::InvalidShape, "empty phase matrix");
  for (const auto& p : phase_matrix) {
    if (p.dim() != n) {
      throw Error(ErrorCode::InvalidShape,
                  std::to_string(n) + " phase points of dim " + std::to_string(p.dim()) +
                      " do not form a square matrix");
    }
  }
  Matrix m(n, n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) m(j, k) = std::polar(1.0, phase_matrix[k][j]);
  }
  return m.partialPivLu().determinant();
}

DependenceCertificate dependence_coefficients(std::span<const PureState> states) {
  const int d = common_dimension(states);
  if (static_cast<int>(states.size()) != d + 1) {
    throw Error(ErrorCode::InvalidArgument,
                "expected d+1 = " + std::to_string(d + 1) + " states, got " +
                    std::to_string(states.size()));
  }
  const auto basis = states.first(static_cast<std::size_t>(d));
  if (!is_linearly_independent(basis).independent) {
    throw Error(ErrorCode::NotABasis, "the first d states are linearly dependent");
  }
  const Matrix a = column_matrix(basis);
  const Vector& target = states[static_cast<std::size_t>(d)].amplitudes();
  const Vector lambda = a.colPivHouseholderQr().solve(target);

  DependenceCertificate c;
  c.coefficients.assign(lambda.data(), lambda.data() + lambda.size());
  c.target_index = d;
  c.residual = (a * lambda - target).norm();
  return c;
}

bool every_subset_independent(std::span<const PureState> states, std::size_t size,
                              double tol) {
  const std::size_t n = states.size();
  if (size > n) return false;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
  std::vector<PureState> subset;
  do {
    subset.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) subset.push_back(states[i]);
    }
    if (!is_linearly_independent(subset, tol).independent) return false;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return true;
}

void require_two_copy_preconditions(std::span<const PureState> states) {
  const int d = common_dimension(states);
  if (static_cast<int>(states.size()) != d + 1) {
    throw Error(ErrorCode::PreconditionFailed,
                "arity: expected d+1 = " + std::to_string(d + 1) + " states, got " +
                    std::to_string(states.size()));
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (!distinct(states[i], states[j])) {
        throw Error(ErrorCode::PreconditionFailed,
                    "pairwise distinctness: states " + std::to_string(i) + " and " +
                        std::to_string(j) + " are the same ray");
      }
    }
  }
  if (!every_subset_independent(states, static_cast<std::size_t>(d))) {
    throw Error(ErrorCode::PreconditionFailed,
                "any-d independence: some " + std::to_string(d) +
                    " of the states are linearly dependent");
  }
}

IndependenceVerdict two_copy_independence(std::span<const PureState> states) {
  require_two_copy_preconditions(states);
  std::vector<PureState> lifted;
  lifted.reserve(states.size());
  for (const auto& s : states) lifted.push_back(tensor_power(s, 2));
  return is_linearly_independent(lifted);
}

}  // namespace clonesig
