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

namespace clonesig {

/// Ascending eigenvalues of the Hermitian part (A + A^dagger) / 2.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& a);
double min_eigenvalue(const Matrix& a);

/// Singular values in descending order.
Eigen::VectorXd singular_values(const Matrix& a);

/// Entrywise n-th power; applied to a Gram matrix it gives the Gram matrix
/// of the n-fold tensor powers.
Matrix entrywise_power(const Matrix& a, int n);

/// exp(iH) for Hermitian H.
Matrix exp_i_hermitian(const Matrix& h);

/// Factor F (rank x n) with F^dagger F = M for a PSD matrix M, built by an
/// outer-product Cholesky sweep in column order. Pivots below `pivot_tol`
/// are skipped, so the row count equals the numerical rank.
Matrix psd_factor(const Matrix& m, double pivot_tol = 1e-12);

}  // namespace clonesig
