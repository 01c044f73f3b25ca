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

#include "clonesig/linalg.hpp"

#include "clonesig/errors.hpp"

#include <cmath>

namespace clonesig {

Eigen::VectorXd hermitian_eigenvalues(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::InvalidShape, "eigenvalues need a square matrix");
  }
  const Matrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double min_eigenvalue(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return hermitian_eigenvalues(a).minCoeff();
}

Eigen::VectorXd singular_values(const Matrix& a) {
  if (a.size() == 0) return Eigen::VectorXd();
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

Matrix entrywise_power(const Matrix& a, int n) {
  Matrix out = Matrix::Ones(a.rows(), a.cols());
  for (int k = 0; k < n; ++k) out = out.cwiseProduct(a);
  return out;
}

Matrix exp_i_hermitian(const Matrix& h) {
  const Matrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  const auto& vals = solver.eigenvalues();
  Vector phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) phases(i) = std::polar(1.0, vals(i));
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

Matrix psd_factor(const Matrix& m, double pivot_tol) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::InvalidShape, "psd_factor needs a square matrix");
  }
  const Eigen::Index n = m.rows();
  Matrix work = 0.5 * (m + m.adjoint());
  std::vector<Vector> rows;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double pivot = work(k, k).real();
    if (pivot <= pivot_tol) continue;
    // Row r with r_j = work(k, j) / sqrt(pivot); subtract r^dagger r.
    Vector r = work.row(k).transpose() / std::sqrt(pivot);
    for (Eigen::Index j = 0; j < k; ++j) r(j) = 0.0;
    work -= r.conjugate() * r.transpose();
    rows.push_back(std::move(r));
  }
  Matrix f(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    f.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return f;
}

}  // namespace clonesig
