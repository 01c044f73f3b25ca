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

#include "clonesig/cloning.hpp"

#include "clonesig/errors.hpp"
#include "clonesig/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace clonesig {

namespace {

void validate_gammas(std::span<const PureState> states, std::span<const double> gammas) {
  if (gammas.size() != states.size()) {
    throw Error(ErrorCode::InvalidArgument, "need one gamma per state");
  }
  for (double g : gammas) {
    if (!(g >= 0.0 && g <= 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "gamma values must lie in [0, 1]");
    }
  }
}

void require_independent(std::span<const PureState> states) {
  if (!is_linearly_independent(states).independent) {
    throw Error(ErrorCode::NotIndependent,
                "probabilistic exact cloning needs linearly independent states; "
                "use impossibility_certificate for dependent sets");
  }
}

Matrix failure_gram(const Matrix& x1, std::span<const double> gammas) {
  const Matrix x2 = entrywise_power(x1, 2);
  Matrix m = x1;
  for (Eigen::Index j = 0; j < x1.rows(); ++j) {
    for (Eigen::Index k = 0; k < x1.cols(); ++k) {
      m(j, k) -= std::sqrt(gammas[static_cast<std::size_t>(j)] *
                           gammas[static_cast<std::size_t>(k)]) *
                 x2(j, k);
    }
  }
  return m;
}

}  // namespace

double ClonerRealization::isometry_error() const {
  const auto n = isometry.cols();
  return (isometry.adjoint() * isometry - Matrix::Identity(n, n)).norm();
}

CloningFeasibility clone_feasibility(std::span<const PureState> states,
                                     std::span<const double> gammas) {
  validate_gammas(states, gammas);
  require_independent(states);
  CloningFeasibility f;
  f.gammas.assign(gammas.begin(), gammas.end());
  f.psd_witness = min_eigenvalue(failure_gram(gram_matrix(states), gammas));
  f.feasible = f.psd_witness >= -kClonePsdTolerance;
  return f;
}

double max_equal_gamma(std::span<const PureState> states) {
  require_independent(states);
  const Matrix x1 = gram_matrix(states);
  auto feasible = [&](double g) {
    const std::vector<double> gs(states.size(), g);
    return min_eigenvalue(failure_gram(x1, gs)) >= 0.0;
  };
  if (feasible(1.0)) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

ClonerRealization build_cloner(std::span<const PureState> states,
                               std::span<const double> gammas) {
  const auto f = clone_feasibility(states, gammas);
  if (!f.feasible) {
    throw InfeasibleError("cloning probabilities are not achievable", f.psd_witness);
  }
  const int d = common_dimension(states);
  const auto n = static_cast<Eigen::Index>(states.size());
  const Matrix a = column_matrix(states);
  const Matrix x1 = a.adjoint() * a;

  // Failure vectors: columns of F with F^dagger F = X1 - sqrt(G) X2 sqrt(G).
  const Matrix fail = psd_factor(failure_gram(x1, gammas));
  const Eigen::Index rank_f = fail.rows();
  const Eigen::Index complement = d - n;

  const Eigen::Index rows = static_cast<Eigen::Index>(d) * d + rank_f + complement;
  Matrix images = Matrix::Zero(rows, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& s = states[static_cast<std::size_t>(k)];
    images.col(k).head(d * d) =
        std::sqrt(gammas[static_cast<std::size_t>(k)]) * tensor_power(s, 2).amplitudes();
    if (rank_f > 0) images.col(k).segment(d * d, rank_f) = fail.col(k);
  }

  // V restricted to the span: images * (A^dagger A)^{-1} A^dagger.
  const Matrix pinv = x1.inverse() * a.adjoint();
  Matrix v = images * pinv;

  if (complement > 0) {
    // Orthonormal basis of span{psi_k}^perp, sent to fresh failure rows.
    Eigen::HouseholderQR<Matrix> qr(a);
    const Matrix q = qr.householderQ() * Matrix::Identity(d, d);
    const Matrix perp = q.rightCols(complement);
    v.bottomRows(complement) = perp.adjoint();
  }

  ClonerRealization m;
  m.input_dim = d;
  m.ancilla_dim = static_cast<int>(rank_f + complement);
  m.isometry = std::move(v);
  m.flags = {d * d, m.ancilla_dim};
  m.hypotheses.assign(states.begin(), states.end());
  m.gammas.assign(gammas.begin(), gammas.end());
  return m;
}

CloneOutcome apply_cloner(const ClonerRealization& machine, const PureState& state,
                          Rng& rng) {
  if (state.dim() != machine.input_dim) {
    throw Error(ErrorCode::DimensionMismatch, "machine and state dims differ");
  }
  const Vector out = machine.isometry * state.amplitudes();
  const Vector success = out.head(machine.flags.success_rows);
  CloneOutcome r;
  r.success_probability = std::min(1.0, success.squaredNorm());
  if (uniform01(rng) < r.success_probability) {
    r.success = true;
    r.output = make_state(success);
  }
  return r;
}

CloneOutcome apply_cloner(const ClonerRealization& machine, const PureState& state,
                          std::uint64_t seed) {
  Rng rng(seed);
  return apply_cloner(machine, state, rng);
}

ImpossibilityCertificate impossibility_certificate(std::span<const PureState> states,
                                                   double linearity_residual) {
  ImpossibilityCertificate c;
  c.two_copy_verdict = two_copy_independence(states);
  c.dependence = dependence_coefficients(states);
  c.lifted_min_singular_value = c.two_copy_verdict.min_singular_value;
  c.linearity_residual = linearity_residual;

  // Coefficient vector c = (-lambda_1 sqrt(g_1), ..., sqrt(g_{d+1})) must
  // satisfy ||L c|| <= residual, hence |c_i| <= residual / sigma_min.
  const double sigma = c.lifted_min_singular_value;
  if (!(sigma > 0.0)) {
    c.max_gamma_bound = 1.0;
    return c;
  }
  const double coeff_bound = linearity_residual / sigma;
  double bound = coeff_bound * coeff_bound;  // the (d+1)-th state
  for (const auto& lambda : c.dependence.coefficients) {
    const double mag = std::abs(lambda);
    if (mag > 0.0) bound = std::max(bound, (coeff_bound / mag) * (coeff_bound / mag));
    else bound = 1.0;  // unconstrained by linearity
  }
  c.max_gamma_bound = std::min(bound, 1.0);
  return c;
}

}  // namespace clonesig
