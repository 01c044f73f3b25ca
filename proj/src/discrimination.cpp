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

#include "clonesig/discrimination.hpp"

#include "clonesig/errors.hpp"
#include "clonesig/independence.hpp"
#include "clonesig/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace clonesig {

namespace {

constexpr double kPsdTolerance = 1e-10;
constexpr double kBisectionTolerance = 1e-12;

void require_independent(std::span<const PureState> states) {
  const auto v = is_linearly_independent(states);
  if (!v.independent) {
    throw Error(ErrorCode::NotIndependent,
                "unambiguous discrimination needs linearly independent states "
                "(sigma_min = " + std::to_string(v.min_singular_value) + ")");
  }
}

double gram_margin(const Matrix& gram, const Eigen::VectorXd& p) {
  Matrix m = gram;
  for (Eigen::Index k = 0; k < p.size(); ++k) m(k, k) -= p(k);
  return min_eigenvalue(m);
}

// Largest value in [lo, hi] keeping gram - diag(p) PSD when p(k) is varied
// alone; lo must be feasible.
double push_to_boundary(const Matrix& gram, Eigen::VectorXd p, Eigen::Index k,
                        double lo, double hi) {
  p(k) = hi;
  if (gram_margin(gram, p) >= 0.0) return hi;
  while (hi - lo > kBisectionTolerance) {
    const double mid = 0.5 * (lo + hi);
    p(k) = mid;
    if (gram_margin(gram, p) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// Newton ascent on t eta.p + log det(G - P) + sum log p_k along an
// increasing t schedule.
Eigen::VectorXd barrier_path(const Matrix& gram, const Eigen::VectorXd& eta) {
  const Eigen::Index n = gram.rows();
  Eigen::VectorXd p = Eigen::VectorXd::Constant(n, 0.5 * min_eigenvalue(gram));

  auto barrier = [&](const Eigen::VectorXd& q, double t, double& value) {
    if ((q.array() <= 0.0).any()) return false;
    Matrix m = gram;
    for (Eigen::Index k = 0; k < n; ++k) m(k, k) -= q(k);
    Eigen::LLT<Matrix> llt(m);
    if (llt.info() != Eigen::Success) return false;
    double logdet = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) logdet += 2.0 * std::log(llt.matrixL()(k, k).real());
    value = t * eta.dot(q) + logdet + q.array().log().sum();
    return true;
  };

  for (double t = 1.0; t < 1e14; t *= 8.0) {
    for (int iter = 0; iter < 100; ++iter) {
      Matrix m = gram;
      for (Eigen::Index k = 0; k < n; ++k) m(k, k) -= p(k);
      const Matrix s = m.inverse();
      Eigen::VectorXd g(n);
      Eigen::MatrixXd h(n, n);
      for (Eigen::Index k = 0; k < n; ++k) {
        g(k) = t * eta(k) - s(k, k).real() + 1.0 / p(k);
        for (Eigen::Index l = 0; l < n; ++l) h(k, l) = -std::norm(s(k, l));
        h(k, k) -= 1.0 / (p(k) * p(k));
      }
      const Eigen::VectorXd step = h.ldlt().solve(-g);
      const double decrement = g.dot(step);  // Newton decrement squared
      if (!(decrement > 1e-14)) break;

      double f0 = 0.0;
      barrier(p, t, f0);
      double a = 1.0;
      double f1 = 0.0;
      while (a > 1e-12) {
        const Eigen::VectorXd q = p + a * step;
        if (barrier(q, t, f1) && f1 >= f0 + 0.25 * a * g.dot(step)) break;
        a *= 0.5;
      }
      if (a <= 1e-12) break;
      p += a * step;
    }
  }
  return p;
}

}  // namespace

std::vector<double> Povm::probabilities(const PureState& s) const {
  std::vector<double> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.expectation(s).real());
  return out;
}

double Povm::min_element_eigenvalue() const {
  double m = 0.0;
  bool first = true;
  for (const auto& e : elements) {
    const double v = min_eigenvalue(e.matrix());
    m = first ? v : std::min(m, v);
    first = false;
  }
  return m;
}

double Povm::completeness_error() const {
  Matrix sum = Matrix::Zero(dim(), dim());
  for (const auto& e : elements) sum += e.matrix();
  return (sum - Matrix::Identity(dim(), dim())).norm();
}

std::vector<Vector> reciprocal_basis(std::span<const PureState> states) {
  require_independent(states);
  const Matrix a = column_matrix(states);
  const Matrix gram = a.adjoint() * a;
  const Matrix duals = a * gram.inverse();
  std::vector<Vector> out;
  out.reserve(states.size());
  for (Eigen::Index k = 0; k < duals.cols(); ++k) out.emplace_back(duals.col(k));
  return out;
}

Povm build_usd_povm(std::span<const PureState> states,
                    std::span<const double> success_probs) {
  if (success_probs.size() != states.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "need one success probability per state");
  }
  for (double p : success_probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "success probabilities must lie in [0, 1]");
    }
  }
  const auto duals = reciprocal_basis(states);
  const int d = states.front().dim();
  Povm povm;
  Matrix remainder = Matrix::Identity(d, d);
  for (std::size_t k = 0; k < duals.size(); ++k) {
    Matrix e = success_probs[k] * (duals[k] * duals[k].adjoint());
    remainder -= e;
    povm.elements.emplace_back(std::move(e));
  }
  remainder = 0.5 * (remainder + remainder.adjoint());
  const double witness = min_eigenvalue(remainder);
  if (witness < -kPsdTolerance) {
    throw InfeasibleError("inconclusive element is not PSD (min eigenvalue " +
                              std::to_string(witness) + ")",
                          witness);
  }
  povm.elements.emplace_back(std::move(remainder));
  return povm;
}

UsdResult optimize_usd(std::span<const PureState> states, std::span<const double> priors,
                       UsdObjective objective) {
  require_independent(states);
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::VectorXd eta = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  if (!priors.empty()) {
    if (priors.size() != states.size()) {
      throw Error(ErrorCode::InvalidArgument, "need one prior per state");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < priors.size(); ++k) {
      if (!(priors[k] >= 0.0)) throw Error(ErrorCode::InvalidArgument, "negative prior");
      eta(static_cast<Eigen::Index>(k)) = priors[k];
      sum += priors[k];
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw Error(ErrorCode::InvalidArgument, "priors must sum to 1");
    }
  }

  const Matrix gram = gram_matrix(states);
  Eigen::VectorXd p(n);
  if (objective == UsdObjective::WorstCase) {
    double lo = 0.0;
    double hi = 1.0;
    if (gram_margin(gram, Eigen::VectorXd::Constant(n, hi)) >= 0.0) {
      lo = hi;
    }
    while (hi - lo > kBisectionTolerance) {
      const double mid = 0.5 * (lo + hi);
      if (gram_margin(gram, Eigen::VectorXd::Constant(n, mid)) >= 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    p.setConstant(lo);
  } else {
    p = barrier_path(gram, eta);
    // The barrier iterate is strictly interior; close the remaining gap.
    for (int sweep = 0; sweep < 2; ++sweep) {
      for (Eigen::Index k = 0; k < n; ++k) {
        if (eta(k) > 0.0) p(k) = push_to_boundary(gram, p, k, p(k), 1.0);
      }
    }
  }

  UsdResult r;
  r.success_probs.assign(p.data(), p.data() + p.size());
  r.povm = build_usd_povm(states, r.success_probs);
  r.objective = objective;
  r.objective_value = objective == UsdObjective::WorstCase ? p.minCoeff() : eta.dot(p);
  r.remainder_min_eigenvalue = min_eigenvalue(r.povm.elements.back().matrix());
  return r;
}

int measure(const Povm& povm, const PureState& state, Rng& rng) {
  if (state.dim() != povm.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "POVM and state dims differ");
  }
  const auto probs = povm.probabilities(state);
  return sample_index(probs, rng);
}

int measure(const Povm& povm, const PureState& state, std::uint64_t seed) {
  Rng rng(seed);
  return measure(povm, state, rng);
}

}  // namespace clonesig
