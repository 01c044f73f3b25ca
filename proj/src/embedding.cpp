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

#include "clonesig/embedding.hpp"

#include "clonesig/errors.hpp"
#include "clonesig/linalg.hpp"
#include "clonesig/random.hpp"
#include "nelder_mead.hpp"

#include <cmath>
#include <limits>

namespace clonesig {

namespace {

// d^2 real parameters -> Hermitian matrix (diagonal, then upper triangle
// as re/im pairs).
Matrix hermitian_from_params(const Eigen::VectorXd& x, int d) {
  Matrix h = Matrix::Zero(d, d);
  Eigen::Index p = 0;
  for (int i = 0; i < d; ++i) h(i, i) = x(p++);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double re = x(p++);
      const double im = x(p++);
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
  }
  return h;
}

Eigen::MatrixXd weights(const Matrix& basis, std::span<const PureState> states) {
  const Matrix coords = basis.adjoint() * column_matrix(states);
  return coords.cwiseAbs2();  // (basis index j) x (state k)
}

AmplitudeDecomposition decompose(const Matrix& basis,
                                 std::span<const PureState> states) {
  const Eigen::MatrixXd w = weights(basis, states);
  std::vector<double> alpha(static_cast<std::size_t>(w.rows()));
  for (Eigen::Index j = 0; j < w.rows(); ++j) {
    alpha[static_cast<std::size_t>(j)] = std::sqrt(w.row(j).mean());
  }
  const Matrix coords = basis.adjoint() * column_matrix(states);
  std::vector<PhasePoint> phases;
  for (Eigen::Index k = 0; k < coords.cols(); ++k) {
    const double ref = std::arg(coords(0, k));
    std::vector<double> ph(static_cast<std::size_t>(coords.rows()));
    for (Eigen::Index j = 0; j < coords.rows(); ++j) {
      ph[static_cast<std::size_t>(j)] = std::arg(coords(j, k)) - ref;
    }
    phases.emplace_back(std::move(ph));
  }
  auto spec = PhaseEnsembleSpec::normalized(std::move(alpha));
  bool near_pole = false;
  for (double a : spec.alpha()) near_pole = near_pole || a < 1e-8;
  return {Operator(basis), std::move(spec), std::move(phases), near_pole};
}

}  // namespace

double amplitude_profile_residual(const Matrix& basis,
                                  std::span<const PureState> states,
                                  double min_weight) {
  const Eigen::MatrixXd w = weights(basis, states);
  double r = 0.0;
  for (Eigen::Index j = 0; j < w.rows(); ++j) {
    const double mean = w.row(j).mean();
    r += (w.row(j).array() - mean).square().sum();
    if (mean < min_weight) r += (min_weight - mean) * (min_weight - mean);
  }
  return r;
}

EmbeddingSearchResult amplitude_profile_embedding(std::span<const PureState> states,
                                                  const EmbeddingOptions& options) {
  if (states.size() < 2) {
    throw Error(ErrorCode::PreconditionFailed, "embedding search needs >= 2 states");
  }
  const int d = common_dimension(states);
  if (d <= 2) {
    throw Error(ErrorCode::InvalidDimension,
                "embedding search is for d > 2; use common_amplitude_basis for qubits");
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (!distinct(states[i], states[j])) {
        throw Error(ErrorCode::PreconditionFailed,
                    "states " + std::to_string(i) + " and " + std::to_string(j) +
                        " are the same ray");
      }
    }
  }

  EmbeddingSearchResult result;
  result.best_residual = std::numeric_limits<double>::infinity();
  Rng rng(options.seed);
  constexpr double kPolishTarget = 1e-26;

  for (int start = 0; start < options.starts; ++start) {
    const Matrix u0 = start == 0 ? Matrix(Matrix::Identity(d, d)) : random_unitary(d, rng);
    auto objective = [&](const Eigen::VectorXd& x) {
      return amplitude_profile_residual(u0 * exp_i_hermitian(hermitian_from_params(x, d)),
                                        states, options.min_weight);
    };

    Eigen::VectorXd x = Eigen::VectorXd::Zero(d * d);
    double value = objective(x);
    int budget = options.max_evaluations_per_start;
    double step = 0.5;
    // Restarting the simplex around the incumbent with a shrinking step
    // recovers from the collapse that stalls plain Nelder-Mead.
    while (budget > 0 && value > kPolishTarget) {
      detail::NelderMeadOptions nm;
      nm.initial_step = step;
      nm.max_evaluations = budget;
      nm.target_value = kPolishTarget;
      const auto run = detail::nelder_mead(objective, x, nm);
      budget -= run.evaluations;
      result.evaluations += run.evaluations;
      const bool improved = run.value < value * (1.0 - 1e-3);
      x = run.x;
      value = run.value;
      if (!improved && step < 1e-7) break;
      step = improved ? std::clamp(std::sqrt(std::sqrt(value)), 1e-8, 0.5) : step * 0.1;
    }

    if (value < result.best_residual) {
      result.best_residual = value;
      result.best_start = start;
    }
    if (value < options.found_threshold) {
      const Matrix basis = u0 * exp_i_hermitian(hermitian_from_params(x, d));
      auto dec = decompose(basis, states);
      double worst = 1.0;
      for (std::size_t k = 0; k < states.size(); ++k) {
        worst = std::min(worst, fidelity(dec.reconstruct(k), states[k]));
      }
      if (worst >= 1.0 - 1e-10) {
        result.decomposition = std::move(dec);
        result.best_residual = value;
        result.best_start = start;
        break;
      }
    }
  }
  return result;
}

}  // namespace clonesig
