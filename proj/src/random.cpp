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

#include "clonesig/random.hpp"

#include "clonesig/errors.hpp"

#include <cmath>

namespace clonesig {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double standard_normal(Rng& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

int sample_index(std::span<const double> probs, Rng& rng) {
  if (probs.empty()) {
    throw Error(ErrorCode::InvalidArgument, "cannot sample from an empty distribution");
  }
  double total = 0.0;
  for (double p : probs) total += p > 0.0 ? p : 0.0;
  if (!(total > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "distribution has no positive mass");
  }
  const double u = uniform01(rng) * total;
  double acc = 0.0;
  int last_positive = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] <= 0.0) continue;
    acc += probs[k];
    last_positive = static_cast<int>(k);
    if (u < acc) return last_positive;
  }
  return last_positive;
}

PureState random_state(int dim, Rng& rng) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = standard_normal(rng);
    const double im = standard_normal(rng);
    v(i) = Complex(re, im);
  }
  return make_state(v);
}

Matrix random_unitary(int dim, Rng& rng) {
  Matrix z(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = standard_normal(rng);
      const double im = standard_normal(rng);
      z(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

}  // namespace clonesig
