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

// Seeded generators and brute-force reference computations shared by the
// unit tests and the acceptance runner. Nothing here calls the solvers
// under test.

#include "clonesig/state.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace clonesig::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  // Gaussian amplitudes, normalized: Haar on the sphere.
  Vector haar_vector(int d) {
    Vector v(d);
    for (int i = 0; i < d; ++i) v(i) = Complex(normal(), normal());
    return v / v.norm();
  }
  PureState haar_state(int d) { return make_state(haar_vector(d)); }

  std::vector<PureState> haar_states(int d, int n) {
    std::vector<PureState> out;
    for (int k = 0; k < n; ++k) out.push_back(haar_state(d));
    return out;
  }

  // Strictly positive amplitudes bounded away from zero.
  std::vector<double> alpha(int d) {
    std::vector<double> a(static_cast<std::size_t>(d));
    double s = 0.0;
    for (double& x : a) {
      x = uniform(0.2, 1.0);
      s += x * x;
    }
    for (double& x : a) x /= std::sqrt(s);
    return a;
  }

  std::vector<double> phases(int d) {
    std::vector<double> p(static_cast<std::size_t>(d));
    for (double& x : p) x = uniform(0.0, 2.0 * kPi);
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

// Determinant by Gaussian elimination with partial pivoting.
inline Complex gauss_determinant(std::vector<std::vector<Complex>> a) {
  const std::size_t n = a.size();
  Complex det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (std::abs(a[p][c]) == 0.0) return 0.0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Complex f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Two states with real overlap s, in the plane spanned by |0>, |1>.
inline std::pair<PureState, PureState> overlap_pair(double s, int d = 2) {
  Vector a = Vector::Zero(d);
  Vector b = Vector::Zero(d);
  a(0) = 1.0;
  b(0) = s;
  b(1) = std::sqrt(1.0 - s * s);
  return {make_state(a), make_state(b)};
}

// USD of two states with overlap s: (p1, p2) is achievable iff
// (1 - p1)(1 - p2) >= s^2. Grid over p1 with p2 on the boundary, then
// refine around the best cell.
inline double usd_two_state_grid_oracle(double s, double eta1 = 0.5) {
  const double eta2 = 1.0 - eta1;
  auto value = [&](double p1) {
    const double p2 = std::max(0.0, 1.0 - s * s / (1.0 - p1));
    return eta1 * p1 + eta2 * p2;
  };
  double lo = 0.0;
  double hi = 1.0 - s * s;
  double best = 0.0;
  for (int level = 0; level < 8; ++level) {
    const int n = 2000;
    double arg = lo;
    for (int i = 0; i <= n; ++i) {
      const double p1 = lo + (hi - lo) * i / n;
      const double v = value(p1);
      if (v > best) {
        best = v;
        arg = p1;
      }
    }
    const double w = (hi - lo) / n;
    lo = std::max(0.0, arg - w);
    hi = std::min(1.0 - s * s, arg + w);
  }
  return best;
}

// Equal-gamma cloning of two states with real overlap s is feasible iff
// [[1-g, s - g s^2], [s - g s^2, 1-g]] is PSD, i.e. 1 - g >= |s - g s^2|.
// Nested grid: resolution 1e-3, then 1e-6 inside the last feasible cell, ...
inline double clone_two_state_grid_oracle(double s) {
  auto feasible = [&](double g) { return 1.0 - g - std::abs(s - g * s * s) >= 0.0; };
  double lo = 0.0;
  double step = 1e-3;
  for (int level = 0; level < 5; ++level) {
    double g = lo;
    while (g + step <= 1.0 && feasible(g + step)) g += step;
    lo = g;
    step *= 1e-3;
  }
  return lo;
}

inline double binary_entropy_ref(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace clonesig::testing
