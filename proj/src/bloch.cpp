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

#include "clonesig/bloch.hpp"

#include "clonesig/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace clonesig {

Eigen::Vector3d bloch_vector(const PureState& s) {
  if (s.dim() != 2) {
    throw Error(ErrorCode::InvalidDimension,
                "bloch_vector needs a qubit, got dim " + std::to_string(s.dim()));
  }
  const Complex a = s[0];
  const Complex b = s[1];
  const Complex ab = std::conj(a) * b;
  return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)};
}

PureState from_bloch(const Eigen::Vector3d& r) {
  const double n = r.norm();
  if (!(n > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "zero Bloch vector");
  }
  const Eigen::Vector3d u = r / n;
  const double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
  const double phi = std::atan2(u.y(), u.x());
  return make_state({Complex(std::cos(theta / 2), 0.0),
                     std::polar(std::sin(theta / 2), phi)});
}

PureState AmplitudeDecomposition::reconstruct(std::size_t k) const {
  return make_state(basis.matrix() * phase_state(spec, phases.at(k)).amplitudes());
}

namespace {

// Orthonormal pair {|n>, |-n>} as the columns of a unitary.
Matrix axis_basis(const Eigen::Vector3d& n) {
  const PureState up = from_bloch(n);
  const Complex c = up[0];
  const Complex s = up[1];
  Matrix u(2, 2);
  u << c, -std::conj(s), s, std::conj(c);
  return u;
}

}  // namespace

AmplitudeDecomposition common_amplitude_basis(const PureState& s1,
                                              const PureState& s2,
                                              const PureState& s3) {
  const std::array<const PureState*, 3> states{&s1, &s2, &s3};
  for (const auto* s : states) {
    if (s->dim() != 2) {
      throw Error(ErrorCode::InvalidDimension, "common_amplitude_basis needs qubits");
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!distinct(*states[i], *states[j])) {
        throw Error(ErrorCode::DegenerateTriple,
                    "states " + std::to_string(i) + " and " + std::to_string(j) +
                        " are the same ray");
      }
    }
  }

  std::array<Eigen::Vector3d, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = bloch_vector(*states[i]);

  Eigen::Vector3d n = (r[1] - r[0]).cross(r[2] - r[0]);
  n.normalize();
  double h = (n.dot(r[0]) + n.dot(r[1]) + n.dot(r[2])) / 3.0;

  constexpr double kGreatCircle = 1e-12;
  bool flip = h < 0.0;
  if (std::abs(h) <= kGreatCircle) {
    const std::array<double, 3> order{n.z(), n.x(), n.y()};
    for (double c : order) {
      if (std::abs(c) > kGreatCircle) {
        flip = c < 0.0;
        break;
      }
    }
  }
  if (flip) {
    n = -n;
    h = -h;
  }
  h = std::clamp(h, 0.0, 1.0);

  const double a0 = std::sqrt((1.0 + h) / 2.0);
  const double a1 = std::sqrt((1.0 - h) / 2.0);
  const Matrix u = axis_basis(n);

  std::vector<PhasePoint> phases;
  phases.reserve(3);
  for (const auto* s : states) {
    const Vector c = u.adjoint() * s->amplitudes();
    const double ref = std::arg(c(0));
    phases.emplace_back(std::vector<double>{0.0, std::arg(c(1)) - ref});
  }

  AmplitudeDecomposition out{Operator(u), PhaseEnsembleSpec::normalized({a0, a1}),
                             std::move(phases), false};
  out.near_pole_warning = a1 < 1e-8;
  return out;
}

}  // namespace clonesig
