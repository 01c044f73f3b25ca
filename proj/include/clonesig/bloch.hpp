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

#include <vector>

namespace clonesig {

/// (<X>, <Y>, <Z>) of a qubit state; |0> maps to the north pole (0, 0, 1).
Eigen::Vector3d bloch_vector(const PureState& s);

/// Inverse of bloch_vector up to global phase. The input is normalized;
/// a zero vector throws InvalidArgument.
PureState from_bloch(const Eigen::Vector3d& r);

/// A change of basis in which every input state has the same amplitude
/// moduli `spec.alpha()`; state k is basis * sum_j alpha_j e^{i phi_jk} |j>.
struct AmplitudeDecomposition {
  Operator basis;  // columns are the new basis vectors
  PhaseEnsembleSpec spec;
  std::vector<PhasePoint> phases;  // phases[k][j] = phi_jk, gauge phi_0k = 0
  bool near_pole_warning = false;  // some alpha_j < 1e-8

  PureState reconstruct(std::size_t k) const;
};

/// Three distinct qubit states always lie on one circle of the Bloch sphere.
/// The circle's axis n gives the basis {|n>, |-n>} and the plane offset h
/// (signed distance n . r) gives alpha_0^2 = (1 + h) / 2.
///
/// The axis is oriented so that h >= 0; for great circles (h == 0) its first
/// nonzero component among (z, x, y) is made positive. Throws
/// DegenerateTriple when two inputs are the same ray.
AmplitudeDecomposition common_amplitude_basis(const PureState& s1,
                                              const PureState& s2,
                                              const PureState& s3);

}  // namespace clonesig
