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

#include <cstdint>
#include <random>
#include <span>

namespace clonesig {

// The engine's output sequence is fixed by the standard. The helpers below
// avoid std::*_distribution so seeded runs agree across standard libraries.
using Rng = std::mt19937_64;

/// splitmix64 mix of (seed, stream); used to derive independent per-trial
/// seeds from one master seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Uniform on [0, 1) with 53 random bits.
double uniform01(Rng& rng);

/// Box-Muller standard normal.
double standard_normal(Rng& rng);

/// Index k drawn with probability probs[k] / sum(probs). Negative entries
/// are treated as zero.
int sample_index(std::span<const double> probs, Rng& rng);

/// Haar-random pure state.
PureState random_state(int dim, Rng& rng);

/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
Matrix random_unitary(int dim, Rng& rng);

}  // namespace clonesig
