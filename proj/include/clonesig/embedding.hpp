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

#include "clonesig/bloch.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace clonesig {

struct EmbeddingOptions {
  int starts = 32;
  std::uint64_t seed = 0;
  int max_evaluations_per_start = 6000;
  // Accept a basis once the profile residual falls below this.
  double found_threshold = 1e-8;
  // Smallest squared modulus alpha_j^2 the search will accept.
  double min_weight = 1e-3;
};

struct EmbeddingSearchResult {
  std::optional<AmplitudeDecomposition> decomposition;
  double best_residual = 0.0;
  int best_start = -1;
  int evaluations = 0;
};

/// Residual of a candidate basis: the spread of |<b_j|psi_k>|^2 across the
/// states for each basis vector, plus a penalty for weights below
/// `min_weight`. Zero iff every state has the same moduli profile.
double amplitude_profile_residual(const Matrix& basis,
                                  std::span<const PureState> states,
                                  double min_weight);

/// Heuristic search for a basis in which all `states` share one strictly
/// positive amplitude-modulus profile, i.e. a unitary mapping every state
/// into a single phase ensemble.
///
/// Multi-start Nelder-Mead over U = U0 exp(iH): start 0 is the identity,
/// the remaining starts use Haar-random U0 drawn from `seed`. A not-found
/// result only means the search failed; it is not a proof that no such
/// basis exists.
EmbeddingSearchResult amplitude_profile_embedding(std::span<const PureState> states,
                                                  const EmbeddingOptions& options = {});

}  // namespace clonesig
