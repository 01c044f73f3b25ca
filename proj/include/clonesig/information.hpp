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

#include <cstdint>
#include <vector>

namespace clonesig {

/// Joint counts, rows = sent message, columns = observed outcome.
using CountTable = std::vector<std::vector<std::uint64_t>>;

/// Plug-in estimate sum p(x,y) log2[p(x,y) / (p(x) p(y))] with 0 log 0 = 0.
/// Throws EmptyData when the table holds no counts and InvalidShape for
/// ragged rows.
double mutual_information(const CountTable& joint_counts);

struct InformationEstimate {
  double bits = 0.0;
  // Standard error of the plug-in estimate: delta-method variance
  // (E[i^2] - I^2) / N combined in quadrature with the first-order bias
  // (R - 1)(C - 1) / (2 N ln 2), R and C the occupied rows and columns.
  double sigma = 0.0;
  std::uint64_t samples = 0;
};

InformationEstimate estimate_mutual_information(const CountTable& joint_counts);

/// H2(p) in bits.
double binary_entropy(double p);

}  // namespace clonesig
