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

#include "clonesig/information.hpp"

#include "clonesig/errors.hpp"

#include <algorithm>
#include <cmath>

namespace clonesig {

namespace {

struct Marginals {
  std::vector<double> rows;
  std::vector<double> cols;
  double total = 0.0;
};

Marginals marginals(const CountTable& t) {
  if (t.empty() || t.front().empty()) {
    throw Error(ErrorCode::EmptyData, "empty count table");
  }
  Marginals m;
  m.rows.assign(t.size(), 0.0);
  m.cols.assign(t.front().size(), 0.0);
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t[x].size() != m.cols.size()) {
      throw Error(ErrorCode::InvalidShape, "ragged count table");
    }
    for (std::size_t y = 0; y < t[x].size(); ++y) {
      const auto c = static_cast<double>(t[x][y]);
      m.rows[x] += c;
      m.cols[y] += c;
      m.total += c;
    }
  }
  if (!(m.total > 0.0)) throw Error(ErrorCode::EmptyData, "count table sums to zero");
  return m;
}

}  // namespace

double mutual_information(const CountTable& joint_counts) {
  return estimate_mutual_information(joint_counts).bits;
}

InformationEstimate estimate_mutual_information(const CountTable& t) {
  const Marginals m = marginals(t);
  double info = 0.0;
  double second = 0.0;
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t[x].size(); ++y) {
      if (t[x][y] == 0) continue;
      const double c = static_cast<double>(t[x][y]);
      const double pointwise = std::log2(c * m.total / (m.rows[x] * m.cols[y]));
      info += c / m.total * pointwise;
      second += c / m.total * pointwise * pointwise;
    }
  }
  std::size_t occupied_rows = 0;
  std::size_t occupied_cols = 0;
  for (double r : m.rows) occupied_rows += r > 0.0;
  for (double c : m.cols) occupied_cols += c > 0.0;

  const double n = m.total;
  const double variance = std::max(0.0, second - info * info) / n;
  const double bias = static_cast<double>((occupied_rows - 1) * (occupied_cols - 1)) /
                      (2.0 * n * std::log(2.0));
  InformationEstimate e;
  e.bits = std::max(0.0, info);
  e.sigma = std::sqrt(variance + bias * bias);
  e.samples = static_cast<std::uint64_t>(n);
  return e;
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace clonesig
