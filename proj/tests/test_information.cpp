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

#include "clonesig/errors.hpp"
#include "clonesig/information.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace clonesig {
namespace {

TEST(MutualInformation, ExactTables) {
  EXPECT_NEAR(mutual_information({{50, 0}, {0, 50}}), 1.0, 1e-15);
  EXPECT_NEAR(mutual_information({{25, 25}, {25, 25}}), 0.0, 1e-15);
  EXPECT_NEAR(mutual_information({{10, 0, 0}, {0, 10, 0}, {0, 0, 10}}), std::log2(3.0), 1e-14);
  EXPECT_NEAR(mutual_information({{45, 5}, {5, 45}}),
              1.0 - testing::binary_entropy_ref(0.1), 1e-14);
}

TEST(MutualInformation, Errors) {
  try {
    mutual_information({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyData);
  }
  try {
    mutual_information({{1, 2}, {3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidShape);
  }
  EXPECT_THROW(mutual_information({{0, 0}, {0, 0}}), Error);
}

TEST(MutualInformation, BinarySymmetricChannelMonteCarlo) {
  std::mt19937_64 eng(71);
  std::bernoulli_distribution bit(0.5);
  std::bernoulli_distribution flip(0.1);
  CountTable t(2, std::vector<std::uint64_t>(2, 0));
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const int x = bit(eng) ? 1 : 0;
    const int y = flip(eng) ? 1 - x : x;
    ++t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }
  const InformationEstimate e = estimate_mutual_information(t);
  const double exact = 1.0 - testing::binary_entropy_ref(0.1);
  EXPECT_NEAR(exact, 0.531, 1e-3);
  EXPECT_GT(e.sigma, 0.0);
  EXPECT_NEAR(e.bits, exact, 4.0 * e.sigma);
  EXPECT_EQ(e.samples, static_cast<std::uint64_t>(n));
}

TEST(MutualInformation, SigmaShrinksWithSamples) {
  const InformationEstimate small = estimate_mutual_information({{45, 5}, {5, 45}});
  const InformationEstimate big = estimate_mutual_information({{4500, 500}, {500, 4500}});
  EXPECT_LT(big.sigma, small.sigma);
}

TEST(BinaryEntropy, Endpoints) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
  EXPECT_NEAR(binary_entropy(0.11), testing::binary_entropy_ref(0.11), 1e-15);
}

}  // namespace
}  // namespace clonesig
