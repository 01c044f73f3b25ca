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
#include "clonesig/embedding.hpp"
#include "clonesig/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace clonesig {
namespace {

using testing::Gen;

TEST(Bloch, RoundTrip) {
  Gen gen(21);
  for (int t = 0; t < 200; ++t) {
    const PureState s = gen.haar_state(2);
    const Eigen::Vector3d r = bloch_vector(s);
    EXPECT_NEAR(r.norm(), 1.0, 1e-13);
    EXPECT_NEAR(fidelity(from_bloch(r), s), 1.0, 1e-13);
  }
  EXPECT_THROW(bloch_vector(basis_state(3, 0)), Error);
}

TEST(Bloch, PolesAndEquator) {
  EXPECT_NEAR(bloch_vector(basis_state(2, 0)).z(), 1.0, 1e-15);
  EXPECT_NEAR(bloch_vector(basis_state(2, 1)).z(), -1.0, 1e-15);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(bloch_vector(make_state({Complex(r), Complex(0.0, r)})).y(), 1.0, 1e-15);
}

// Reconstruction and equal moduli in the returned basis, checked directly.
TEST(CircleDecomposition, RandomTriples) {
  Gen gen(22);
  for (int t = 0; t < 300; ++t) {
    const auto s = gen.haar_states(2, 3);
    const AmplitudeDecomposition dec = common_amplitude_basis(s[0], s[1], s[2]);
    EXPECT_TRUE(dec.basis.is_unitary(1e-12));
    EXPECT_GE(dec.spec[0], dec.spec[1] - 1e-15);
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_GE(fidelity(dec.reconstruct(k), s[k]), 1.0 - 1e-10);
      EXPECT_NEAR(dec.phases[k][0], 0.0, 1e-15);
      const Vector c = dec.basis.matrix().adjoint() * s[k].amplitudes();
      EXPECT_NEAR(std::abs(c(0)), dec.spec[0], 1e-10);
      EXPECT_NEAR(std::abs(c(1)), dec.spec[1], 1e-10);
    }
  }
}

TEST(CircleDecomposition, EquatorTripleHasUniformModuli) {
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<PureState> s;
  for (int k = 0; k < 3; ++k) {
    s.push_back(make_state({Complex(r), std::polar(r, 2.0 * kPi * k / 3.0)}));
  }
  const AmplitudeDecomposition dec = common_amplitude_basis(s[0], s[1], s[2]);
  EXPECT_NEAR(dec.spec[0], r, 1e-12);
  EXPECT_NEAR(dec.spec[1], r, 1e-12);
}

TEST(CircleDecomposition, RejectsRepeatedRay) {
  const PureState a = basis_state(2, 0);
  const PureState b = make_state({Complex(0.0, 1.0), Complex(0.0)});
  try {
    common_amplitude_basis(a, b, basis_state(2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateTriple);
  }
}

// The Fourier basis puts every computational state at modulus 1/sqrt(3).
TEST(Embedding, ComputationalBasisEmbedsViaFourier) {
  const std::vector<PureState> s{basis_state(3, 0), basis_state(3, 1), basis_state(3, 2)};
  Matrix f(3, 3);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) f(j, k) = std::polar(1.0 / std::sqrt(3.0), 2.0 * kPi * j * k / 3.0);
  }
  EXPECT_LT(amplitude_profile_residual(f, s, 1e-3), 1e-28);
  EXPECT_GT(amplitude_profile_residual(Matrix::Identity(3, 3), s, 1e-3), 0.1);

  const EmbeddingSearchResult r = amplitude_profile_embedding(s);
  ASSERT_TRUE(r.decomposition.has_value());
  EXPECT_LT(r.best_residual, 1e-8);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_GE(fidelity(r.decomposition->reconstruct(k), s[k]), 1.0 - 1e-10);
  }
}

// Equal weights on |0>,|1>,|2> force |b_j(k)| = 1/sqrt(3). The fourth state
// then forces b_j(1)/b_j(0) = +-i, so two basis vectors share a sign and
// their overlap has modulus >= 1/3.
TEST(Embedding, ForcedNotFound) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<PureState> s{basis_state(3, 0), basis_state(3, 1), basis_state(3, 2),
                                 make_state({Complex(r), Complex(r), Complex(0.0)})};
  EmbeddingOptions opt;
  opt.starts = 8;
  const EmbeddingSearchResult res = amplitude_profile_embedding(s, opt);
  EXPECT_FALSE(res.decomposition.has_value());
  EXPECT_GT(res.best_residual, 1e-4);
}

TEST(Embedding, RecoversHiddenProfile) {
  Gen gen(23);
  for (int t = 0; t < 3; ++t) {
    const int d = 3;
    const PhaseEnsembleSpec spec(gen.alpha(d));
    std::vector<PureState> hidden;
    for (int k = 0; k < 3; ++k) hidden.push_back(phase_state(spec, PhasePoint(gen.phases(d))));
    EmbeddingOptions opt;
    opt.seed = 5;
    const EmbeddingSearchResult res = amplitude_profile_embedding(hidden, opt);
    ASSERT_TRUE(res.decomposition.has_value()) << "residual " << res.best_residual;
    for (std::size_t k = 0; k < hidden.size(); ++k) {
      EXPECT_GE(fidelity(res.decomposition->reconstruct(k), hidden[k]), 1.0 - 1e-10);
    }
  }
}

TEST(Embedding, Preconditions) {
  const std::vector<PureState> one{basis_state(3, 0)};
  EXPECT_THROW(amplitude_profile_embedding(one), Error);
  const std::vector<PureState> qubits{basis_state(2, 0), basis_state(2, 1)};
  try {
    amplitude_profile_embedding(qubits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidDimension);
  }
  const std::vector<PureState> dup{basis_state(3, 0), basis_state(3, 0)};
  try {
    amplitude_profile_embedding(dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
}

}  // namespace
}  // namespace clonesig
