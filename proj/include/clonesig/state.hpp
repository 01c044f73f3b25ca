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

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace clonesig {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Normalization tolerance for every constructed state.
inline constexpr double kNormTolerance = 1e-12;
// Two rays with fidelity above this are treated as the same state.
inline constexpr double kDistinctFidelity = 1.0 - 1e-9;
// Tolerance for the Hermitian / unitary / PSD predicates.
inline constexpr double kOperatorTolerance = 1e-10;

/// A normalized pure state of a d-level system, d >= 2.
///
/// Equality of states is always a ray question; compare with fidelity(),
/// never componentwise.
class PureState {
 public:
  int dim() const noexcept { return static_cast<int>(amps_.size()); }
  const Vector& amplitudes() const noexcept { return amps_; }
  Complex operator[](int i) const { return amps_(i); }

  /// Same ray with the first nonzero amplitude made real and positive.
  PureState canonical() const;

 private:
  friend PureState make_state(const Vector& amplitudes, bool canonical);
  explicit PureState(Vector amps) : amps_(std::move(amps)) {}

  Vector amps_;
};

/// Normalizes `amplitudes` into a state. Throws InvalidDimension for fewer
/// than two amplitudes and InvalidState for a zero vector.
PureState make_state(const Vector& amplitudes, bool canonical = false);
PureState make_state(std::span<const Complex> amplitudes, bool canonical = false);
PureState make_state(std::initializer_list<Complex> amplitudes, bool canonical = false);

PureState basis_state(int dim, int index);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const PureState& a, const PureState& b);

/// |<a|b>|^2.
double fidelity(const PureState& a, const PureState& b);

/// True when the two states are different rays (fidelity <= 1 - 1e-9).
bool distinct(const PureState& a, const PureState& b);

PureState tensor_product(const PureState& a, const PureState& b);
PureState tensor_power(const PureState& s, int n);

/// Maps any real angle onto [0, 2pi).
double canonical_phase(double phi) noexcept;

/// Strictly positive amplitude profile (alpha_0, ..., alpha_{d-1}) with unit
/// Euclidean norm.
class PhaseEnsembleSpec {
 public:
  explicit PhaseEnsembleSpec(std::vector<double> alpha);

  /// Rescales a positive profile to unit norm before validating it.
  static PhaseEnsembleSpec normalized(std::vector<double> alpha);
  static PhaseEnsembleSpec uniform(int dim);

  int dim() const noexcept { return static_cast<int>(alpha_.size()); }
  const std::vector<double>& alpha() const noexcept { return alpha_; }
  double operator[](int i) const { return alpha_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<double> alpha_;
};

/// Point on the d-torus; every phase stored in [0, 2pi).
class PhasePoint {
 public:
  explicit PhasePoint(std::vector<double> phases);

  int dim() const noexcept { return static_cast<int>(phases_.size()); }
  const std::vector<double>& phases() const noexcept { return phases_; }
  double operator[](int i) const { return phases_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<double> phases_;
};

/// sum_j alpha_j e^{i phi_j} |j>.
PureState phase_state(const PhaseEnsembleSpec& spec, const PhasePoint& point);

/// Square complex matrix with the usual structural predicates.
class Operator {
 public:
  explicit Operator(Matrix m);

  static Operator identity(int dim);
  static Operator projector(const PureState& s);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }

  bool is_hermitian(double tol = kOperatorTolerance) const;
  bool is_unitary(double tol = kOperatorTolerance) const;
  bool is_psd(double tol = kOperatorTolerance) const;

  /// <s|A|s>.
  Complex expectation(const PureState& s) const;
  Vector apply(const Vector& v) const;

 private:
  Matrix m_;
};

/// Matrix whose k-th column holds the amplitudes of states[k].
Matrix column_matrix(std::span<const PureState> states);

/// Gram matrix G_jk = <psi_j|psi_k>.
Matrix gram_matrix(std::span<const PureState> states);

/// Requires every state to share one dimension; returns it.
int common_dimension(std::span<const PureState> states);

}  // namespace clonesig
