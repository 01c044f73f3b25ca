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

#include "clonesig/state.hpp"

#include "clonesig/errors.hpp"
#include "clonesig/linalg.hpp"

#include <cmath>
#include <string>

namespace clonesig {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NotInEnsemble: return "NotInEnsemble";
    case ErrorCode::NotRealAmplitude: return "NotRealAmplitude";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::EmptyData: return "EmptyData";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

namespace {

Vector gauge_fixed(const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > 0.0) {
      const Complex phase = std::conj(v(i)) / mag;
      Vector out = v * phase;
      out(i) = Complex(mag, 0.0);
      return out;
    }
  }
  return v;
}

}  // namespace

PureState PureState::canonical() const { return PureState(gauge_fixed(amps_)); }

PureState make_state(const Vector& amplitudes, bool canonical) {
  if (amplitudes.size() < 2) {
    throw Error(ErrorCode::InvalidDimension,
                "a state needs at least 2 amplitudes, got " +
                    std::to_string(amplitudes.size()));
  }
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
    if (!std::isfinite(amplitudes(i).real()) ||
        !std::isfinite(amplitudes(i).imag())) {
      throw Error(ErrorCode::InvalidState, "non-finite amplitude");
    }
  }
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) {
    throw Error(ErrorCode::InvalidState, "zero vector cannot be normalized");
  }
  Vector v = amplitudes / norm;
  return PureState(canonical ? gauge_fixed(v) : std::move(v));
}

PureState make_state(std::span<const Complex> amplitudes, bool canonical) {
  Vector v(static_cast<Eigen::Index>(amplitudes.size()));
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = amplitudes[i];
  }
  return make_state(v, canonical);
}

PureState make_state(std::initializer_list<Complex> amplitudes, bool canonical) {
  return make_state(std::span<const Complex>(amplitudes.begin(), amplitudes.size()),
                    canonical);
}

PureState basis_state(int dim, int index) {
  if (dim < 2) {
    throw Error(ErrorCode::InvalidDimension, "dim must be >= 2");
  }
  if (index < 0 || index >= dim) {
    throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  }
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return make_state(v);
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "inner product of dims " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
  }
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const PureState& a, const PureState& b) {
  return std::norm(inner(a, b));
}

bool distinct(const PureState& a, const PureState& b) {
  return fidelity(a, b) <= kDistinctFidelity;
}

PureState tensor_product(const PureState& a, const PureState& b) {
  const auto& x = a.amplitudes();
  const auto& y = b.amplitudes();
  Vector out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out.segment(i * y.size(), y.size()) = x(i) * y;
  }
  return make_state(out);
}

PureState tensor_power(const PureState& s, int n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "tensor power needs n >= 1");
  }
  PureState out = s;
  for (int k = 1; k < n; ++k) out = tensor_product(out, s);
  return out;
}

double canonical_phase(double phi) noexcept {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

PhaseEnsembleSpec::PhaseEnsembleSpec(std::vector<double> alpha)
    : alpha_(std::move(alpha)) {
  if (alpha_.size() < 2) {
    throw Error(ErrorCode::InvalidDimension, "alpha needs at least 2 entries");
  }
  double sum = 0.0;
  for (double a : alpha_) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw Error(ErrorCode::InvalidArgument,
                  "alpha entries must be strictly positive");
    }
    sum += a * a;
  }
  if (std::abs(sum - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::InvalidArgument,
                "sum of alpha^2 must equal 1, got " + std::to_string(sum));
  }
}

PhaseEnsembleSpec PhaseEnsembleSpec::normalized(std::vector<double> alpha) {
  double sum = 0.0;
  for (double a : alpha) sum += a * a;
  if (sum > 0.0) {
    const double n = std::sqrt(sum);
    for (double& a : alpha) a /= n;
  }
  return PhaseEnsembleSpec(std::move(alpha));
}

PhaseEnsembleSpec PhaseEnsembleSpec::uniform(int dim) {
  if (dim < 2) throw Error(ErrorCode::InvalidDimension, "dim must be >= 2");
  return PhaseEnsembleSpec(
      std::vector<double>(static_cast<std::size_t>(dim), 1.0 / std::sqrt(dim)));
}

PhasePoint::PhasePoint(std::vector<double> phases) : phases_(std::move(phases)) {
  if (phases_.size() < 2) {
    throw Error(ErrorCode::InvalidDimension, "phase point needs at least 2 phases");
  }
  for (double& p : phases_) {
    if (!std::isfinite(p)) {
      throw Error(ErrorCode::InvalidArgument, "non-finite phase");
    }
    p = canonical_phase(p);
  }
}

PureState phase_state(const PhaseEnsembleSpec& spec, const PhasePoint& point) {
  if (spec.dim() != point.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "alpha has dim " + std::to_string(spec.dim()) +
                    ", phases have dim " + std::to_string(point.dim()));
  }
  Vector v(spec.dim());
  for (int j = 0; j < spec.dim(); ++j) {
    v(j) = spec[j] * std::polar(1.0, point[j]);
  }
  return make_state(v);
}

Operator::Operator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw Error(ErrorCode::InvalidShape, "operator must be a nonempty square matrix");
  }
}

Operator Operator::identity(int dim) { return Operator(Matrix::Identity(dim, dim)); }

Operator Operator::projector(const PureState& s) {
  return Operator(s.amplitudes() * s.amplitudes().adjoint());
}

bool Operator::is_hermitian(double tol) const {
  return (m_ - m_.adjoint()).norm() <= tol;
}

bool Operator::is_unitary(double tol) const {
  return (m_.adjoint() * m_ - Matrix::Identity(dim(), dim())).norm() <= tol;
}

bool Operator::is_psd(double tol) const { return min_eigenvalue(m_) >= -tol; }

Complex Operator::expectation(const PureState& s) const {
  if (s.dim() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "operator and state dims differ");
  }
  return s.amplitudes().dot(m_ * s.amplitudes());
}

Vector Operator::apply(const Vector& v) const {
  if (v.size() != m_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "operator and vector dims differ");
  }
  return m_ * v;
}

int common_dimension(std::span<const PureState> states) {
  if (states.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty state list");
  }
  const int d = states.front().dim();
  for (const auto& s : states) {
    if (s.dim() != d) {
      throw Error(ErrorCode::DimensionMismatch,
                  "states have dims " + std::to_string(d) + " and " +
                      std::to_string(s.dim()));
    }
  }
  return d;
}

Matrix column_matrix(std::span<const PureState> states) {
  const int d = common_dimension(states);
  Matrix a(d, static_cast<Eigen::Index>(states.size()));
  for (std::size_t k = 0; k < states.size(); ++k) {
    a.col(static_cast<Eigen::Index>(k)) = states[k].amplitudes();
  }
  return a;
}

Matrix gram_matrix(std::span<const PureState> states) {
  const Matrix a = column_matrix(states);
  return a.adjoint() * a;
}

}  // namespace clonesig
