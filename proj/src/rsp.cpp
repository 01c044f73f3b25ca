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

#include "clonesig/rsp.hpp"

#include "clonesig/errors.hpp"

#include <algorithm>
#include <cmath>

namespace clonesig {

namespace {

void require_supported(int d) {
  if (!is_supported_rsp_dimension(d)) {
    throw Error(ErrorCode::UnsupportedDimension,
                "RSP supports d in {2,3,4,5,8,16}, got " + std::to_string(d));
  }
}

void require_matching(const SharedEntangledState& shared, const PhasePoint& target) {
  if (shared.dim() != target.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "shared state has dim " + std::to_string(shared.dim()) +
                    ", target has dim " + std::to_string(target.dim()));
  }
}

Complex root_of_unity(int d, long long power) {
  const long long r = ((power % d) + d) % d;
  return std::polar(1.0, kTwoPi * static_cast<double>(r) / d);
}

// Bob's unnormalized conditional vector for Alice outcome b:
// (<b| (x) I) |psi>_AB.
Vector bob_branch(const Matrix& joint, const PureState& b) {
  return joint.transpose() * b.amplitudes().conjugate();
}

RspRun finish(const SharedEntangledState& shared, const PhasePoint& target,
              const Vector& branch, int m) {
  const int d = shared.dim();
  Matrix corr = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) corr(j, j) = root_of_unity(d, -static_cast<long long>(j) * m);
  const PureState bob = make_state(corr * branch);
  const PureState want = phase_state(shared.spec, target);
  RspTranscript t;
  t.outcome = m;
  t.cbits_sent = std::log2(static_cast<double>(d));
  t.correction = Operator(std::move(corr));
  t.final_fidelity = fidelity(bob, want);
  return {bob, std::move(t)};
}

}  // namespace

bool is_supported_rsp_dimension(int d) noexcept {
  return d == 2 || d == 3 || d == 4 || d == 5 || d == 8 || d == 16;
}

Matrix SharedEntangledState::joint_amplitudes() const {
  Matrix j = Matrix::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) j(i, i) = spec[i];
  return j;
}

std::vector<PureState> alice_measurement_basis(const PhaseEnsembleSpec& spec,
                                               const PhasePoint& target) {
  if (spec.dim() != target.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "spec and target dims differ");
  }
  const int d = spec.dim();
  std::vector<PureState> basis;
  basis.reserve(static_cast<std::size_t>(d));
  for (int m = 0; m < d; ++m) {
    Vector v(d);
    for (int j = 0; j < d; ++j) {
      v(j) = std::polar(1.0, -target[j]) * root_of_unity(d, -static_cast<long long>(j) * m) /
             std::sqrt(static_cast<double>(d));
    }
    basis.push_back(make_state(v));
  }
  return basis;
}

std::vector<double> rsp_outcome_probabilities(const SharedEntangledState& shared,
                                              const PhasePoint& target) {
  require_matching(shared, target);
  const Matrix joint = shared.joint_amplitudes();
  std::vector<double> probs;
  for (const auto& b : alice_measurement_basis(shared.spec, target)) {
    probs.push_back(bob_branch(joint, b).squaredNorm());
  }
  return probs;
}

RspRun run_rsp_outcome(const SharedEntangledState& shared, const PhasePoint& target,
                       int outcome) {
  require_matching(shared, target);
  require_supported(shared.dim());
  if (outcome < 0 || outcome >= shared.dim()) {
    throw Error(ErrorCode::InvalidArgument, "outcome out of range");
  }
  const auto basis = alice_measurement_basis(shared.spec, target);
  const Vector branch =
      bob_branch(shared.joint_amplitudes(), basis[static_cast<std::size_t>(outcome)]);
  return finish(shared, target, branch, outcome);
}

RspRun run_rsp(const SharedEntangledState& shared, const PhasePoint& target, Rng& rng) {
  require_matching(shared, target);
  require_supported(shared.dim());
  const Matrix joint = shared.joint_amplitudes();
  const auto basis = alice_measurement_basis(shared.spec, target);
  std::vector<Vector> branches;
  std::vector<double> probs;
  for (const auto& b : basis) {
    branches.push_back(bob_branch(joint, b));
    probs.push_back(branches.back().squaredNorm());
  }
  const int m = sample_index(probs, rng);
  return finish(shared, target, branches[static_cast<std::size_t>(m)], m);
}

RspRun run_rsp(const SharedEntangledState& shared, const PhasePoint& target,
               std::uint64_t seed) {
  Rng rng(seed);
  return run_rsp(shared, target, rng);
}

RspRun run_rsp(const SharedEntangledState& shared, const PureState& target,
               std::uint64_t seed) {
  if (target.dim() != shared.dim()) {
    throw Error(ErrorCode::NotInEnsemble, "target dimension differs from the shared state");
  }
  std::vector<double> phases;
  for (int j = 0; j < target.dim(); ++j) {
    if (std::abs(std::abs(target[j]) - shared.spec[j]) > 1e-10) {
      throw Error(ErrorCode::NotInEnsemble,
                  "amplitude modulus " + std::to_string(j) +
                      " does not match the shared Schmidt profile");
    }
    phases.push_back(std::arg(target[j]));
  }
  return run_rsp(shared, PhasePoint(std::move(phases)), seed);
}

std::vector<RspRun> enumerate_rsp(const SharedEntangledState& shared,
                                  const PhasePoint& target) {
  std::vector<RspRun> runs;
  for (int m = 0; m < shared.dim(); ++m) runs.push_back(run_rsp_outcome(shared, target, m));
  return runs;
}

Matrix bob_marginal_before_message(const SharedEntangledState& shared,
                                   std::span<const PureState> alice_basis) {
  const int d = shared.dim();
  if (static_cast<int>(alice_basis.size()) != d) {
    throw Error(ErrorCode::InvalidArgument, "Alice's basis must have d elements");
  }
  const Matrix joint = shared.joint_amplitudes();
  Matrix rho = Matrix::Zero(d, d);
  for (const auto& b : alice_basis) {
    if (b.dim() != d) throw Error(ErrorCode::DimensionMismatch, "basis vector dim");
    const Vector v = bob_branch(joint, b);
    rho += v * v.adjoint();
  }
  return rho;
}

namespace {

PureState require_real_qubit(const PureState& target) {
  if (target.dim() != 2) {
    throw Error(ErrorCode::UnsupportedDimension,
                "real-amplitude RSP is implemented for d = 2 only");
  }
  const PureState t = target.canonical();
  for (int j = 0; j < 2; ++j) {
    if (std::abs(t[j].imag()) > 1e-12) {
      throw Error(ErrorCode::NotRealAmplitude, "target has a complex amplitude");
    }
  }
  return make_state({Complex(t[0].real(), 0.0), Complex(t[1].real(), 0.0)});
}

std::vector<PureState> real_qubit_alice_basis(const PureState& t) {
  const double c = t[0].real();
  const double s = t[1].real();
  return {t, make_state({Complex(-s, 0.0), Complex(c, 0.0)})};
}

Matrix max_entangled_joint() { return Matrix::Identity(2, 2) / std::sqrt(2.0); }

RspRun real_qubit_branch(const PureState& t, const Vector& branch, int outcome) {
  Matrix corr = Matrix::Identity(2, 2);
  if (outcome == 1) corr << 0.0, 1.0, -1.0, 0.0;
  const PureState bob = make_state(corr * branch);
  RspTranscript tr;
  tr.outcome = outcome;
  tr.cbits_sent = 1.0;
  tr.correction = Operator(std::move(corr));
  tr.final_fidelity = fidelity(bob, t);
  return {bob, std::move(tr)};
}

}  // namespace

RspRun run_rsp_real_qubit_outcome(const PureState& target, int outcome) {
  const PureState t = require_real_qubit(target);
  if (outcome != 0 && outcome != 1) {
    throw Error(ErrorCode::InvalidArgument, "qubit outcome must be 0 or 1");
  }
  const auto basis = real_qubit_alice_basis(t);
  return real_qubit_branch(
      t, bob_branch(max_entangled_joint(), basis[static_cast<std::size_t>(outcome)]),
      outcome);
}

RspRun run_rsp_real_qubit(const PureState& target, Rng& rng) {
  const PureState t = require_real_qubit(target);
  const Matrix joint = max_entangled_joint();
  std::vector<Vector> branches;
  std::vector<double> probs;
  for (const auto& a : real_qubit_alice_basis(t)) {
    branches.push_back(bob_branch(joint, a));
    probs.push_back(branches.back().squaredNorm());
  }
  const int m = sample_index(probs, rng);
  return real_qubit_branch(t, branches[static_cast<std::size_t>(m)], m);
}

RspRun run_rsp_real_qubit(const PureState& target, std::uint64_t seed) {
  Rng rng(seed);
  return run_rsp_real_qubit(target, rng);
}

}  // namespace clonesig
