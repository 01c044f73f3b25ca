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

#include "commands.hpp"

#include "clonesig/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace clonesig::cli {

namespace {

std::vector<PureState> load_states(const StateInput& in) {
  return decode_state_file(read_json_file(in.path), in.normalize);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Reports carry "dim"/"states" so they can be fed back in as state files.
void attach_states(Json& report, const std::vector<PureState>& states) {
  const Json file = encode_state_file(states);
  report["dim"] = file["dim"];
  report["states"] = file["states"];
}

void require_json_format(const GlobalOptions& g, const char* command) {
  if (g.format != "json") {
    throw Error(ErrorCode::InvalidArgument,
                std::string(command) + " supports --format json only");
  }
}

// When the states share one strictly positive moduli profile in the
// computational basis and form a square system, returns their phase matrix.
std::optional<std::vector<PhasePoint>> shared_profile_phases(
    const std::vector<PureState>& states) {
  const int d = states.front().dim();
  if (static_cast<int>(states.size()) != d) return std::nullopt;
  std::vector<PhasePoint> out;
  for (const auto& s : states) {
    std::vector<double> ph;
    for (int j = 0; j < d; ++j) {
      const double ref = std::abs(states.front()[j]);
      if (ref < 1e-9 || std::abs(std::abs(s[j]) - ref) > 1e-9) return std::nullopt;
      ph.push_back(std::arg(s[j]));
    }
    out.emplace_back(std::move(ph));
  }
  return out;
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotIndependent:
    case ErrorCode::NotABasis:
    case ErrorCode::Infeasible:
      return kExitNegative;
    default:
      return kExitInput;
  }
}

CommandResult check_independence(const StateInput& in, const GlobalOptions& g) {
  require_json_format(g, "check-independence");
  const auto states = load_states(in);
  const double tol = g.tol.value_or(kRankTolerance);
  const auto verdict = is_linearly_independent(states, tol);

  CommandResult r;
  r.report["command"] = "check-independence";
  r.report["rank_test"] = encode(verdict);
  if (const auto phases = shared_profile_phases(states)) {
    const Complex det = phase_determinant(*phases);
    r.report["phase_determinant"] = {{"value", encode(det)},
                                     {"modulus", std::abs(det)},
                                     {"tolerance", kDeterminantTolerance},
                                     {"independent", std::abs(det) > kDeterminantTolerance}};
  } else {
    r.report["phase_determinant"] = nullptr;
  }
  r.report["independent"] = verdict.independent;
  attach_states(r.report, states);
  r.exit_code = verdict.independent ? kExitOk : kExitNegative;
  r.summary = std::string(verdict.independent ? "independent" : "dependent") +
              " (min singular value " + fmt(verdict.min_singular_value) + ")";
  return r;
}

CommandResult two_copy(const StateInput& in, const GlobalOptions& g) {
  require_json_format(g, "two-copy");
  const auto states = load_states(in);
  const auto verdict = two_copy_independence(states);
  CommandResult r;
  r.report["command"] = "two-copy";
  r.report["two_copy_verdict"] = encode(verdict);
  r.report["single_copy_verdict"] = encode(is_linearly_independent(states));
  attach_states(r.report, states);
  r.exit_code = verdict.independent ? kExitOk : kExitNegative;
  r.summary = std::string("two-copy set ") + (verdict.independent ? "independent" : "dependent") +
              " in dim " + std::to_string(states.front().dim() * states.front().dim());
  return r;
}

CommandResult clone_feasibility(const StateInput& in, const CloneOptions& opt,
                                const GlobalOptions& g) {
  require_json_format(g, "clone-feasibility");
  const auto states = load_states(in);
  const int d = common_dimension(states);
  CommandResult r;
  r.report["command"] = "clone-feasibility";
  attach_states(r.report, states);

  const auto verdict = is_linearly_independent(states);
  r.report["independence"] = encode(verdict);
  if (!verdict.independent) {
    if (static_cast<int>(states.size()) != d + 1) {
      throw Error(ErrorCode::NotIndependent,
                  "states are dependent and not a (d+1)-set; no certificate applies");
    }
    const auto cert = impossibility_certificate(states);
    r.report["impossibility_certificate"] = encode(cert);
    r.exit_code = kExitNegative;
    r.summary = "dependent set: no probabilistic exact cloner (max gamma bound " +
                fmt(cert.max_gamma_bound) + ")";
    return r;
  }

  std::vector<double> gammas = opt.gammas;
  if (gammas.empty() || opt.max_equal) {
    const double gamma = max_equal_gamma(states);
    r.report["max_equal_gamma"] = gamma;
    if (gammas.empty()) gammas.assign(states.size(), gamma);
  }
  const auto f = clone_feasibility(states, gammas);
  r.report["feasibility"] = encode(f);
  if (opt.build && f.feasible) r.report["machine"] = encode(build_cloner(states, gammas));
  r.exit_code = f.feasible ? kExitOk : kExitNegative;
  r.summary = r.report.contains("max_equal_gamma")
                  ? "max equal gamma " + fmt(r.report["max_equal_gamma"].get<double>())
                  : std::string(f.feasible ? "feasible" : "infeasible") + " (witness " +
                        fmt(f.psd_witness) + ")";
  return r;
}

CommandResult usd(const StateInput& in, const UsdOptions& opt, const GlobalOptions& g) {
  require_json_format(g, "usd");
  const auto states = load_states(in);
  UsdObjective objective;
  if (opt.objective == "average") {
    objective = UsdObjective::Average;
  } else if (opt.objective == "worst-case") {
    objective = UsdObjective::WorstCase;
  } else {
    throw Error(ErrorCode::InvalidArgument, "--objective must be average or worst-case");
  }
  const auto res = optimize_usd(states, opt.priors, objective);
  CommandResult r;
  r.report["command"] = "usd";
  r.report["result"] = encode(res);
  attach_states(r.report, states);
  r.summary = std::string(to_string(objective)) + " success " + fmt(res.objective_value);
  return r;
}

CommandResult rsp(const RspOptions& opt, const GlobalOptions& g) {
  if (g.format != "json" && g.format != "csv") {
    throw Error(ErrorCode::InvalidArgument, "--format must be json or csv");
  }
  const std::uint64_t seed = g.seed.value_or(0);
  std::vector<RspRun> runs;
  Json target;
  if (opt.real_qubit) {
    std::vector<Complex> amps(opt.amplitudes.begin(), opt.amplitudes.end());
    const PureState t = make_state(std::span<const Complex>(amps));
    target = encode(t);
    if (opt.enumerate) {
      runs.push_back(run_rsp_real_qubit_outcome(t, 0));
      runs.push_back(run_rsp_real_qubit_outcome(t, 1));
    } else {
      runs.push_back(run_rsp_real_qubit(t, seed));
    }
  } else {
    const SharedEntangledState shared{PhaseEnsembleSpec(opt.alpha)};
    const PhasePoint point(opt.phases);
    target = encode(phase_state(shared.spec, point));
    if (opt.enumerate) {
      runs = enumerate_rsp(shared, point);
    } else {
      runs.push_back(run_rsp(shared, point, seed));
    }
  }

  CommandResult r;
  r.report["command"] = "rsp";
  r.report["protocol"] = opt.real_qubit ? "real-qubit" : "phase-ensemble";
  r.report["target"] = target;
  Json arr = Json::array();
  std::vector<PureState> finals;
  double worst = 1.0;
  std::ostringstream csv;
  csv << "outcome,cbits_sent,final_fidelity\n";
  for (const auto& run : runs) {
    arr.push_back(encode(run));
    finals.push_back(run.bob_state);
    worst = std::min(worst, run.transcript.final_fidelity);
    csv << run.transcript.outcome << ',' << fmt(run.transcript.cbits_sent) << ','
        << fmt(run.transcript.final_fidelity) << '\n';
  }
  r.report["runs"] = std::move(arr);
  attach_states(r.report, finals);
  if (g.format == "csv") r.csv = csv.str();
  r.summary = std::to_string(runs.size()) + " run(s), worst fidelity " + fmt(worst) +
              ", cbits " + fmt(runs.front().transcript.cbits_sent);
  return r;
}

CommandResult circle(const StateInput& in, const GlobalOptions& g) {
  require_json_format(g, "circle");
  const auto states = load_states(in);
  if (states.size() != 3) {
    throw Error(ErrorCode::InvalidArgument, "circle needs exactly 3 qubit states");
  }
  const auto dec = common_amplitude_basis(states[0], states[1], states[2]);
  CommandResult r;
  r.report["command"] = "circle";
  r.report["decomposition"] = encode(dec);
  Json fids = Json::array();
  Json bloch = Json::array();
  for (std::size_t k = 0; k < 3; ++k) {
    fids.push_back(fidelity(dec.reconstruct(k), states[k]));
    const auto v = bloch_vector(states[k]);
    bloch.push_back({v.x(), v.y(), v.z()});
  }
  r.report["reconstruction_fidelity"] = std::move(fids);
  r.report["bloch_vectors"] = std::move(bloch);
  attach_states(r.report, states);
  r.summary = "alpha = (" + fmt(dec.spec[0]) + ", " + fmt(dec.spec[1]) + ")";
  return r;
}

CommandResult embed(const StateInput& in, const EmbedOptions& opt, const GlobalOptions& g) {
  require_json_format(g, "embed");
  const auto states = load_states(in);
  EmbeddingOptions eo;
  eo.starts = opt.starts;
  eo.seed = g.seed.value_or(0);
  const auto res = amplitude_profile_embedding(states, eo);
  CommandResult r;
  r.report["command"] = "embed";
  r.report["result"] = encode(res);
  attach_states(r.report, states);
  r.exit_code = res.decomposition ? kExitOk : kExitNegative;
  r.summary = std::string(res.decomposition ? "found" : "not found") + " (best residual " +
              fmt(res.best_residual) + ")";
  return r;
}

CommandResult audit(const std::string& config_path, const GlobalOptions& g) {
  if (g.format != "json" && g.format != "csv") {
    throw Error(ErrorCode::InvalidArgument, "--format must be json or csv");
  }
  AuditConfig cfg = decode_audit_config(read_json_file(config_path));
  if (g.seed) cfg.seed = *g.seed;
  if (g.trials) cfg.trials = *g.trials;
  if (cfg.trials == 0) throw Error(ErrorCode::ConfigError, "trials must be positive");
  const auto report = run_signalling_audit(cfg);

  CommandResult r;
  r.report = encode(report);
  r.report["command"] = "audit";
  r.report["config"] = encode(cfg);
  r.csv = trials_csv(report.records);
  r.exit_code = report.violation ? kExitOk : kExitNegative;
  r.summary = "classical cost " + fmt(report.classical_cost_bits) + " bits, conditional info " +
              fmt(report.conditional_info.bits) + " bits (sigma " +
              fmt(report.conditional_info.sigma) + "), violation = " +
              (report.violation ? "true" : "false");
  return r;
}

}  // namespace clonesig::cli
