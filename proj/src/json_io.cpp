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

#include "clonesig/json_io.hpp"

#include "clonesig/errors.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace clonesig {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::ConfigError, "field '" + field + "': " + why);
}

double decode_real(const Json& j, const std::string& field) {
  if (!j.is_number()) bad(field, "expected a number");
  return j.get<double>();
}

std::vector<double> decode_reals(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(decode_real(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json encode_complexes(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(encode(z));
  return out;
}

}  // namespace

Json encode(Complex z) { return Json::array({z.real(), z.imag()}); }

Json encode(const PureState& s) {
  Json out = Json::array();
  for (int i = 0; i < s.dim(); ++i) out.push_back(encode(s[i]));
  return out;
}

Json encode_matrix(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json encode(const Operator& op) { return encode_matrix(op.matrix()); }

Json encode(const PhaseEnsembleSpec& spec) { return {{"alpha", spec.alpha()}}; }

Json encode(const PhasePoint& point) { return {{"phases", point.phases()}}; }

Json encode(const Povm& povm) {
  Json out = Json::array();
  for (const auto& e : povm.elements) out.push_back(encode(e));
  return out;
}

Json encode(const IndependenceVerdict& v) {
  return {{"independent", v.independent},
          {"min_singular_value", v.min_singular_value},
          {"max_singular_value", v.max_singular_value},
          {"tolerance_used", v.tolerance_used},
          {"singular_values", v.singular_values}};
}

Json encode(const DependenceCertificate& c) {
  return {{"coefficients", encode_complexes(c.coefficients)},
          {"target_index", c.target_index},
          {"residual", c.residual},
          {"valid", c.valid()}};
}

Json encode(const UsdResult& r) {
  return {{"objective", std::string(to_string(r.objective))},
          {"objective_value", r.objective_value},
          {"success_probs", r.success_probs},
          {"remainder_min_eigenvalue", r.remainder_min_eigenvalue},
          {"completeness_error", r.povm.completeness_error()},
          {"povm", encode(r.povm)}};
}

Json encode(const CloningFeasibility& f) {
  return {{"gammas", f.gammas}, {"feasible", f.feasible}, {"psd_witness", f.psd_witness}};
}

Json encode(const ImpossibilityCertificate& c) {
  return {{"valid", c.valid()},
          {"max_gamma_bound", c.max_gamma_bound},
          {"linearity_residual", c.linearity_residual},
          {"lifted_min_singular_value", c.lifted_min_singular_value},
          {"dependence", encode(c.dependence)},
          {"two_copy_verdict", encode(c.two_copy_verdict)}};
}

Json encode(const ClonerRealization& m) {
  Json hyps = Json::array();
  for (const auto& h : m.hypotheses) hyps.push_back(encode(h));
  return {{"input_dim", m.input_dim},
          {"ancilla_dim", m.ancilla_dim},
          {"flags",
           {{"success_rows", m.flags.success_rows},
            {"failure_rows", m.flags.failure_rows},
            {"layout",
             "rows [0, success_rows) hold the two-copy register (flag 0); the "
             "next failure_rows rows hold the failure register (flag 1)"}}},
          {"gammas", m.gammas},
          {"isometry_error", m.isometry_error()},
          {"hypotheses", std::move(hyps)},
          {"isometry", encode_matrix(m.isometry)}};
}

Json encode(const RspTranscript& t) {
  return {{"outcome", t.outcome},
          {"cbits_sent", t.cbits_sent},
          {"correction", encode(t.correction)},
          {"final_fidelity", t.final_fidelity}};
}

Json encode(const RspRun& r) {
  return {{"bob_state", encode(r.bob_state)}, {"transcript", encode(r.transcript)}};
}

Json encode(const AmplitudeDecomposition& d) {
  Json phases = Json::array();
  for (const auto& p : d.phases) phases.push_back(encode(p));
  return {{"basis", encode(d.basis)},
          {"alpha", d.spec.alpha()},
          {"phases", std::move(phases)},
          {"near_pole_warning", d.near_pole_warning}};
}

Json encode(const EmbeddingSearchResult& r) {
  Json out = {{"found", r.decomposition.has_value()},
              {"best_residual", r.best_residual},
              {"best_start", r.best_start},
              {"evaluations", r.evaluations},
              {"note", "not found does not prove that no embedding exists"}};
  if (r.decomposition) out["decomposition"] = encode(*r.decomposition);
  return out;
}

Json encode(const InformationEstimate& e) {
  return {{"bits", e.bits}, {"sigma", e.sigma}, {"samples", e.samples}};
}

Json encode(const AuditConfig& cfg) {
  Json msgs = Json::array();
  for (const auto& m : cfg.messages) msgs.push_back(encode(m));
  Json out = {{"dim", cfg.dim()},
              {"alpha", cfg.spec.alpha()},
              {"messages", std::move(msgs)},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"cloner_mode", std::string(to_string(cfg.cloner_mode))},
              {"decoder_objective", std::string(to_string(cfg.decoder_objective))}};
  if (cfg.gamma) out["gamma"] = *cfg.gamma;
  return out;
}

Json encode(const AuditReport& r) {
  return {{"dim", r.dim},
          {"trials", r.trials},
          {"cloner_mode", std::string(to_string(r.cloner_mode))},
          {"classical_cost_bits", r.classical_cost_bits},
          {"gamma", r.gamma},
          {"decoder_hypotheses", r.decoder_hypotheses},
          {"usd_average_success", r.usd_average_success},
          {"usd_worst_case_success", r.usd_worst_case_success},
          {"decoder_success", r.decoder_success},
          {"conclusive_prob_per_message", r.conclusive_prob_per_message},
          {"conclusive_count", r.conclusive_count},
          {"conclusive_errors", r.conclusive_errors},
          {"min_rsp_fidelity", r.min_rsp_fidelity},
          {"conditional_info_bits", r.conditional_info.bits},
          {"conditional_info_sigma", r.conditional_info.sigma},
          {"unconditional_info_bits", r.unconditional_info.bits},
          {"unconditional_info_sigma", r.unconditional_info.sigma},
          {"violation", r.violation},
          {"impossibility", encode(r.impossibility)},
          {"operationalization", r.operationalization}};
}

Json encode_state_file(const std::vector<PureState>& states) {
  Json arr = Json::array();
  for (const auto& s : states) arr.push_back(encode(s));
  return {{"dim", states.empty() ? 0 : states.front().dim()}, {"states", std::move(arr)}};
}

Complex decode_complex(const Json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) bad(field, "expected [re, im]");
  return {decode_real(j[0], field + "[0]"), decode_real(j[1], field + "[1]")};
}

PureState decode_state(const Json& j, const std::string& field, bool normalize) {
  if (!j.is_array()) bad(field, "expected an array of [re, im] pairs");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = decode_complex(j[i], field + "[" + std::to_string(i) + "]");
  }
  if (v.size() < 2) bad(field, "a state needs at least 2 amplitudes");
  const double norm = v.norm();
  if (!(norm > 0.0)) bad(field, "zero vector");
  if (!normalize && std::abs(norm - 1.0) > 1e-9) {
    bad(field, "vector has norm " + std::to_string(norm) + " (pass --normalize to rescale)");
  }
  return make_state(v);
}

std::vector<PureState> decode_state_file(const Json& j, bool normalize) {
  if (!j.is_object()) bad("<root>", "expected an object with 'dim' and 'states'");
  if (!j.contains("states")) bad("states", "missing");
  const Json& arr = j.at("states");
  if (!arr.is_array() || arr.empty()) bad("states", "expected a nonempty array");
  std::vector<PureState> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    out.push_back(decode_state(arr[k], "states[" + std::to_string(k) + "]", normalize));
  }
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_integer()) bad("dim", "expected an integer");
    const int d = j.at("dim").get<int>();
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (out[k].dim() != d) {
        bad("states[" + std::to_string(k) + "]",
            "has " + std::to_string(out[k].dim()) + " amplitudes but dim is " +
                std::to_string(d));
      }
    }
  }
  return out;
}

Matrix decode_matrix(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) bad(field, "expected an array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) bad(field + "[0]", "expected a row array");
  const std::size_t cols = j[0].size();
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rf = field + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) bad(rf, "ragged row");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          decode_complex(j[r][c], rf + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

Povm decode_povm(const Json& j) {
  if (!j.is_array() || j.size() < 2) bad("povm", "expected at least two matrices");
  Povm p;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string f = "povm[" + std::to_string(k) + "]";
    Matrix m = decode_matrix(j[k], f);
    if (m.rows() != m.cols()) bad(f, "element is not square");
    p.elements.emplace_back(std::move(m));
  }
  return p;
}

PhaseEnsembleSpec decode_spec(const Json& j, const std::string& field) {
  const Json& arr = j.is_object() ? (j.contains("alpha") ? j.at("alpha") : Json()) : j;
  try {
    return PhaseEnsembleSpec(decode_reals(arr, field));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigError) throw;
    bad(field, e.what());
  }
}

PhasePoint decode_phase_point(const Json& j, const std::string& field) {
  const bool wrapped = j.is_object();
  if (wrapped && !j.contains("phases")) bad(field + ".phases", "missing");
  const Json& arr = wrapped ? j.at("phases") : j;
  try {
    return PhasePoint(decode_reals(arr, wrapped ? field + ".phases" : field));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigError) throw;
    bad(field, e.what());
  }
}

AuditConfig decode_audit_config(const Json& j) {
  if (!j.is_object()) bad("<root>", "expected an object");
  AuditConfig cfg;
  if (!j.contains("alpha")) bad("alpha", "missing");
  cfg.spec = decode_spec(j.at("alpha"), "alpha");
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_integer() || j.at("dim").get<int>() != cfg.dim()) {
      bad("dim", "must be an integer equal to the length of alpha");
    }
  }
  if (!j.contains("messages") || !j.at("messages").is_array()) {
    bad("messages", "expected an array of phase points");
  }
  const Json& msgs = j.at("messages");
  for (std::size_t k = 0; k < msgs.size(); ++k) {
    cfg.messages.push_back(decode_phase_point(msgs[k], "messages[" + std::to_string(k) + "]"));
  }
  if (!j.contains("trials")) bad("trials", "missing");
  if (!j.at("trials").is_number_integer() || j.at("trials").get<long long>() <= 0) {
    bad("trials", "must be a positive integer");
  }
  cfg.trials = j.at("trials").get<std::uint64_t>();
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) bad("seed", "must be a non-negative integer");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("cloner_mode")) {
    const auto& v = j.at("cloner_mode");
    if (v == "counterfactual-oracle") {
      cfg.cloner_mode = ClonerMode::CounterfactualOracle;
    } else if (v == "none") {
      cfg.cloner_mode = ClonerMode::None;
    } else {
      bad("cloner_mode", "expected \"counterfactual-oracle\" or \"none\"");
    }
  }
  if (j.contains("gamma")) cfg.gamma = decode_real(j.at("gamma"), "gamma");
  if (j.contains("decoder_objective")) {
    const auto& v = j.at("decoder_objective");
    if (v == "worst-case") {
      cfg.decoder_objective = UsdObjective::WorstCase;
    } else if (v == "average") {
      cfg.decoder_objective = UsdObjective::Average;
    } else {
      bad("decoder_objective", "expected \"worst-case\" or \"average\"");
    }
  }
  return cfg;
}

std::string trials_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << "trial,message,rsp_outcome,clone_flag,decode_outcome\n";
  for (std::size_t t = 0; t < records.size(); ++t) {
    const auto& r = records[t];
    out << t << ',' << r.message << ',' << r.rsp_outcome << ',' << (r.cloned ? 1 : 0) << ',';
    if (r.decoded >= 0) {
      out << r.decoded;
    } else if (r.decoded == kDecodeInconclusive) {
      out << "inconclusive";
    } else {
      out << "clone_failed";
    }
    out << '\n';
  }
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ConfigError, "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace clonesig
