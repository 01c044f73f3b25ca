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

// JSON wire formats. Complex numbers are [re, im] pairs, states are arrays
// of pairs, matrices are arrays of rows, angles are radians.
//
//   state file:  {"dim": d, "states": [[[re, im], ...], ...]}
//   spec:        {"alpha": [...]}
//   phase point: {"phases": [...]}
//   POVM:        [matrix, ...]  (conclusive elements, then inconclusive)

#include "clonesig/audit.hpp"
#include "clonesig/bloch.hpp"
#include "clonesig/cloning.hpp"
#include "clonesig/discrimination.hpp"
#include "clonesig/embedding.hpp"
#include "clonesig/independence.hpp"
#include "clonesig/rsp.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace clonesig {

using Json = nlohmann::json;

Json encode(Complex z);
Json encode(const PureState& s);
Json encode_matrix(const Matrix& m);
Json encode(const Operator& op);
Json encode(const PhaseEnsembleSpec& spec);
Json encode(const PhasePoint& point);
Json encode(const Povm& povm);
Json encode(const IndependenceVerdict& v);
Json encode(const DependenceCertificate& c);
Json encode(const UsdResult& r);
Json encode(const CloningFeasibility& f);
Json encode(const ImpossibilityCertificate& c);
Json encode(const ClonerRealization& m);
Json encode(const RspTranscript& t);
Json encode(const RspRun& r);
Json encode(const AmplitudeDecomposition& d);
Json encode(const EmbeddingSearchResult& r);
Json encode(const InformationEstimate& e);
Json encode(const AuditConfig& cfg);
/// Report without the per-trial records (see trials_csv).
Json encode(const AuditReport& r);

Json encode_state_file(const std::vector<PureState>& states);

// Decoders throw Error(ConfigError) naming the offending field.
Complex decode_complex(const Json& j, const std::string& field);
/// With `normalize` false the vector must already have unit norm (1e-9).
PureState decode_state(const Json& j, const std::string& field, bool normalize = false);
std::vector<PureState> decode_state_file(const Json& j, bool normalize = false);
Matrix decode_matrix(const Json& j, const std::string& field);
Povm decode_povm(const Json& j);
PhaseEnsembleSpec decode_spec(const Json& j, const std::string& field = "alpha");
/// Accepts {"phases": [...]} or a bare array.
PhasePoint decode_phase_point(const Json& j, const std::string& field);
AuditConfig decode_audit_config(const Json& j);

/// One line per trial: message,rsp_outcome,clone_flag,decode_outcome.
std::string trials_csv(const std::vector<TrialRecord>& records);

/// Reads and parses a JSON file; throws ConfigError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace clonesig
