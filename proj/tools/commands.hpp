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

#include "clonesig/errors.hpp"
#include "clonesig/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace clonesig::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit-code vocabulary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNegative = 10;

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::uint64_t> trials;
  std::string out_dir;
  std::string format = "json";
};

struct CommandResult {
  Json report;
  int exit_code = kExitOk;
  std::string summary;                 // one human-readable line
  std::optional<std::string> csv;      // tabular payload, when the command has one
};

struct StateInput {
  std::string path;
  bool normalize = false;
};

CommandResult check_independence(const StateInput& in, const GlobalOptions& g);
CommandResult two_copy(const StateInput& in, const GlobalOptions& g);

struct CloneOptions {
  std::vector<double> gammas;
  bool max_equal = false;
  bool build = false;
};
CommandResult clone_feasibility(const StateInput& in, const CloneOptions& opt,
                                const GlobalOptions& g);

struct UsdOptions {
  std::string objective = "average";
  std::vector<double> priors;
};
CommandResult usd(const StateInput& in, const UsdOptions& opt, const GlobalOptions& g);

struct RspOptions {
  std::vector<double> alpha;
  std::vector<double> phases;
  bool enumerate = false;
  bool real_qubit = false;
  std::vector<double> amplitudes;
};
CommandResult rsp(const RspOptions& opt, const GlobalOptions& g);

CommandResult circle(const StateInput& in, const GlobalOptions& g);

struct EmbedOptions {
  int starts = 32;
};
CommandResult embed(const StateInput& in, const EmbedOptions& opt, const GlobalOptions& g);

CommandResult audit(const std::string& config_path, const GlobalOptions& g);

/// Maps a library error to the exit-code vocabulary.
int exit_code_for(ErrorCode code) noexcept;

}  // namespace clonesig::cli
