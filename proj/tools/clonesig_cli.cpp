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

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

namespace {

using clonesig::Json;
namespace cli = clonesig::cli;

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw clonesig::Error(clonesig::ErrorCode::ConfigError, "cannot write " + p.string());
  out << text;
}

int run(const std::string& name, const std::string& input_path, const cli::GlobalOptions& g,
        const std::function<cli::CommandResult()>& body) {
  Json manifest = {{"command", name},
                   {"config_path", input_path},
                   {"seed", g.seed ? Json(*g.seed) : Json(nullptr)},
                   {"tool_version", cli::kToolVersion},
                   {"start", utc_now()}};
  int code = cli::kExitOk;
  Json outputs = Json::array();
  try {
    cli::CommandResult r = body();
    code = r.exit_code;
    const std::string json_text = r.report.dump(2) + "\n";
    if (g.format == "csv" && r.csv) {
      std::cout << *r.csv;
    } else {
      std::cout << json_text;
    }
    if (!g.out_dir.empty()) {
      const std::filesystem::path dir(g.out_dir);
      std::filesystem::create_directories(dir);
      write_file(dir / "report.json", json_text);
      outputs.push_back((dir / "report.json").string());
      if (r.csv) {
        const auto csv_path = dir / (name == "audit" ? "trials.csv" : "report.csv");
        write_file(csv_path, *r.csv);
        outputs.push_back(csv_path.string());
      }
    }
    std::cerr << r.summary << "\n";
  } catch (const clonesig::Error& e) {
    code = cli::exit_code_for(e.code());
    std::cerr << "error: " << e.what() << "\n";
    manifest["error"] = e.what();
  } catch (const std::exception& e) {
    code = cli::kExitInternal;
    std::cerr << "internal error: " << e.what() << "\n";
    manifest["error"] = e.what();
  }
  manifest["end"] = utc_now();
  manifest["exit_code"] = code;
  manifest["outputs"] = outputs;
  if (!g.out_dir.empty()) {
    try {
      std::filesystem::create_directories(g.out_dir);
      write_file(std::filesystem::path(g.out_dir) / "manifest.json", manifest.dump(2) + "\n");
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return cli::kExitInput;
    }
  } else {
    std::cerr << "manifest: " << manifest.dump() << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic cloning, remote state preparation and signalling audits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cli::kToolVersion);

  cli::GlobalOptions g;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::uint64_t trials = 0;
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed")->group("Global");
  auto* tol_opt = app.add_option("--tol", tol, "rank tolerance (relative)")->group("Global");
  auto* trials_opt = app.add_option("--trials", trials, "override trial count")->group("Global");
  app.add_option("--out", g.out_dir, "directory for report, CSV and manifest")->group("Global");
  app.add_option("--format", g.format, "stdout format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->group("Global");
  app.fallthrough();

  cli::StateInput states_in;
  auto add_state_file = [&](CLI::App* sub) {
    sub->add_option("file", states_in.path, "state file {\"dim\": d, \"states\": [...]}")
        ->required();
    sub->add_flag("--normalize", states_in.normalize, "rescale non-normalized vectors");
  };

  auto* check = app.add_subcommand("check-independence", "rank and phase-determinant tests");
  add_state_file(check);

  auto* two = app.add_subcommand("two-copy", "independence of the two-copy lifts of d+1 states");
  add_state_file(two);

  cli::CloneOptions clone_opt;
  auto* clone = app.add_subcommand("clone-feasibility", "probabilistic cloning feasibility");
  add_state_file(clone);
  clone->add_option("--gamma", clone_opt.gammas, "per-state success probabilities")
      ->delimiter(',');
  clone->add_flag("--max-equal", clone_opt.max_equal, "report the largest uniform gamma");
  clone->add_flag("--build", clone_opt.build, "include the realized isometry");

  cli::UsdOptions usd_opt;
  auto* usd = app.add_subcommand("usd", "optimal unambiguous discrimination");
  add_state_file(usd);
  usd->add_option("--objective", usd_opt.objective, "average | worst-case")
      ->check(CLI::IsMember({"average", "worst-case"}));
  usd->add_option("--priors", usd_opt.priors, "prior probabilities")->delimiter(',');

  cli::RspOptions rsp_opt;
  auto* rsp = app.add_subcommand("rsp", "exact remote state preparation");
  rsp->add_option("--alpha", rsp_opt.alpha, "Schmidt coefficients")->delimiter(',');
  rsp->add_option("--phases", rsp_opt.phases, "target phases (radians)")->delimiter(',');
  rsp->add_flag("--enumerate", rsp_opt.enumerate, "run every measurement outcome");
  rsp->add_flag("--real", rsp_opt.real_qubit, "real-amplitude qubit protocol");
  rsp->add_option("--amplitudes", rsp_opt.amplitudes, "real qubit target")->delimiter(',');

  auto* circle = app.add_subcommand("circle", "common amplitude basis of three qubit states");
  add_state_file(circle);

  cli::EmbedOptions embed_opt;
  auto* embed = app.add_subcommand("embed", "search for a shared amplitude profile (d > 2)");
  add_state_file(embed);
  embed->add_option("--starts", embed_opt.starts, "multi-start count");

  std::string config_path;
  auto* audit = app.add_subcommand("audit", "signalling audit");
  audit->add_option("config", config_path, "audit config JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInput;
  }
  if (seed_opt->count()) g.seed = seed;
  if (tol_opt->count()) g.tol = tol;
  if (trials_opt->count()) g.trials = trials;

  if (check->parsed()) {
    return run("check-independence", states_in.path, g,
               [&] { return cli::check_independence(states_in, g); });
  }
  if (two->parsed()) {
    return run("two-copy", states_in.path, g, [&] { return cli::two_copy(states_in, g); });
  }
  if (clone->parsed()) {
    return run("clone-feasibility", states_in.path, g,
               [&] { return cli::clone_feasibility(states_in, clone_opt, g); });
  }
  if (usd->parsed()) {
    return run("usd", states_in.path, g, [&] { return cli::usd(states_in, usd_opt, g); });
  }
  if (rsp->parsed()) {
    return run("rsp", "", g, [&] { return cli::rsp(rsp_opt, g); });
  }
  if (circle->parsed()) {
    return run("circle", states_in.path, g, [&] { return cli::circle(states_in, g); });
  }
  if (embed->parsed()) {
    return run("embed", states_in.path, g, [&] { return cli::embed(states_in, embed_opt, g); });
  }
  if (audit->parsed()) {
    return run("audit", config_path, g, [&] { return cli::audit(config_path, g); });
  }
  return cli::kExitInput;
}
