// Copyright 2026 The Blotto Costs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: solve, bounds, sweep, check-hypothesis,
// oracle-diff and lp-stats. Exit codes: 0 success, 1 check failed,
// 2 invalid input, 3 solver failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "blotto/config.h"
#include "blotto/errors.h"
#include "blotto/experiments.h"
#include "blotto/lp_model.h"

namespace {

using nlohmann::json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitSolver = 3;

int Fail(int code, const char* type, const std::string& message) {
  std::cerr << json{{"error", {{"type", type}, {"message", message}}}}.dump() << '\n';
  return code;
}

std::filesystem::path PrepareOut(const std::string& dir) {
  std::filesystem::path p(dir);
  std::filesystem::create_directories(p);
  return p;
}

void WriteJson(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw blotto::ConfigError(path.string(), "cannot write file");
  out << doc.dump(2) << '\n';
}

std::unique_ptr<blotto::lp::Solver> Backend(const std::string& name) {
  return name.empty() ? blotto::lp::DefaultSolver() : blotto::lp::MakeSolver(name);
}

blotto::Player ParsePlayer(const std::string& name) {
  if (name == "A") return blotto::Player::kA;
  if (name == "B") return blotto::Player::kB;
  throw blotto::ConfigError("player", "expected A or B");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria of the discrete Colonel Blotto game with assignment and obtainment "
               "costs"};
  app.require_subcommand(1);
  std::string backend;
  app.add_option("--backend", backend,
                 std::string("LP backend (highs, revised, simplex, ipm, auto); default from ") +
                     blotto::lp::kBackendEnvVar);

  std::string config;
  std::string spec;
  std::string out;
  std::string player = "A";
  std::string statistic = "resources";
  int jobs = 0;
  bool no_solve = false;

  CLI::App* solve = app.add_subcommand("solve", "Certified equilibrium strategy of one player");
  solve->add_option("--config", config, "Game config (JSON)")->required();
  solve->add_option("--player", player, "A or B")->check(CLI::IsMember({"A", "B"}));
  solve->add_option("--out", out, "Output directory")->required();

  CLI::App* bounds = app.add_subcommand("bounds", "Min and max of an equilibrium statistic");
  bounds->add_option("--config", config, "Game config (JSON)")->required();
  bounds->add_option("--statistic", statistic, "resources or expenditure")
      ->check(CLI::IsMember({"resources", "expenditure"}));
  bounds->add_option("--player", player, "A or B")->check(CLI::IsMember({"A", "B"}));
  bounds->add_option("--out", out, "Output directory")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Bounds over a parameter grid (CSV)");
  sweep->add_option("--spec", spec, "Sweep spec (JSON)")->required();
  sweep->add_option("--out", out, "Output directory")->required();
  sweep->add_option("--jobs", jobs, "Concurrent grid points (0: all hardware threads)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* hypothesis =
      app.add_subcommand("check-hypothesis", "Check resource bounds against the predicted cases");
  hypothesis->add_option("--spec", spec, "Sweep spec (JSON)")->required();
  hypothesis->add_option("--out", out, "Output directory")->required();
  hypothesis->add_option("--jobs", jobs, "Concurrent grid points (0: all hardware threads)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* diff = app.add_subcommand("oracle-diff", "Compare the flow LP with the brute-force oracle");
  diff->add_option("--config", config, "Game config (JSON)")->required();
  diff->add_option("--out", out, "Optional output directory");

  CLI::App* stats = app.add_subcommand("lp-stats", "Minimax LP size and solve time");
  stats->add_option("--config", config, "Game config (JSON)")->required();
  stats->add_option("--out", out, "Optional output directory");
  stats->add_flag("--no-solve", no_solve, "Only build the LP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    const auto solver = Backend(backend);
    if (*solve) {
      const blotto::CostBlottoGame game = blotto::ReadGameConfig(config);
      const blotto::EquilibriumReport r = blotto::SolveForPlayer(game, ParsePlayer(player), *solver);
      json doc = blotto::ToJson(r);
      doc["backend"] = solver->Name();
      WriteJson(PrepareOut(out) / ("solve_" + player + ".json"), doc);
      std::cout << "value " << r.value << '\n';
      return 0;
    }
    if (*bounds) {
      const blotto::CostBlottoGame game = blotto::ReadGameConfig(config);
      const blotto::BoundsReport r = blotto::ComputeBounds(
          game, blotto::ParseStatisticKind(statistic), *solver, ParsePlayer(player));
      json doc = blotto::ToJson(r);
      doc["backend"] = solver->Name();
      WriteJson(PrepareOut(out) / ("bounds_" + statistic + "_" + player + ".json"), doc);
      std::cout << statistic << " min " << r.min.bound << " max " << r.max.bound << '\n';
      return 0;
    }
    if (*sweep) {
      const blotto::SweepSpec s = blotto::ReadSweepSpec(spec);
      const auto rows = blotto::RunSweep(s, jobs, backend);
      const auto path = PrepareOut(out) / "sweep.csv";
      std::ofstream csv(path);
      blotto::WriteSweepCsv(rows, csv);
      int failed = 0;
      for (const auto& r : rows) failed += !r.error.empty();
      std::cout << rows.size() << " points, " << failed << " failed -> " << path.string() << '\n';
      return 0;
    }
    if (*hypothesis) {
      const blotto::SweepSpec s = blotto::ReadSweepSpec(spec);
      const blotto::HypothesisReport r = blotto::CheckHypothesis(s, jobs, backend);
      const auto dir = PrepareOut(out);
      WriteJson(dir / "hypothesis.json", blotto::ToJson(r));
      std::ofstream csv(dir / "hypothesis.csv");
      blotto::WriteHypothesisCsv(r, csv);
      std::cout << r.passed << " passed, " << r.failed << " failed, " << r.flagged
                << " on the interval boundary\n";
      return r.ok() ? 0 : kExitCheckFailed;
    }
    if (*diff) {
      const blotto::CostBlottoGame game = blotto::ReadGameConfig(config);
      const blotto::OracleDiffReport r = blotto::OracleDiff(game, *solver);
      const json doc = blotto::ToJson(r);
      if (!out.empty()) WriteJson(PrepareOut(out) / "oracle_diff.json", doc);
      std::cout << doc.dump(2) << '\n';
      return r.pass ? 0 : kExitCheckFailed;
    }
    if (*stats) {
      const blotto::CostBlottoGame game = blotto::ReadGameConfig(config);
      json doc = blotto::ToJson(blotto::ComputeLpStats(game, *solver, !no_solve));
      doc["backend"] = solver->Name();
      if (!out.empty()) WriteJson(PrepareOut(out) / "lp_stats.json", doc);
      std::cout << doc.dump(2) << '\n';
      return 0;
    }
  } catch (const blotto::PreconditionError& e) {
    return Fail(kExitValidation, "validation", e.what());
  } catch (const blotto::ScaleExceededError& e) {
    return Fail(kExitValidation, "scale", e.what());
  } catch (const blotto::SolverError& e) {
    return Fail(kExitSolver, "solver", e.what());
  } catch (const blotto::InvalidFlowError& e) {
    return Fail(kExitSolver, "solver", e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return Fail(kExitValidation, "io", e.what());
  }
  return kExitValidation;
}
