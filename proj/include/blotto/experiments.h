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

#ifndef BLOTTO_EXPERIMENTS_H_
#define BLOTTO_EXPERIMENTS_H_

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "blotto/config.h"
#include "blotto/flow_lp.h"
#include "blotto/game.h"
#include "blotto/lp_model.h"
#include "blotto/strategy_tools.h"

namespace blotto {

// Certified equilibrium strategy of one player.
struct EquilibriumReport {
  Player player = Player::kA;
  double value = 0.0;                    // zero-sum value for `player`
  MixedStrategy strategy;                // over partial assignments
  Marginals marginals;                   // battlefields 0..n-1 of the game
  std::vector<double> resources_obtained;  // P(obtained = r), r = 0..D
  Certificate certificate;               // against the opponent's solution
  double solve_ms = 0.0;
};

// Solves both perspectives, decomposes the player's flow and certifies the
// profile. Throws SolverError if a solve fails or the certificate does not
// hold at kCertificateTolerance.
EquilibriumReport SolveForPlayer(const CostBlottoGame& game, Player player,
                                 const lp::Solver& solver);

enum class StatisticKind { kResources, kExpenditure };
StatisticKind ParseStatisticKind(const std::string& name);
Statistic MakeStatistic(const CostBlottoGame& game, StatisticKind kind, Player p);

struct BoundWitness {
  double bound = 0.0;
  MixedStrategy strategy;
  Certificate certificate;
};

struct BoundsReport {
  std::string statistic;
  Player player = Player::kA;
  double value = 0.0;
  BoundWitness min;
  BoundWitness max;
  double solve_ms = 0.0;
};

// Minimum and maximum of the statistic over the player's equilibrium
// strategies. Witnesses are certified against the opponent's stage-one
// strategy; a failing certificate raises SolverError.
BoundsReport ComputeBounds(const CostBlottoGame& game, StatisticKind kind, const lp::Solver& solver,
                           Player player = Player::kA);

struct SweepRow {
  SweepSpec::Point point{};
  double min_resources = 0.0;
  double max_resources = 0.0;
  double min_expenditure = 0.0;
  double max_expenditure = 0.0;
  double value = 0.0;
  double solve_ms = 0.0;
  std::string error;  // empty on success
};

const char* SweepCsvHeader();

// Resource and expenditure bounds of player A at one grid point. Failures
// are recorded in the error field.
SweepRow SolveSweepPoint(const SweepSpec& spec, const SweepSpec::Point& point,
                         const std::string& backend);

// All grid points, `jobs` at a time (0: one per hardware thread). Rows are
// in grid order. An empty backend uses the environment default.
std::vector<SweepRow> RunSweep(const SweepSpec& spec, int jobs, const std::string& backend = "");

void WriteSweepCsv(const std::vector<SweepRow>& rows, std::ostream& out);

// Tolerance for the equalities and inequalities of the hypothesis check.
inline constexpr double kHypothesisTolerance = 1e-3;

enum class HypothesisCase { kAllResources = 1, kFloorCapped = 2, kInterval = 3 };

// Predicted range of the equilibrium resource count with f = floor(c0_inv):
//  case 1, D <= n (f - 1):  min = max = D;
//  case 2, f < c0_inv:      min = max = min(D, n f);
//  case 3, otherwise:       n (c0_inv - 1) <= min < max <= min(n c0_inv, D).
struct HypothesisPrediction {
  HypothesisCase which = HypothesisCase::kAllResources;
  double lo = 0.0;
  double hi = 0.0;
};
HypothesisPrediction PredictResources(int n, int budget, double c0_inv);

struct HypothesisPoint {
  SweepRow row;
  HypothesisPrediction prediction;
  bool pass = false;
  // Case 3 only: a bound sits on the closed interval's boundary.
  bool boundary = false;
  std::string detail;
};
HypothesisPoint CheckHypothesisPoint(const SweepRow& row, double tol = kHypothesisTolerance);

struct HypothesisReport {
  std::vector<HypothesisPoint> points;
  int passed = 0;
  int failed = 0;
  int flagged = 0;
  bool ok() const { return failed == 0; }
};

// Throws ConfigError unless the spec describes symmetric sign-valuation
// games with linear obtainment and no assignment costs.
void ValidateHypothesisSpec(const SweepSpec& spec);
HypothesisReport CheckHypothesis(const SweepSpec& spec, int jobs, const std::string& backend = "");
void WriteHypothesisCsv(const HypothesisReport& report, std::ostream& out);

struct OracleDiffReport {
  double flow_value = 0.0;
  double oracle_value = 0.0;
  double difference = 0.0;
  Certificate certificate;
  bool pass = false;
};
inline constexpr double kOracleTolerance = 1e-6;
OracleDiffReport OracleDiff(const CostBlottoGame& game, const lp::Solver& solver,
                            double tol = kOracleTolerance);

struct LpStatsReport {
  int n_hat = 0;
  int budget_a = 0;
  int budget_b = 0;
  LpSize size;
  long edges_own = 0;
  long edges_opponent = 0;
  double build_ms = 0.0;
  double solve_ms = 0.0;
  std::string status;
  double value = 0.0;
};
LpStatsReport ComputeLpStats(const CostBlottoGame& game, const lp::Solver& solver, bool solve = true);

nlohmann::json MixedToJson(const MixedStrategy& xi);
nlohmann::json ToJson(const Certificate& c);
nlohmann::json ToJson(const EquilibriumReport& r);
nlohmann::json ToJson(const BoundsReport& r);
nlohmann::json ToJson(const HypothesisReport& r);
nlohmann::json ToJson(const OracleDiffReport& r);
nlohmann::json ToJson(const LpStatsReport& r);

}  // namespace blotto

#endif  // BLOTTO_EXPERIMENTS_H_
