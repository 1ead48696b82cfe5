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

#ifndef BLOTTO_FLOW_LP_H_
#define BLOTTO_FLOW_LP_H_

#include <optional>
#include <string>
#include <vector>

#include "blotto/game.h"
#include "blotto/layered_graph.h"
#include "blotto/lp_model.h"
#include "blotto/reduction.h"

namespace blotto {

// Minimax LP of a sunk-cost game from one player's side. The perspective
// player's mixed strategy is a unit flow f on its layered graph; its layer
// marginals h_i(a) induce expected battlefield payoffs q_i(b) against each
// opponent assignment b. Opponent node potentials pi, bounded by shortest-path
// constraints with edge lengths q, make pi_sink the opponent's best reply:
//   max t  s.t.  t <= pi_sink,
//               pi_(i,k+b) <= pi_(i-1,k) + q_i(b)   for every opponent edge,
//               q_i(b) = sum_a h_i(a) w_i(a,b),  h_i(a) = sum_j f_(i-1,j)->(i,j+a).
struct MinimaxLp {
  Player perspective;
  SunkCostGame oriented;  // the perspective player in the A role
  LayeredGraph own;
  LayeredGraph opponent;
  lp::Model model;
  int flow_begin = 0;
  int h_begin = 0;
  int q_begin = 0;
  int potential_begin = 0;  // opponent nodes 1..num_nodes-1
  int value_var = 0;

  // layer is 1-based; units ranges over 0..budget of the respective player.
  int HVar(int layer, int units) const { return h_begin + (layer - 1) * (own.budget() + 1) + units; }
  int QVar(int layer, int units) const {
    return q_begin + (layer - 1) * (opponent.budget() + 1) + units;
  }
};

MinimaxLp BuildMinimaxLp(const SunkCostGame& game, Player perspective);

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded, kNumericFailure };
const char* SolveStatusName(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::kNumericFailure;
  // Guaranteed zero-sum payoff of the perspective player.
  double value = 0.0;
  StrategyFlow flow;
  // Opponent node potentials indexed by LayeredGraph::NodeId (source = 0).
  std::vector<double> potentials;
  std::optional<double> objective_extra;
  std::string diagnostic;
  int iterations = 0;
  // Final LP basis, usable as a warm start for related models.
  lp::Basis basis;

  explicit SolveResult(LayeredGraph g) : flow(std::move(g)) {}
  bool ok() const { return status == SolveStatus::kOptimal; }
};

// Solves the model as built. The returned flow is cleaned (CleanFlow).
SolveResult Solve(const MinimaxLp& lp, const lp::Solver& solver);

// A linear functional of a player's marginals in the reduced game:
// sum_i sum_t weights[i][t] * P_i(t), battlefields 0..n_hat-1.
struct Statistic {
  std::string name;
  std::vector<std::vector<double>> weights;
};

// Expected number of obtained resources: weight D - t on the extra battlefield.
Statistic ResourceStatistic(const CostBlottoGame& game, Player p = Player::kA);
// Expected cost carried: assignment costs plus obtainment cost of D - t.
Statistic ExpenditureStatistic(const CostBlottoGame& game, Player p = Player::kA);

enum class Direction { kMinimize, kMaximize };

struct StatisticBound {
  double bound = 0.0;
  double pinned_value = 0.0;  // stage-one game value used for the pin
  SolveResult witness;
};

inline constexpr double kPinRelativeSlack = 1e-7;

// Optimizes the statistic over the perspective player's equilibrium
// strategies: the value variable is bounded below by v* - slack, with
// slack = kPinRelativeSlack * max(1, |v*|), before the statistic is optimized.
// A non-empty warm_start (typically the stage-one basis) seeds the solver.
StatisticBound SolveEquilibriumStatistic(const MinimaxLp& lp, double stage_one_value,
                                         const Statistic& statistic, Direction direction,
                                         const lp::Solver& solver,
                                         const lp::Basis& warm_start = {});
// As above, running stage one first. Throws SolverError if it fails.
StatisticBound SolveEquilibriumStatistic(const CostBlottoGame& game,
                                         const Statistic& statistic, Direction direction,
                                         const lp::Solver& solver, Player p = Player::kA);

struct LpSize {
  long num_variables = 0;
  long num_constraints = 0;
  long num_nonzeros = 0;
};
LpSize LpStats(const MinimaxLp& lp);

}  // namespace blotto

#endif  // BLOTTO_FLOW_LP_H_
