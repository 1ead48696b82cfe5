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

#include "blotto/flow_lp.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "blotto/errors.h"

namespace blotto {

namespace {

std::string Suffix(int layer, int units) {
  return std::to_string(layer) + "_" + std::to_string(units);
}

}  // namespace

MinimaxLp BuildMinimaxLp(const SunkCostGame& game, Player perspective) {
  SunkCostGame oriented = perspective == Player::kA ? game : game.Swapped();
  const int n_hat = oriented.n_hat();
  const int d_own = oriented.budget_a();
  const int d_opp = oriented.budget_b();
  MinimaxLp lp{perspective, oriented, LayeredGraph(n_hat, d_own),
               LayeredGraph(n_hat, d_opp), lp::Model(), 0, 0, 0, 0, 0};
  const LayeredGraph& own = lp.own;
  const LayeredGraph& opp = lp.opponent;
  lp::Model& m = lp.model;

  // Per-layer payoff ranges give valid bounds for q and the potentials.
  std::vector<double> max_abs(n_hat + 1, 0.0);
  for (int i = 1; i <= n_hat; ++i) {
    for (int a = 0; a <= d_own; ++a) {
      for (int b = 0; b <= d_opp; ++b) {
        max_abs[i] = std::max(max_abs[i], std::abs(oriented.value(i - 1, a, b)));
      }
    }
  }
  std::vector<double> reach(n_hat + 1, 1.0);
  for (int i = 1; i <= n_hat; ++i) reach[i] = reach[i - 1] + max_abs[i];

  lp.flow_begin = m.num_variables();
  for (const auto& e : own.edges()) {
    m.AddVariable("f" + Suffix(e.layer, e.from) + "_" + std::to_string(e.units), 0.0,
                  lp::kInfinity);
  }
  lp.h_begin = m.num_variables();
  for (int i = 1; i <= n_hat; ++i) {
    for (int a = 0; a <= d_own; ++a) m.AddVariable("h" + Suffix(i, a), 0.0, lp::kInfinity);
  }
  lp.q_begin = m.num_variables();
  for (int i = 1; i <= n_hat; ++i) {
    for (int b = 0; b <= d_opp; ++b) {
      double lo = lp::kInfinity;
      for (int a = 0; a <= d_own; ++a) lo = std::min(lo, oriented.value(i - 1, a, b));
      m.AddVariable("q" + Suffix(i, b), lo, lp::kInfinity);
    }
  }
  lp.potential_begin = m.num_variables();
  for (int v = 1; v < opp.num_nodes(); ++v) {
    const int layer = v == opp.sink() ? n_hat : (v - 1) / (d_opp + 1) + 1;
    m.AddVariable("p" + std::to_string(v), -reach[layer], lp::kInfinity);
  }
  lp.value_var = m.AddVariable("t", -reach[n_hat] - 1.0, lp::kInfinity, 1.0);
  m.SetObjectiveSense(lp::ObjectiveSense::kMaximize);

  // Unit flow conservation on the own graph; the sink row is implied.
  std::vector<std::vector<std::pair<int, double>>> node_terms(own.num_nodes());
  for (int e = 0; e < own.num_edges(); ++e) {
    const auto& edge = own.edges()[e];
    node_terms[own.NodeId(edge.layer - 1, edge.from)].emplace_back(lp.flow_begin + e, 1.0);
    node_terms[own.NodeId(edge.layer, edge.to())].emplace_back(lp.flow_begin + e, -1.0);
  }
  for (int v = 0; v < own.num_nodes(); ++v) {
    if (v == own.sink()) continue;
    m.AddRow("", std::move(node_terms[v]), lp::RowSense::kEqual, v == own.source() ? 1.0 : 0.0);
  }

  // Marginals.
  std::vector<std::vector<std::pair<int, double>>> h_terms(n_hat * (d_own + 1));
  for (int e = 0; e < own.num_edges(); ++e) {
    const auto& edge = own.edges()[e];
    h_terms[(edge.layer - 1) * (d_own + 1) + edge.units].emplace_back(lp.flow_begin + e, -1.0);
  }
  for (int i = 1; i <= n_hat; ++i) {
    for (int a = 0; a <= d_own; ++a) {
      auto terms = std::move(h_terms[(i - 1) * (d_own + 1) + a]);
      terms.insert(terms.begin(), {lp.HVar(i, a), 1.0});
      m.AddRow("", std::move(terms), lp::RowSense::kEqual, 0.0);
    }
  }

  // Expected payoff of each opponent assignment.
  for (int i = 1; i <= n_hat; ++i) {
    for (int b = 0; b <= d_opp; ++b) {
      std::vector<std::pair<int, double>> terms{{lp.QVar(i, b), 1.0}};
      for (int a = 0; a <= d_own; ++a) {
        const double w = oriented.value(i - 1, a, b);
        if (w != 0.0) terms.emplace_back(lp.HVar(i, a), -w);
      }
      m.AddRow("", std::move(terms), lp::RowSense::kEqual, 0.0);
    }
  }

  // Shortest-path constraints on the opponent graph.
  for (const auto& edge : opp.edges()) {
    const int from = opp.NodeId(edge.layer - 1, edge.from);
    const int to = opp.NodeId(edge.layer, edge.to());
    std::vector<std::pair<int, double>> terms{{lp.potential_begin + to - 1, 1.0}};
    if (from != opp.source()) terms.emplace_back(lp.potential_begin + from - 1, -1.0);
    terms.emplace_back(lp.QVar(edge.layer, edge.units), -1.0);
    m.AddRow("", std::move(terms), lp::RowSense::kLessEqual, 0.0);
  }
  m.AddRow("", {{lp.value_var, 1.0}, {lp.potential_begin + opp.sink() - 1, -1.0}},
           lp::RowSense::kLessEqual, 0.0);
  return lp;
}

const char* SolveStatusName(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
    case SolveStatus::kNumericFailure:
      return "numeric-failure";
  }
  return "unknown";
}

namespace {

SolveStatus FromLpStatus(lp::LpStatus s) {
  switch (s) {
    case lp::LpStatus::kOptimal:
      return SolveStatus::kOptimal;
    case lp::LpStatus::kInfeasible:
      return SolveStatus::kInfeasible;
    case lp::LpStatus::kUnbounded:
      return SolveStatus::kUnbounded;
    case lp::LpStatus::kNumericFailure:
      return SolveStatus::kNumericFailure;
  }
  return SolveStatus::kNumericFailure;
}

SolveResult Extract(const MinimaxLp& lp, const lp::Model& model, const lp::Solution& sol) {
  SolveResult result(lp.own);
  result.status = FromLpStatus(sol.status);
  result.iterations = sol.iterations;
  result.basis = sol.basis;
  result.diagnostic = sol.message;
  if (!result.ok()) return result;
  const int edges = lp.own.num_edges();
  StrategyFlow raw(lp.own, std::vector<double>(sol.primal.begin() + lp.flow_begin,
                                               sol.primal.begin() + lp.flow_begin + edges));
  const double violation = raw.MaxViolation();
  if (violation > kFeasibilityTolerance) {
    result.status = SolveStatus::kNumericFailure;
    result.diagnostic = "flow violates conservation by " + std::to_string(violation);
    return result;
  }
  result.flow = CleanFlow(raw);
  if (result.flow.MaxViolation() > 1e-12) {
    result.status = SolveStatus::kNumericFailure;
    result.diagnostic = "flow cleanup failed";
    return result;
  }
  result.value = sol.primal[lp.value_var];
  result.potentials.assign(lp.opponent.num_nodes(), 0.0);
  for (int v = 1; v < lp.opponent.num_nodes(); ++v) {
    result.potentials[v] = sol.primal[lp.potential_begin + v - 1];
  }
  const double model_violation = model.MaxViolation(sol.primal);
  if (model_violation > kFeasibilityTolerance) {
    result.status = SolveStatus::kNumericFailure;
    result.diagnostic = "solution violates the model by " + std::to_string(model_violation);
  }
  return result;
}

}  // namespace

SolveResult Solve(const MinimaxLp& lp, const lp::Solver& solver) {
  return Extract(lp, lp.model, solver.Solve(lp.model));
}

Statistic ResourceStatistic(const CostBlottoGame& game, Player p) {
  const int d = game.budget(p);
  Statistic s{"resources", std::vector<std::vector<double>>(game.n() + 1,
                                                            std::vector<double>(d + 1, 0.0))};
  for (int t = 0; t <= d; ++t) s.weights[game.n()][t] = d - t;
  return s;
}

Statistic ExpenditureStatistic(const CostBlottoGame& game, Player p) {
  const int d = game.budget(p);
  Statistic s{"expenditure", std::vector<std::vector<double>>(game.n() + 1,
                                                              std::vector<double>(d + 1, 0.0))};
  for (int i = 0; i < game.n(); ++i) {
    for (int t = 0; t <= d; ++t) s.weights[i][t] = game.assign_cost(p, i)(t);
  }
  for (int t = 0; t <= d; ++t) s.weights[game.n()][t] = game.obtain_cost(p)(d - t);
  return s;
}

StatisticBound SolveEquilibriumStatistic(const MinimaxLp& lp, double stage_one_value,
                                         const Statistic& statistic, Direction direction,
                                         const lp::Solver& solver,
                                         const lp::Basis& warm_start) {
  const int n_hat = lp.own.n_hat();
  const int d = lp.own.budget();
  if (static_cast<int>(statistic.weights.size()) != n_hat) {
    throw PreconditionError("statistic needs weights for " + std::to_string(n_hat) +
                            " battlefields");
  }
  lp::Model m = lp.model;
  const double slack = kPinRelativeSlack * std::max(1.0, std::abs(stage_one_value));
  const auto& t = m.variable(lp.value_var);
  m.SetBounds(lp.value_var, stage_one_value - slack, t.upper);
  m.ClearObjective();

  double lo = 0.0, hi = 0.0;
  std::vector<std::pair<int, double>> terms;
  for (int i = 1; i <= n_hat; ++i) {
    const auto& w = statistic.weights[i - 1];
    if (static_cast<int>(w.size()) != d + 1) {
      throw PreconditionError("statistic weights for battlefield " + std::to_string(i) +
                              " must cover 0.." + std::to_string(d));
    }
    lo += *std::min_element(w.begin(), w.end());
    hi += *std::max_element(w.begin(), w.end());
    for (int a = 0; a <= d; ++a) {
      if (w[a] != 0.0) terms.emplace_back(lp.HVar(i, a), -w[a]);
    }
  }
  const int stat = m.AddVariable("stat", lo - 1.0, hi + 1.0, 1.0);
  terms.insert(terms.begin(), {stat, 1.0});
  m.AddRow("", std::move(terms), lp::RowSense::kEqual, 0.0);
  m.SetObjectiveSense(direction == Direction::kMinimize ? lp::ObjectiveSense::kMinimize
                                                        : lp::ObjectiveSense::kMaximize);

  lp::Solution sol;
  if (warm_start.empty()) {
    sol = solver.Solve(m);
  } else {
    // The statistic enters basic and its defining row nonbasic, so the
    // stage-one basis stays primal feasible.
    lp::Basis hint = warm_start;
    hint.columns.resize(lp.model.num_variables(), lp::BasisStatus::kAtLower);
    hint.rows.resize(lp.model.num_rows(), lp::BasisStatus::kBasic);
    hint.columns.push_back(lp::BasisStatus::kBasic);
    hint.rows.push_back(lp::BasisStatus::kAtLower);
    sol = solver.SolveFrom(m, hint);
  }
  StatisticBound out{0.0, stage_one_value, Extract(lp, m, sol)};
  if (out.witness.ok()) {
    out.bound = sol.primal[stat];
    out.witness.objective_extra = out.bound;
  } else if (sol.status == lp::LpStatus::kInfeasible) {
    throw SolverError("pinned statistic LP reported infeasible; the stage-one witness is "
                      "feasible by construction");
  }
  return out;
}

StatisticBound SolveEquilibriumStatistic(const CostBlottoGame& game,
                                         const Statistic& statistic, Direction direction,
                                         const lp::Solver& solver, Player p) {
  const MinimaxLp lp = BuildMinimaxLp(BuildSunkCost(game), p);
  const SolveResult first = Solve(lp, solver);
  if (!first.ok()) {
    throw SolverError(std::string("stage-one solve failed (") + SolveStatusName(first.status) +
                      "): " + first.diagnostic);
  }
  return SolveEquilibriumStatistic(lp, first.value, statistic, direction, solver, first.basis);
}

LpSize LpStats(const MinimaxLp& lp) {
  return {lp.model.num_variables(), lp.model.num_rows(), lp.model.num_nonzeros()};
}

}  // namespace blotto
