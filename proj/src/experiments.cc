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

#include "blotto/experiments.h"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>

#include "blotto/errors.h"
#include "blotto/layered_graph.h"
#include "blotto/oracle.h"
#include "blotto/reduction.h"

namespace blotto {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

SolveResult SolveOrThrow(const MinimaxLp& lp, const lp::Solver& solver) {
  SolveResult r = Solve(lp, solver);
  if (!r.ok()) {
    throw SolverError(std::string("stage-one solve for player ") + PlayerName(lp.perspective) +
                      " failed (" + SolveStatusName(r.status) + "): " + r.diagnostic);
  }
  return r;
}

MixedStrategy StrategyFromFlow(const StrategyFlow& flow) {
  return UnmapMixedStrategy(DecomposeFlow(flow));
}

Certificate CertifyFor(const CostBlottoGame& game, Player p, const MixedStrategy& own,
                       const MixedStrategy& opponent) {
  return p == Player::kA ? CertifyEquilibrium(game, own, opponent)
                         : CertifyEquilibrium(game, opponent, own);
}

void RequireCertified(const Certificate& c, const std::string& what) {
  if (!c.is_equilibrium) {
    std::ostringstream msg;
    msg << what << " failed the equilibrium certificate (gap_A " << c.gap_a << ", gap_B "
        << c.gap_b << ")";
    throw SolverError(msg.str());
  }
}

std::unique_ptr<lp::Solver> SolverFor(const std::string& backend) {
  return backend.empty() ? lp::DefaultSolver() : lp::MakeSolver(backend);
}

std::string Num(double x) {
  if (x == 0.0) x = 0.0;  // print -0 as 0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

const char* CaseName(HypothesisCase c) {
  switch (c) {
    case HypothesisCase::kAllResources:
      return "1";
    case HypothesisCase::kFloorCapped:
      return "2";
    case HypothesisCase::kInterval:
      return "3";
  }
  return "?";
}

}  // namespace

EquilibriumReport SolveForPlayer(const CostBlottoGame& game, Player player,
                                 const lp::Solver& solver) {
  const auto start = Clock::now();
  const SunkCostGame sunk = BuildSunkCost(game);
  const SolveResult own = SolveOrThrow(BuildMinimaxLp(sunk, player), solver);
  const SolveResult opp = SolveOrThrow(BuildMinimaxLp(sunk, Opponent(player)), solver);
  EquilibriumReport r;
  r.player = player;
  r.value = own.value;
  r.strategy = StrategyFromFlow(own.flow);
  r.certificate = CertifyFor(game, player, r.strategy, StrategyFromFlow(opp.flow));
  RequireCertified(r.certificate, std::string("strategy of ") + PlayerName(player));
  const Marginals m = MarginalsFromFlow(own.flow);
  const int d = game.budget(player);
  r.marginals.p.assign(m.p.begin(), m.p.begin() + game.n());
  r.resources_obtained.resize(d + 1);
  for (int obtained = 0; obtained <= d; ++obtained) {
    r.resources_obtained[obtained] = m.p[game.n()][d - obtained];
  }
  r.solve_ms = MillisSince(start);
  return r;
}

StatisticKind ParseStatisticKind(const std::string& name) {
  if (name == "resources") return StatisticKind::kResources;
  if (name == "expenditure") return StatisticKind::kExpenditure;
  throw ConfigError("statistic", "unknown statistic \"" + name + "\" (resources, expenditure)");
}

Statistic MakeStatistic(const CostBlottoGame& game, StatisticKind kind, Player p) {
  return kind == StatisticKind::kResources ? ResourceStatistic(game, p)
                                           : ExpenditureStatistic(game, p);
}

BoundsReport ComputeBounds(const CostBlottoGame& game, StatisticKind kind, const lp::Solver& solver,
                           Player player) {
  const auto start = Clock::now();
  const SunkCostGame sunk = BuildSunkCost(game);
  const MinimaxLp lp = BuildMinimaxLp(sunk, player);
  const SolveResult first = SolveOrThrow(lp, solver);
  const SolveResult opp = SolveOrThrow(BuildMinimaxLp(sunk, Opponent(player)), solver);
  const MixedStrategy opponent = StrategyFromFlow(opp.flow);
  const Statistic stat = MakeStatistic(game, kind, player);
  BoundsReport r;
  r.statistic = stat.name;
  r.player = player;
  r.value = first.value;
  for (Direction dir : {Direction::kMinimize, Direction::kMaximize}) {
    const StatisticBound b =
        SolveEquilibriumStatistic(lp, first.value, stat, dir, solver, first.basis);
    BoundWitness& w = dir == Direction::kMinimize ? r.min : r.max;
    w.bound = b.bound;
    w.strategy = StrategyFromFlow(b.witness.flow);
    w.certificate = CertifyFor(game, player, w.strategy, opponent);
    RequireCertified(w.certificate,
                     std::string(dir == Direction::kMinimize ? "min" : "max") + " witness");
  }
  r.solve_ms = MillisSince(start);
  return r;
}

const char* SweepCsvHeader() {
  return "n,D_A,D_B,c0_inv,min_resources,max_resources,min_expenditure,max_expenditure,value,"
         "solve_ms,error";
}

SweepRow SolveSweepPoint(const SweepSpec& spec, const SweepSpec::Point& point,
                         const std::string& backend) {
  SweepRow row;
  row.point = point;
  const auto start = Clock::now();
  try {
    const auto solver = SolverFor(backend);
    const CostBlottoGame game = spec.MakeGame(point);
    const MinimaxLp lp = BuildMinimaxLp(BuildSunkCost(game), Player::kA);
    const SolveResult first = SolveOrThrow(lp, *solver);
    row.value = first.value;
    auto bound = [&](const Statistic& s, Direction dir) {
      return SolveEquilibriumStatistic(lp, first.value, s, dir, *solver, first.basis).bound;
    };
    const Statistic res = ResourceStatistic(game);
    const Statistic exp = ExpenditureStatistic(game);
    row.min_resources = bound(res, Direction::kMinimize);
    row.max_resources = bound(res, Direction::kMaximize);
    row.min_expenditure = bound(exp, Direction::kMinimize);
    row.max_expenditure = bound(exp, Direction::kMaximize);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.solve_ms = MillisSince(start);
  return row;
}

std::vector<SweepRow> RunSweep(const SweepSpec& spec, int jobs, const std::string& backend) {
  const std::vector<SweepSpec::Point> points = spec.Points();
  std::vector<SweepRow> rows(points.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t k = 0; k < points.size(); ++k) {
    rows[k] = SolveSweepPoint(spec, points[k], backend);
  }
  return rows;
}

void WriteSweepCsv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << SweepCsvHeader() << '\n';
  for (const SweepRow& r : rows) {
    out << r.point.n << ',' << r.point.budget_a << ',' << r.point.budget_b << ','
        << Num(r.point.c0_inv) << ',';
    if (r.error.empty()) {
      out << Num(r.min_resources) << ',' << Num(r.max_resources) << ',' << Num(r.min_expenditure)
          << ',' << Num(r.max_expenditure) << ',' << Num(r.value) << ',';
    } else {
      out << ",,,,,";
    }
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.1f", r.solve_ms);
    out << ms << ',' << CsvField(r.error) << '\n';
  }
}

HypothesisPrediction PredictResources(int n, int budget, double c0_inv) {
  constexpr double kIntegerSlack = 1e-9;
  const double f = std::floor(c0_inv + kIntegerSlack);
  HypothesisPrediction p;
  if (budget <= n * (f - 1)) {
    p.which = HypothesisCase::kAllResources;
    p.lo = p.hi = budget;
  } else if (c0_inv - f > kIntegerSlack) {
    p.which = HypothesisCase::kFloorCapped;
    p.lo = p.hi = std::min<double>(budget, n * f);
  } else {
    p.which = HypothesisCase::kInterval;
    p.lo = n * (c0_inv - 1);
    p.hi = std::min<double>(n * c0_inv, budget);
  }
  return p;
}

HypothesisPoint CheckHypothesisPoint(const SweepRow& row, double tol) {
  HypothesisPoint h;
  h.row = row;
  h.prediction = PredictResources(row.point.n, row.point.budget_a, row.point.c0_inv);
  if (!row.error.empty()) {
    h.detail = "solve failed: " + row.error;
    return h;
  }
  const double lo = row.min_resources;
  const double hi = row.max_resources;
  const HypothesisPrediction& p = h.prediction;
  std::ostringstream detail;
  if (p.which != HypothesisCase::kInterval) {
    h.pass = std::abs(lo - p.lo) <= tol && std::abs(hi - p.hi) <= tol;
    detail << "expected min = max = " << p.lo;
  } else {
    const bool inside = lo >= p.lo - tol && hi <= p.hi + tol;
    const bool split = hi - lo > tol;
    h.pass = inside && split;
    h.boundary = std::abs(lo - p.lo) <= tol || std::abs(hi - p.hi) <= tol;
    detail << "expected " << p.lo << " <= min < max <= " << p.hi;
    if (!split) detail << "; min and max coincide";
    if (h.boundary) detail << "; bound on the interval boundary";
  }
  h.detail = detail.str();
  return h;
}

void ValidateHypothesisSpec(const SweepSpec& spec) {
  if (!spec.budget_b.empty()) {
    for (int da : spec.budget_a) {
      for (int db : spec.budget_b) {
        if (da != db) throw ConfigError("budget_B", "the hypothesis check needs D_A = D_B");
      }
    }
  }
  if (spec.assign_cost) {
    throw ConfigError("assign_cost", "the hypothesis check needs zero assignment costs");
  }
  if (spec.weight != 1.0) throw ConfigError("weight", "the hypothesis check needs weight 1");
}

HypothesisReport CheckHypothesis(const SweepSpec& spec, int jobs, const std::string& backend) {
  ValidateHypothesisSpec(spec);
  HypothesisReport report;
  for (const SweepRow& row : RunSweep(spec, jobs, backend)) {
    HypothesisPoint h = CheckHypothesisPoint(row);
    (h.pass ? report.passed : report.failed) += 1;
    if (h.boundary) ++report.flagged;
    report.points.push_back(std::move(h));
  }
  return report;
}

void WriteHypothesisCsv(const HypothesisReport& report, std::ostream& out) {
  out << "n,D,c0_inv,case,expected_lo,expected_hi,min_resources,max_resources,pass,boundary,"
         "detail\n";
  for (const HypothesisPoint& h : report.points) {
    const SweepRow& r = h.row;
    out << r.point.n << ',' << r.point.budget_a << ',' << Num(r.point.c0_inv) << ','
        << CaseName(h.prediction.which) << ',' << Num(h.prediction.lo) << ','
        << Num(h.prediction.hi) << ',';
    if (r.error.empty()) {
      out << Num(r.min_resources) << ',' << Num(r.max_resources);
    } else {
      out << ',';
    }
    out << ',' << (h.pass ? "pass" : "fail") << ',' << (h.boundary ? "yes" : "no") << ','
        << CsvField(h.detail) << '\n';
  }
}

OracleDiffReport OracleDiff(const CostBlottoGame& game, const lp::Solver& solver, double tol) {
  OracleDiffReport r;
  r.oracle_value = oracle::MatrixGameSolve<double>(game).value;
  const SunkCostGame sunk = BuildSunkCost(game);
  const SolveResult a = SolveOrThrow(BuildMinimaxLp(sunk, Player::kA), solver);
  const SolveResult b = SolveOrThrow(BuildMinimaxLp(sunk, Player::kB), solver);
  r.flow_value = a.value;
  r.difference = std::abs(r.flow_value - r.oracle_value);
  r.certificate = CertifyEquilibrium(game, StrategyFromFlow(a.flow), StrategyFromFlow(b.flow));
  r.pass = r.difference <= tol && r.certificate.is_equilibrium;
  return r;
}

LpStatsReport ComputeLpStats(const CostBlottoGame& game, const lp::Solver& solver, bool solve) {
  LpStatsReport r;
  const auto start = Clock::now();
  const MinimaxLp lp = BuildMinimaxLp(BuildSunkCost(game), Player::kA);
  r.build_ms = MillisSince(start);
  r.n_hat = lp.own.n_hat();
  r.budget_a = game.budget_a();
  r.budget_b = game.budget_b();
  r.size = LpStats(lp);
  r.edges_own = lp.own.num_edges();
  r.edges_opponent = lp.opponent.num_edges();
  r.status = "not solved";
  if (solve) {
    const auto t = Clock::now();
    const SolveResult s = Solve(lp, solver);
    r.solve_ms = MillisSince(t);
    r.status = SolveStatusName(s.status);
    r.value = s.value;
    if (!s.ok()) throw SolverError("lp-stats solve failed: " + s.diagnostic);
  }
  return r;
}

json MixedToJson(const MixedStrategy& xi) {
  json out = json::array();
  for (const auto& [s, p] : xi.support) {
    out.push_back({{"assignment", s.units}, {"probability", p}});
  }
  return out;
}

json ToJson(const Certificate& c) {
  return {{"is_equilibrium", c.is_equilibrium}, {"gap_A", c.gap_a},
          {"gap_B", c.gap_b},                   {"realized_value", c.value},
          {"best_response_A", c.best_response_a}, {"best_response_B", c.best_response_b},
          {"eps", kCertificateTolerance}};
}

json ToJson(const EquilibriumReport& r) {
  json bf = json::array();
  for (const auto& row : r.marginals.p) bf.push_back(row);
  return {{"player", PlayerName(r.player)},
          {"value", r.value},
          {"strategy", MixedToJson(r.strategy)},
          {"marginals", {{"battlefields", std::move(bf)},
                         {"resources_obtained", r.resources_obtained}}},
          {"certificate", ToJson(r.certificate)},
          {"solve_ms", r.solve_ms}};
}

json ToJson(const BoundsReport& r) {
  auto witness = [](const BoundWitness& w) {
    return json{{"bound", w.bound},
                {"strategy", MixedToJson(w.strategy)},
                {"certificate", ToJson(w.certificate)}};
  };
  return {{"statistic", r.statistic}, {"player", PlayerName(r.player)},
          {"value", r.value},         {"min", r.min.bound},
          {"max", r.max.bound},       {"min_witness", witness(r.min)},
          {"max_witness", witness(r.max)}, {"solve_ms", r.solve_ms}};
}

json ToJson(const HypothesisReport& r) {
  json points = json::array();
  for (const HypothesisPoint& h : r.points) {
    json p = {{"n", h.row.point.n},
              {"D", h.row.point.budget_a},
              {"c0_inv", h.row.point.c0_inv},
              {"case", static_cast<int>(h.prediction.which)},
              {"expected_lo", h.prediction.lo},
              {"expected_hi", h.prediction.hi},
              {"pass", h.pass},
              {"boundary", h.boundary},
              {"detail", h.detail}};
    if (h.row.error.empty()) {
      p["min_resources"] = h.row.min_resources;
      p["max_resources"] = h.row.max_resources;
    } else {
      p["error"] = h.row.error;
    }
    points.push_back(std::move(p));
  }
  return {{"points", std::move(points)},
          {"summary",
           {{"passed", r.passed}, {"failed", r.failed}, {"boundary_flagged", r.flagged},
            {"tolerance", kHypothesisTolerance}, {"ok", r.ok()}}}};
}

json ToJson(const OracleDiffReport& r) {
  return {{"flow_value", r.flow_value},     {"oracle_value", r.oracle_value},
          {"difference", r.difference},     {"tolerance", kOracleTolerance},
          {"certificate", ToJson(r.certificate)}, {"pass", r.pass}};
}

json ToJson(const LpStatsReport& r) {
  return {{"n_hat", r.n_hat},
          {"budget_A", r.budget_a},
          {"budget_B", r.budget_b},
          {"num_variables", r.size.num_variables},
          {"num_constraints", r.size.num_constraints},
          {"num_nonzeros", r.size.num_nonzeros},
          {"edges_own", r.edges_own},
          {"edges_opponent", r.edges_opponent},
          {"build_ms", r.build_ms},
          {"solve_ms", r.solve_ms},
          {"status", r.status},
          {"value", r.value}};
}

}  // namespace blotto
