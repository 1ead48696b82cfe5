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

// Acceptance report: one PASS/FAIL line per criterion, nonzero exit status
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "blotto/config.h"
#include "blotto/experiments.h"
#include "blotto/flow_lp.h"
#include "blotto/instances.h"
#include "blotto/lp_model.h"
#include "blotto/numeric.h"
#include "blotto/oracle.h"
#include "blotto/payoff.h"
#include "blotto/reduction.h"
#include "blotto/strategy_tools.h"
#include "example_one_fixture.h"

namespace blotto {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [" << what << "]";
    }
  }
};

int failures = 0;

void Report(int id, const char* title, Outcome& o, double seconds, double limit) {
  o.Require(seconds < limit, "runtime over limit");
  std::printf("criterion %d %s: %s (%.2f s, limit %.0f s)%s\n", id, o.pass ? "PASS" : "FAIL",
              title, seconds, limit, o.note.str().c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

void CriterionOne() {
  const auto t = Clock::now();
  Outcome o;
  const auto mg = oracle::BuildMatrix<Rational>(ExampleOneGame(), PayoffVariant::kCosts);
  const auto& order = fixtures::FixtureOrder();
  int matched = 0;
  int matched_relabeled = 0;
  std::ostringstream cells;
  auto index = [](const std::vector<PureStrategy>& list, const PureStrategy& s) {
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (list[k] == s) return static_cast<int>(k);
    }
    return -1;
  };
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      const int i = index(mg.row_strategies, order[r]);
      const int j = index(mg.col_strategies, order[c]);
      auto same = [&](int fc) {
        const auto& want = fixtures::FixtureMatrix()[r][fc];
        return mg.payoff[i][j] == Rational(want.first) && mg.payoff_b[i][j] == Rational(want.second);
      };
      if (same(c)) {
        ++matched;
      } else {
        cells << ' ' << order[r].ToString() << 'x' << order[c].ToString();
        if (c >= 4 && same(9 - c)) ++matched_relabeled;
      }
    }
  }
  o.note << " " << matched << "/36 entries equal as transcribed";
  if (matched < 36) {
    o.note << "; differing cells" << cells.str() << " (" << matched_relabeled
           << " of them equal the transcription with columns (0,2),(2,0) swapped)";
  }
  o.Require(matched == 36, "matrix differs from the reference");
  Report(1, "two-battlefield payoff matrix", o, SecondsSince(t), 1);
}

void CriterionTwo(const lp::Solver& solver) {
  const auto t = Clock::now();
  Outcome o;
  const CostBlottoGame game = ExampleOneGame();
  const SunkCostGame sunk = BuildSunkCost(game);
  const Rational exact = oracle::MatrixGameSolve<Rational>(game).value;
  const SolveResult a = Solve(BuildMinimaxLp(sunk, Player::kA), solver);
  const SolveResult b = Solve(BuildMinimaxLp(sunk, Player::kB), solver);
  o.Require(a.ok() && b.ok(), "stage-one solve failed");
  const double diff = std::abs(a.value - ToDouble(exact));
  o.note << " value " << a.value << " (oracle " << ToDouble(exact) << ")";
  o.Require(diff <= 1e-9, "value differs from oracle");
  const MixedStrategy xa = UnmapMixedStrategy(DecomposeFlow(a.flow));
  const MixedStrategy xb = UnmapMixedStrategy(DecomposeFlow(b.flow));
  double worst_gap = 0.0;
  for (const PureStrategy& s : std::vector<PureStrategy>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
    const Certificate ca = CertifyEquilibrium(game, MixedStrategy::Pure(s), xb);
    const Certificate cb = CertifyEquilibrium(game, xa, MixedStrategy::Pure(s));
    worst_gap = std::max({worst_gap, ca.gap_a, ca.gap_b, cb.gap_a, cb.gap_b});
  }
  o.note << "; largest gap over S* " << worst_gap;
  o.Require(worst_gap <= 1e-6, "S* strategy not certified");
  double least_refutation = 1e9;
  for (const PureStrategy& s : std::vector<PureStrategy>{{0, 2}, {2, 0}}) {
    const Certificate ca = CertifyEquilibrium(game, MixedStrategy::Pure(s), xb);
    const Certificate cb = CertifyEquilibrium(game, xa, MixedStrategy::Pure(s));
    least_refutation = std::min({least_refutation, ca.gap_a + ca.gap_b, cb.gap_a + cb.gap_b});
  }
  o.note << "; smallest refutation gap " << least_refutation;
  o.Require(least_refutation >= 1 - 1e-6, "(0,2) or (2,0) not refuted");
  const Statistic stat = ResourceStatistic(game);
  const double lo = SolveEquilibriumStatistic(game, stat, Direction::kMinimize, solver).bound;
  const double hi = SolveEquilibriumStatistic(game, stat, Direction::kMaximize, solver).bound;
  o.note << "; resource bounds (" << lo << ", " << hi << ")";
  o.Require(std::abs(lo) <= 1e-6 && std::abs(hi - 2) <= 1e-6, "resource bounds");
  Report(2, "two-battlefield equilibria", o, SecondsSince(t), 5);
}

void CriterionThree(const lp::Solver& solver) {
  const auto t = Clock::now();
  Outcome o;
  std::mt19937_64 rng(20260101);
  constexpr int kInstances = 120;
  double worst = 0.0;
  int failed = 0;
  for (int k = 0; k < kInstances; ++k) {
    const CostBlottoGame game = RandomSmallGame(rng);
    const double oracle_value = oracle::MatrixGameSolve<double>(game).value;
    const SolveResult r = Solve(BuildMinimaxLp(BuildSunkCost(game), Player::kA), solver);
    const double diff = r.ok() ? std::abs(r.value - oracle_value) : INFINITY;
    worst = std::max(worst, diff);
    failed += !(diff <= 1e-6);
  }
  o.note << " " << kInstances << " instances, largest difference " << worst;
  o.Require(failed == 0, std::to_string(failed) + " instances differ");
  Report(3, "oracle equivalence", o, SecondsSince(t), 120);
}

SweepSpec HypothesisGrid() {
  SweepSpec spec;
  spec.n = {4};
  spec.budget_a = {40};
  spec.c0_inv = GridValues(1.0, 10.0, 0.25);
  return spec;
}

std::vector<SweepRow> CriterionFour() {
  const auto t = Clock::now();
  Outcome o;
  const SweepSpec spec = HypothesisGrid();
  ValidateHypothesisSpec(spec);
  const std::vector<SweepRow> rows = RunSweep(spec, 0);
  int passed = 0;
  int flagged = 0;
  for (const SweepRow& row : rows) {
    const HypothesisPoint h = CheckHypothesisPoint(row);
    passed += h.pass;
    flagged += h.boundary;
    if (!h.pass) {
      o.note << " [c0_inv " << row.point.c0_inv << ": " << h.detail << " got " << row.min_resources
             << ".." << row.max_resources << "]";
    }
    if (row.point.c0_inv == 9.75) {
      o.note << " 9.75 -> " << row.min_resources << ".." << row.max_resources << ";";
      o.Require(std::abs(row.min_resources - 36) <= kHypothesisTolerance &&
                    std::abs(row.max_resources - 36) <= kHypothesisTolerance,
                "9.75 not unique 36");
    }
    if (row.point.c0_inv == 10.0) {
      o.note << " 10 -> " << row.min_resources << ".." << row.max_resources << ";";
      o.Require(row.min_resources < row.max_resources &&
                    row.min_resources >= 36 - kHypothesisTolerance &&
                    row.max_resources <= 40 + kHypothesisTolerance,
                "10 not a split inside [36, 40]");
    }
  }
  o.note << " " << passed << "/" << rows.size() << " points pass, " << flagged
         << " on the closed-interval boundary (tolerance " << kHypothesisTolerance << ")";
  o.Require(passed == static_cast<int>(rows.size()), "grid points fail");
  Report(4, "resource hypothesis at n=4, D=40", o, SecondsSince(t), 1800);
  return rows;
}

void CriterionFive(const std::vector<SweepRow>& rows) {
  const auto t = Clock::now();
  Outcome o;
  double worst = 0.0;
  bool complete = true;
  for (const SweepRow& row : rows) {
    if (!row.error.empty()) {
      complete = false;
      continue;
    }
    const double c0 = 1.0 / row.point.c0_inv;
    worst = std::max({worst, std::abs(row.min_expenditure - c0 * row.min_resources),
                      std::abs(row.max_expenditure - c0 * row.max_resources)});
  }
  o.note << " largest |expenditure - c0 * resources| " << worst << " over " << rows.size()
         << " points";
  o.Require(complete && !rows.empty(), "sweep rows missing");
  o.Require(worst <= 1e-9, "expenditure not linear in resources");
  Report(5, "expenditure linearity", o, SecondsSince(t), 60);
}

void CriterionSix(const lp::Solver& solver) {
  const auto t = Clock::now();
  Outcome o;
  const CostBlottoGame game = CostBlottoGame::SignLinear(4, 40, 40, 1.0 / 10.0);
  const SunkCostGame sunk = BuildSunkCost(game);
  auto witnesses = [&](Player p) {
    const MinimaxLp lp = BuildMinimaxLp(sunk, p);
    const SolveResult first = Solve(lp, solver);
    std::vector<MixedStrategy> out;
    for (Direction dir : {Direction::kMinimize, Direction::kMaximize}) {
      const StatisticBound b = SolveEquilibriumStatistic(lp, first.value, ResourceStatistic(game, p),
                                                         dir, solver, first.basis);
      out.push_back(UnmapMixedStrategy(DecomposeFlow(b.witness.flow)));
    }
    return out;
  };
  const std::vector<MixedStrategy> wa = witnesses(Player::kA);
  const std::vector<MixedStrategy> wb = witnesses(Player::kB);
  double worst = 0.0;
  int checked = 0;
  auto check = [&](const MixedStrategy& x, const MixedStrategy& y) {
    const Certificate c = CertifyEquilibrium(game, x, y);
    worst = std::max({worst, c.gap_a, c.gap_b});
    ++checked;
    o.Require(c.is_equilibrium, "certificate failed");
  };
  for (const MixedStrategy& x : wa) {
    for (const MixedStrategy& y : wb) check(x, y);
  }
  const MixedStrategy mid_a = MixedStrategy::Mix(wa[0], wa[1], 0.5);
  const MixedStrategy mid_b = MixedStrategy::Mix(wb[0], wb[1], 0.5);
  for (const MixedStrategy& y : wb) check(mid_a, y);
  for (const MixedStrategy& x : wa) check(x, mid_b);
  check(mid_a, mid_b);
  o.note << " " << checked << " profiles, largest gap " << worst;
  Report(6, "interchangeability and convexity at c0_inv=10", o, SecondsSince(t), 1800);
}

void CriterionSeven() {
  const auto t = Clock::now();
  Outcome o;
  auto size = [](int n, int d) {
    CostBlottoGame game = CostBlottoGame::SignLinear(n, d, d, 0.1);
    return LpStats(BuildMinimaxLp(BuildSunkCost(game), Player::kA));
  };
  const LpSize d40 = size(4, 40);
  const LpSize d80 = size(4, 80);
  const LpSize n10 = size(10, 30);
  const LpSize n20 = size(20, 30);
  auto ratio = [](long a, long b) { return static_cast<double>(b) / static_cast<double>(a); };
  const double dv = ratio(d40.num_variables, d80.num_variables);
  const double dc = ratio(d40.num_constraints, d80.num_constraints);
  const double nv = ratio(n10.num_variables, n20.num_variables);
  const double nc = ratio(n10.num_constraints, n20.num_constraints);
  o.note << " D 40->80 at n=4: variables x" << dv << ", constraints x" << dc
         << "; n 10->20 at D=30: variables x" << nv << ", constraints x" << nc;
  o.Require(dv >= 3.4 && dv <= 4.6 && dc >= 3.4 && dc <= 4.6, "budget ratio");
  o.Require(nv >= 1.8 && nv <= 2.2 && nc >= 1.8 && nc <= 2.2, "battlefield ratio");
  Report(7, "LP size scaling", o, SecondsSince(t), 60);
}

void CriterionEight(const lp::Solver& solver) {
  const auto t = Clock::now();
  Outcome o;
  const CostBlottoGame game = CostBlottoGame::SignLinear(10, 30, 30, 0.1);
  const LpStatsReport r = ComputeLpStats(game, solver);
  o.note << " status " << r.status << ", solve " << r.solve_ms / 1000.0 << " s with backend "
         << solver.Name() << " (reference 0.534 s with a commercial solver, not asserted)";
  o.Require(r.status == "optimal", "not optimal");
  o.Require(r.solve_ms < 120'000, "solve over 120 s");
  Report(8, "n=10, D=30 solve time", o, SecondsSince(t), 120);
}

}  // namespace
}  // namespace blotto

int main() {
  using blotto::failures;
  const auto solver = blotto::lp::DefaultSolver();
  std::printf("LP backend: %s\n", solver->Name().c_str());
  auto guarded = [](int id, auto&& run) {
    try {
      run();
    } catch (const std::exception& e) {
      std::printf("criterion %d FAIL: exception %s\n", id, e.what());
      ++failures;
    }
  };
  guarded(1, [] { blotto::CriterionOne(); });
  guarded(2, [&] { blotto::CriterionTwo(*solver); });
  guarded(3, [&] { blotto::CriterionThree(*solver); });
  std::vector<blotto::SweepRow> rows;
  guarded(4, [&] { rows = blotto::CriterionFour(); });
  guarded(5, [&] { blotto::CriterionFive(rows); });
  guarded(6, [&] { blotto::CriterionSix(*solver); });
  guarded(7, [] { blotto::CriterionSeven(); });
  guarded(8, [&] { blotto::CriterionEight(*solver); });
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
