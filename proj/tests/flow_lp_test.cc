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

#include <cmath>
#include <memory>
#include <random>
#include <sstream>
#include <vector>

#include "blotto/flow_lp.h"
#include "blotto/instances.h"
#include "blotto/lp_model.h"
#include "blotto/oracle.h"
#include "blotto/reduction.h"
#include "blotto/strategy_tools.h"
#include "gtest/gtest.h"

namespace blotto {
namespace {

class FlowLpTest : public ::testing::TestWithParam<const char*> {
 protected:
  std::unique_ptr<lp::Solver> solver_ = lp::MakeSolver(GetParam());

  SolveResult SolveGame(const SunkCostGame& g, Player p) const {
    SolveResult r = Solve(BuildMinimaxLp(g, p), *solver_);
    EXPECT_TRUE(r.ok()) << r.diagnostic;
    return r;
  }
};

TEST_P(FlowLpTest, ExampleOneValueIsZero) {
  const SunkCostGame g = BuildSunkCost(ExampleOneGame());
  EXPECT_NEAR(SolveGame(g, Player::kA).value, 0.0, 1e-9);
  EXPECT_NEAR(SolveGame(g, Player::kB).value, 0.0, 1e-9);
}

TEST_P(FlowLpTest, ZeroGameValueIsZero) {
  const SunkCostGame g(3, 2, std::vector<std::vector<double>>(3, std::vector<double>(12, 0.0)));
  EXPECT_NEAR(SolveGame(g, Player::kA).value, 0.0, 1e-9);
}

TEST_P(FlowLpTest, SymmetricSignGameValueIsZero) {
  const SunkCostGame g(1, 1, {{0, -1, 1, 0}, {0, 0, 0, 0}});
  EXPECT_NEAR(SolveGame(g, Player::kA).value, 0.0, 1e-9);
}

TEST_P(FlowLpTest, ZeroBudgetCollapsesToOnePath) {
  const SunkCostGame g(0, 2, {{1, 2, 3}, {0, -1, -4}});
  // A plays (0, 0); B minimizes 1 + 2 + ... over (b1, b2) with b1 + b2 = 2.
  const SolveResult r = SolveGame(g, Player::kA);
  EXPECT_NEAR(r.value, std::min({1.0 - 4.0, 2.0 - 1.0, 3.0 + 0.0}), 1e-9);
}

TEST_P(FlowLpTest, MatchesOracleOnRandomGames) {
  std::mt19937_64 rng(101);
  RandomGameOptions options;
  options.max_n = 2;
  options.max_budget = 4;
  for (int trial = 0; trial < 15; ++trial) {
    const CostBlottoGame game = RandomSmallGame(rng, options);
    const SunkCostGame g = BuildSunkCost(game);
    const double oracle_value = oracle::MatrixGameSolve<double>(game).value;
    const SolveResult a = SolveGame(g, Player::kA);
    const SolveResult b = SolveGame(g, Player::kB);
    EXPECT_NEAR(a.value, oracle_value, 1e-6) << "trial " << trial;
    EXPECT_NEAR(a.value, -b.value, 1e-6) << "trial " << trial;
    // Duality: the opponent's best response to the flow attains the value.
    const Marginals ma = MarginalsFromFlow(a.flow);
    const auto br = BestResponseValue<double>(g, ma, Player::kB);
    EXPECT_NEAR(br.value, -a.value, 1e-6);
    const MixedStrategy xa = UnmapMixedStrategy(DecomposeFlow(a.flow));
    const MixedStrategy xb = UnmapMixedStrategy(DecomposeFlow(b.flow));
    EXPECT_TRUE(CertifyEquilibrium(game, xa, xb).is_equilibrium) << "trial " << trial;
  }
}

TEST_P(FlowLpTest, ExampleOneResourceBounds) {
  const CostBlottoGame game = ExampleOneGame();
  const Statistic stat = ResourceStatistic(game);
  const StatisticBound lo = SolveEquilibriumStatistic(game, stat, Direction::kMinimize, *solver_);
  const StatisticBound hi = SolveEquilibriumStatistic(game, stat, Direction::kMaximize, *solver_);
  EXPECT_NEAR(lo.bound, 0.0, 1e-6);
  EXPECT_NEAR(hi.bound, 2.0, 1e-6);
  EXPECT_LE(lo.bound, hi.bound);
}

TEST_P(FlowLpTest, StatisticWitnessesAreEquilibria) {
  const CostBlottoGame game = CostBlottoGame::SignLinear(2, 4, 4, 0.3);
  const SunkCostGame g = BuildSunkCost(game);
  const SolveResult b = SolveGame(g, Player::kB);
  const MixedStrategy xb = UnmapMixedStrategy(DecomposeFlow(b.flow));
  for (const Statistic& stat : {ResourceStatistic(game), ExpenditureStatistic(game)}) {
    for (Direction dir : {Direction::kMinimize, Direction::kMaximize}) {
      const StatisticBound bound = SolveEquilibriumStatistic(game, stat, dir, *solver_);
      const MixedStrategy xa = UnmapMixedStrategy(DecomposeFlow(bound.witness.flow));
      EXPECT_TRUE(CertifyEquilibrium(game, xa, xb).is_equilibrium) << stat.name;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Backends, FlowLpTest,
                         ::testing::Values("auto", "highs", "simplex", "revised"));

TEST(ExpenditureStatisticTest, LinearCostIsScaledResources) {
  const CostBlottoGame game = CostBlottoGame::SignLinear(3, 5, 5, 0.25);
  const Statistic r = ResourceStatistic(game);
  const Statistic e = ExpenditureStatistic(game);
  ASSERT_EQ(r.weights.size(), e.weights.size());
  for (std::size_t i = 0; i < r.weights.size(); ++i) {
    for (std::size_t t = 0; t < r.weights[i].size(); ++t) {
      EXPECT_DOUBLE_EQ(e.weights[i][t], 0.25 * r.weights[i][t]);
    }
  }
  EXPECT_DOUBLE_EQ(r.weights[3][0], 5.0);
  EXPECT_DOUBLE_EQ(r.weights[0][2], 0.0);
}

TEST(LpStatsTest, CountsScaleQuadratically) {
  auto stats = [](int n_hat, int d) {
    const SunkCostGame g(d, d, std::vector<std::vector<double>>(
                                   n_hat, std::vector<double>((d + 1) * (d + 1), 0.0)));
    return LpStats(BuildMinimaxLp(g, Player::kA));
  };
  const LpSize d40 = stats(5, 40);
  const LpSize d80 = stats(5, 80);
  const double ratio_v = static_cast<double>(d80.num_variables) / d40.num_variables;
  const double ratio_c = static_cast<double>(d80.num_constraints) / d40.num_constraints;
  EXPECT_NEAR(ratio_v, 4.0, 0.6);
  EXPECT_NEAR(ratio_c, 4.0, 0.6);
  const LpSize n10 = stats(10, 30);
  const LpSize n20 = stats(20, 30);
  EXPECT_NEAR(static_cast<double>(n20.num_variables) / n10.num_variables, 2.0, 0.2);
  EXPECT_NEAR(static_cast<double>(n20.num_constraints) / n10.num_constraints, 2.0, 0.2);
}

TEST(LpFileTest, ExportIsDeterministic) {
  const SunkCostGame g = BuildSunkCost(ExampleOneGame());
  std::ostringstream a;
  std::ostringstream b;
  lp::WriteLpFile(BuildMinimaxLp(g, Player::kA).model, a);
  lp::WriteLpFile(BuildMinimaxLp(g, Player::kA).model, b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("c0:"), std::string::npos);
  EXPECT_NE(a.str().find("Bounds"), std::string::npos);
}

}  // namespace
}  // namespace blotto
