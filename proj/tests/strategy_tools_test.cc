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

#include <memory>
#include <random>
#include <vector>

#include "blotto/errors.h"
#include "blotto/flow_lp.h"
#include "blotto/instances.h"
#include "blotto/lp_model.h"
#include "blotto/numeric.h"
#include "blotto/payoff.h"
#include "blotto/reduction.h"
#include "blotto/strategy_tools.h"
#include "gtest/gtest.h"

namespace blotto {
namespace {

StrategyFlow HalfHalf(const LayeredGraph& g, const std::vector<int>& x, const std::vector<int>& y) {
  StrategyFlow f(g);
  const StrategyFlow px = StrategyFlow::Path(g, x);
  const StrategyFlow py = StrategyFlow::Path(g, y);
  for (int e = 0; e < g.num_edges(); ++e) f.edge_flow[e] = 0.5 * (px.edge_flow[e] + py.edge_flow[e]);
  return f;
}

TEST(MarginalsTest, PathFlow) {
  const LayeredGraph g(3, 2);
  const Marginals m = MarginalsFromFlow(StrategyFlow::Path(g, {0, 1, 1}));
  EXPECT_EQ(m.p[0], (std::vector<double>{1, 0, 0}));
  EXPECT_EQ(m.p[1], (std::vector<double>{0, 1, 0}));
  EXPECT_EQ(m.p[2], (std::vector<double>{0, 1, 0}));
}

TEST(MarginalsTest, HalfHalfFlow) {
  const LayeredGraph g(3, 2);
  const Marginals m = MarginalsFromFlow(HalfHalf(g, {0, 0, 2}, {1, 1, 0}));
  EXPECT_EQ(m.p[0], (std::vector<double>{0.5, 0.5, 0}));
  for (const auto& row : m.p) {
    double total = 0;
    for (double x : row) total += x;
    EXPECT_NEAR(total, 1.0, kMarginalTolerance);
  }
}

TEST(MarginalsTest, RejectsBrokenFlow) {
  const LayeredGraph g(3, 2);
  StrategyFlow f = StrategyFlow::Path(g, {0, 1, 1});
  f.edge_flow[0] = 0.3;
  EXPECT_THROW(MarginalsFromFlow(f), InvalidFlowError);
}

TEST(MarginalsTest, FromMixedMatchesFromFlow) {
  const LayeredGraph g(3, 2);
  const MixedStrategy xi{{{{0, 0, 2}, 0.5}, {{1, 1, 0}, 0.5}}};
  const Marginals a = MarginalsFromMixed<double>(xi, 3, 2);
  const Marginals b = MarginalsFromFlow(HalfHalf(g, {0, 0, 2}, {1, 1, 0}));
  EXPECT_EQ(a.p, b.p);
}

TEST(DecomposeFlowTest, PathFlow) {
  const LayeredGraph g(3, 2);
  const MixedStrategy xi = DecomposeFlow(StrategyFlow::Path(g, {1, 0, 1}));
  ASSERT_EQ(xi.support.size(), 1u);
  EXPECT_EQ(xi.support[0].first, PureStrategy({1, 0, 1}));
  EXPECT_DOUBLE_EQ(xi.support[0].second, 1.0);
}

TEST(DecomposeFlowTest, HalfHalfFlow) {
  const LayeredGraph g(3, 2);
  const MixedStrategy xi = DecomposeFlow(HalfHalf(g, {0, 0, 2}, {1, 1, 0}));
  ASSERT_EQ(xi.support.size(), 2u);
  EXPECT_EQ(xi.support[0].first, PureStrategy({0, 0, 2}));
  EXPECT_DOUBLE_EQ(xi.support[0].second, 0.5);
  EXPECT_EQ(xi.support[1].first, PureStrategy({1, 1, 0}));
  EXPECT_DOUBLE_EQ(xi.support[1].second, 0.5);
}

TEST(DecomposeFlowTest, RandomMixturesPreserveMarginals) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n_hat = 2 + trial % 4;
    const int d = 1 + trial % 7;
    const LayeredGraph g(n_hat, d);
    const auto all = EnumerateStrategies(d, n_hat, true);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_real_distribution<double> weight(0.1, 1.0);
    StrategyFlow f(g);
    double total = 0.0;
    for (int k = 0; k < 6; ++k) {
      const double w = weight(rng);
      const StrategyFlow p = StrategyFlow::Path(g, all[pick(rng)].units);
      for (int e = 0; e < g.num_edges(); ++e) f.edge_flow[e] += w * p.edge_flow[e];
      total += w;
    }
    for (double& x : f.edge_flow) x /= total;
    const MixedStrategy xi = DecomposeFlow(f);
    EXPECT_LE(static_cast<int>(xi.support.size()), g.num_edges());
    EXPECT_NO_THROW(ValidateMixedStrategy(xi, n_hat, d, true, "decomposition"));
    const Marginals a = MarginalsFromFlow(f);
    const Marginals b = MarginalsFromMixed<double>(xi, n_hat, d);
    for (int i = 0; i < n_hat; ++i) {
      for (int t = 0; t <= d; ++t) EXPECT_NEAR(a.p[i][t], b.p[i][t], 1e-7);
    }
  }
}

TEST(BestResponseTest, ZeroGameTieBreak) {
  const SunkCostGame g(3, 2, std::vector<std::vector<double>>(4, std::vector<double>(12, 0.0)));
  const Marginals opp = MarginalsFromMixed<double>(MixedStrategy::Pure({1, 1, 0, 0}), 4, 2);
  const auto br = BestResponseValue<double>(g, opp, Player::kA);
  EXPECT_EQ(br.value, 0.0);
  EXPECT_EQ(br.strategy, PureStrategy({0, 0, 0, 3}));
}

TEST(BestResponseTest, ExampleOneAgainstEmpty) {
  const SunkCostGame g = BuildSunkCost(ExampleOneGame());
  const Marginals opp = MarginalsFromMixed<double>(MixedStrategy::Pure({0, 0, 2}), 3, 2);
  const auto br = BestResponseValue<double>(g, opp, Player::kA);
  EXPECT_DOUBLE_EQ(br.value, 0.0);
  EXPECT_EQ(br.strategy, PureStrategy({0, 0, 2}));
}

TEST(BestResponseTest, ExampleOneAgainstUniform) {
  const SunkCostGame g = BuildSunkCost(ExampleOneGame());
  const MixedStrategy uniform{{{{0, 0}, 0.25}, {{0, 1}, 0.25}, {{1, 0}, 0.25}, {{1, 1}, 0.25}}};
  const Marginals opp = MarginalsFromMixed<double>(MapMixedStrategy(uniform, 2), 3, 2);
  EXPECT_NEAR(BestResponseValue<double>(g, opp, Player::kA).value, 0.0, 1e-15);
  EXPECT_NEAR(BestResponseValue<double>(g, opp, Player::kB).value, 0.0, 1e-15);
}

TEST(BestResponseTest, RejectsDimensionMismatch) {
  const SunkCostGame g = BuildSunkCost(ExampleOneGame());
  const Marginals opp = MarginalsFromMixed<double>(MixedStrategy::Pure({0, 2}), 2, 2);
  EXPECT_THROW(BestResponseValue<double>(g, opp, Player::kA), PreconditionError);
}

// Exhaustive maximization over full assignments, in exact arithmetic.
TEST(BestResponseTest, MatchesExhaustiveExactly) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> mass(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n_hat = 1 + trial % 4;
    const int da = trial % 7;
    const int db = (trial * 3) % 7;
    std::vector<std::vector<double>> tables(n_hat,
                                            std::vector<double>((da + 1) * (db + 1)));
    for (auto& t : tables) {
      for (double& x : t) x = entry(rng) / 4.0;
    }
    const SunkCostGame g(da, db, tables);
    for (Player p : {Player::kA, Player::kB}) {
      const SunkCostGame o = p == Player::kA ? g : g.Swapped();
      BasicMarginals<Rational> opp;
      opp.p.assign(n_hat, std::vector<Rational>(o.budget_b() + 1));
      for (auto& row : opp.p) {
        Rational total(0);
        for (Rational& x : row) {
          x = mass(rng);
          total += x;
        }
        if (total == 0) {
          row[0] = 1;
          total = 1;
        }
        for (Rational& x : row) x /= total;
      }
      Rational best(0);
      bool first = true;
      for (const auto& s : EnumerateStrategies(o.budget_a(), n_hat, true)) {
        Rational v(0);
        for (int i = 0; i < n_hat; ++i) {
          for (int b = 0; b <= o.budget_b(); ++b) v += opp.p[i][b] * Rational(o.value(i, s[i], b));
        }
        if (first || v > best) best = v;
        first = false;
      }
      const auto dp = BestResponseValue<Rational>(g, opp, p);
      const auto serial = BestResponseValueSerial<Rational>(g, opp, p);
      EXPECT_EQ(dp.value, best) << "trial " << trial;
      EXPECT_EQ(serial.value, best);
      EXPECT_EQ(dp.strategy, serial.strategy);
      EXPECT_EQ(dp.strategy.Total(), o.budget_a());
    }
  }
}

TEST(CertifyTest, ExampleOnePointMasses) {
  const CostBlottoGame game = ExampleOneGame();
  const Certificate c = CertifyEquilibrium(game, MixedStrategy::Pure({0, 0}),
                                           MixedStrategy::Pure({0, 0}));
  EXPECT_TRUE(c.is_equilibrium);
  EXPECT_NEAR(c.gap_a, 0.0, 1e-12);
  EXPECT_NEAR(c.gap_b, 0.0, 1e-12);
  EXPECT_TRUE(
      CertifyEquilibrium(game, MixedStrategy::Pure({1, 1}), MixedStrategy::Pure({0, 1}))
          .is_equilibrium);
}

// Against an equilibrium strategy of B the two gaps add up to the shortfall
// of A's strategy below the value, 1 for (0,2) and (2,0).
TEST(CertifyTest, ExampleOneRefutesConcentratedStrategies) {
  const CostBlottoGame game = ExampleOneGame();
  for (const PureStrategy& s : {PureStrategy{0, 2}, PureStrategy{2, 0}}) {
    for (const PureStrategy& z : {PureStrategy{0, 0}, PureStrategy{1, 1}}) {
      const Certificate c = CertifyEquilibrium(game, MixedStrategy::Pure(s), MixedStrategy::Pure(z));
      EXPECT_FALSE(c.is_equilibrium);
      EXPECT_NEAR(c.gap_a + c.gap_b, 1.0, 1e-12);
    }
    const Certificate c =
        CertifyEquilibrium(game, MixedStrategy::Pure(s), MixedStrategy::Pure({0, 0}));
    EXPECT_NEAR(c.gap_a, 1.0, 1e-12);
  }
}

TEST(CertifyTest, RejectsInvalidStrategy) {
  EXPECT_THROW(CertifyEquilibrium(ExampleOneGame(), MixedStrategy::Pure({2, 1}),
                                  MixedStrategy::Pure({0, 0})),
               PreconditionError);
}

// Equilibria from different secondary objectives can be crossed and mixed.
TEST(CertifyTest, InterchangeabilityAndConvexity) {
  const auto solver = lp::MakeSolver("auto");
  const CostBlottoGame game = CostBlottoGame::SignLinear(3, 6, 6, 0.2);
  auto witness = [&](Player p, Direction dir) {
    const Statistic s = ResourceStatistic(game, p);
    const StatisticBound b = SolveEquilibriumStatistic(game, s, dir, *solver, p);
    return UnmapMixedStrategy(DecomposeFlow(b.witness.flow));
  };
  const MixedStrategy a_lo = witness(Player::kA, Direction::kMinimize);
  const MixedStrategy a_hi = witness(Player::kA, Direction::kMaximize);
  const MixedStrategy b_lo = witness(Player::kB, Direction::kMinimize);
  const MixedStrategy b_hi = witness(Player::kB, Direction::kMaximize);
  EXPECT_TRUE(CertifyEquilibrium(game, a_lo, b_hi).is_equilibrium);
  EXPECT_TRUE(CertifyEquilibrium(game, a_hi, b_lo).is_equilibrium);
  const MixedStrategy a_mid = MixedStrategy::Mix(a_lo, a_hi, 0.5);
  const MixedStrategy b_mid = MixedStrategy::Mix(b_lo, b_hi, 0.5);
  EXPECT_TRUE(CertifyEquilibrium(game, a_mid, b_lo).is_equilibrium);
  EXPECT_TRUE(CertifyEquilibrium(game, a_hi, b_mid).is_equilibrium);
}

TEST(ExpectedSunkPayoffTest, MatchesZeroSumPayoff) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const CostBlottoGame game = RandomSmallGame(rng);
    const SunkCostGame sunk = BuildSunkCost(game);
    const auto sa = EnumerateStrategies(game.budget_a(), game.n(), false);
    const auto sb = EnumerateStrategies(game.budget_b(), game.n(), false);
    const MixedStrategy xa = MixedStrategy::Pure(sa.back());
    const MixedStrategy xb = MixedStrategy::Pure(sb.front());
    const Marginals ma =
        MarginalsFromMixed<double>(MapMixedStrategy(xa, game.budget_a()), game.n() + 1, game.budget_a());
    const Marginals mb =
        MarginalsFromMixed<double>(MapMixedStrategy(xb, game.budget_b()), game.n() + 1, game.budget_b());
    EXPECT_NEAR(ExpectedSunkPayoff(sunk, ma, mb), PayoffZero<double>(game, sa.back(), sb.front()),
                1e-12);
  }
}

}  // namespace
}  // namespace blotto
