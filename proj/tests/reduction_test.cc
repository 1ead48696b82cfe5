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

#include <random>
#include <vector>

#include "blotto/errors.h"
#include "blotto/instances.h"
#include "blotto/numeric.h"
#include "blotto/payoff.h"
#include "blotto/reduction.h"
#include "gtest/gtest.h"

namespace blotto {
namespace {

TEST(BuildSunkCostTest, ExampleOneTables) {
  const SunkCostGame g = BuildSunkCost(ExampleOneGame());
  ASSERT_EQ(g.n_hat(), 3);
  EXPECT_EQ(g.value(2, 1, 2), -1.0);
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      EXPECT_EQ(g.value(0, a, b), (a > b) - (a < b));
      EXPECT_EQ(g.value(2, a, b), -(2 - a) + (2 - b));
    }
  }
}

TEST(BuildSunkCostTest, ZeroCostsLeaveValuations) {
  const CostBlottoGame game = CostBlottoGame::SignLinear(3, 3, 2, 0.0, 2.0);
  const SunkCostGame g = BuildSunkCost(game);
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 2; ++b) {
      for (int i = 0; i < 3; ++i) EXPECT_EQ(g.value(i, a, b), game.valuation(i)(a, b));
      EXPECT_EQ(g.value(3, a, b), 0.0);
    }
  }
}

TEST(BuildSunkCostTest, SwappedNegatesAndTransposes) {
  std::mt19937_64 rng(3);
  const SunkCostGame g = BuildSunkCost(RandomSmallGame(rng));
  const SunkCostGame s = g.Swapped();
  EXPECT_EQ(s.budget_a(), g.budget_b());
  EXPECT_EQ(s.budget_b(), g.budget_a());
  for (int i = 0; i < g.n_hat(); ++i) {
    for (int a = 0; a <= g.budget_a(); ++a) {
      for (int b = 0; b <= g.budget_b(); ++b) EXPECT_EQ(s.value(i, b, a), -g.value(i, a, b));
    }
  }
}

TEST(MapStrategyTest, Examples) {
  EXPECT_EQ(MapStrategy({0, 1}, 2), PureStrategy({0, 1, 1}));
  EXPECT_EQ(MapStrategy({0, 0}, 2), PureStrategy({0, 0, 2}));
  EXPECT_EQ(MapStrategy({2, 0}, 2), PureStrategy({2, 0, 0}));
  EXPECT_THROW(MapStrategy({2, 1}, 2), PreconditionError);
}

TEST(MapStrategyTest, UnmapExamples) {
  EXPECT_EQ(UnmapStrategy({0, 1, 1}), PureStrategy({0, 1}));
  EXPECT_EQ(UnmapStrategy({0, 0, 2}), PureStrategy({0, 0}));
  EXPECT_EQ(UnmapStrategy({1, 1, 0}), PureStrategy({1, 1}));
  EXPECT_THROW(UnmapStrategy({1, 1, 1}, 2), PreconditionError);
}

TEST(MapStrategyTest, ObtainedResources) {
  EXPECT_EQ(ObtainedResources({0, 1, 1}, 2), 1);
  EXPECT_EQ(ObtainedResources({0, 0, 2}, 2), 0);
  EXPECT_EQ(ObtainedResources({2, 0, 0}, 2), 2);
}

TEST(MapStrategyTest, Bijection) {
  for (int d = 0; d <= 6; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const auto partial = EnumerateStrategies(d, n, false);
      const auto full = EnumerateStrategies(d, n + 1, true);
      ASSERT_EQ(partial.size(), full.size());
      for (const auto& s : partial) {
        const PureStrategy m = MapStrategy(s, d);
        EXPECT_EQ(m.Total(), d);
        EXPECT_EQ(UnmapStrategy(m, d), s);
        EXPECT_EQ(ObtainedResources(m, d), s.Total());
      }
      for (const auto& s : full) EXPECT_EQ(MapStrategy(UnmapStrategy(s), d), s);
    }
  }
}

TEST(MapStrategyTest, MixedRoundTrip) {
  const MixedStrategy xi{{{{0, 1}, 0.25}, {{1, 1}, 0.75}}};
  const MixedStrategy hat = MapMixedStrategy(xi, 2);
  EXPECT_EQ(hat.support[0].first, PureStrategy({0, 1, 1}));
  const MixedStrategy back = UnmapMixedStrategy(hat);
  EXPECT_EQ(back.support, xi.support);
}

// The zero-sum payoff equals the reduced payoff of the mapped profile.
TEST(PayoffPreservationTest, ExhaustiveSmallRational) {
  std::mt19937_64 rng(21);
  RandomGameOptions options;
  options.max_budget = 4;
  for (int trial = 0; trial < 30; ++trial) {
    const CostBlottoGame game = RandomSmallGame(rng, options);
    const auto sa = EnumerateStrategies(game.budget_a(), game.n(), false);
    const auto sb = EnumerateStrategies(game.budget_b(), game.n(), false);
    for (const auto& x : sa) {
      for (const auto& z : sb) {
        const PureStrategy xm = MapStrategy(x, game.budget_a());
        const PureStrategy zm = MapStrategy(z, game.budget_b());
        Rational reduced(0);
        for (int i = 0; i <= game.n(); ++i) {
          reduced += ReducedValuation<Rational>(game, i, xm[i], zm[i]);
        }
        EXPECT_EQ(PayoffZero<Rational>(game, x, z), reduced);
      }
    }
  }
}

TEST(PayoffPreservationTest, RandomLargerProfiles) {
  std::mt19937_64 rng(22);
  RandomGameOptions options;
  options.max_n = 6;
  options.max_budget = 12;
  for (int trial = 0; trial < 1000; ++trial) {
    const CostBlottoGame game = RandomSmallGame(rng, options);
    const SunkCostGame sunk = BuildSunkCost(game);
    auto draw = [&](int budget) {
      std::vector<int> units(game.n(), 0);
      std::uniform_int_distribution<int> dist(0, game.n());
      for (int k = 0; k < budget; ++k) {
        const int slot = dist(rng);
        if (slot < game.n()) ++units[slot];
      }
      return PureStrategy(units);
    };
    const PureStrategy x = draw(game.budget_a());
    const PureStrategy z = draw(game.budget_b());
    EXPECT_NEAR(PayoffZero<double>(game, x, z),
                sunk.Payoff(MapStrategy(x, game.budget_a()), MapStrategy(z, game.budget_b())),
                1e-12);
  }
}

}  // namespace
}  // namespace blotto
