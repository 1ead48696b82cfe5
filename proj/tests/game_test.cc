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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "blotto/errors.h"
#include "blotto/game.h"
#include "blotto/instances.h"
#include "blotto/numeric.h"
#include "blotto/payoff.h"
#include "gtest/gtest.h"

namespace blotto {
namespace {

TEST(CostFunctionTest, LinearAndQuadratic) {
  const CostFunction lin = CostFunction::Linear(0.5, 4);
  const CostFunction quad = CostFunction::Quadratic(0.25, 4);
  EXPECT_DOUBLE_EQ(lin(3), 1.5);
  EXPECT_DOUBLE_EQ(quad(4), 4.0);
  EXPECT_TRUE(CostFunction::Zero(3).IsZero());
  EXPECT_FALSE(lin.IsZero());
}

TEST(CostFunctionTest, RejectsDecreasingTable) {
  EXPECT_THROW(CostFunction::Table({0.0, 1.0, 0.5}), PreconditionError);
  EXPECT_THROW(CostFunction::Linear(-1.0, 2), PreconditionError);
  EXPECT_NO_THROW(CostFunction::Table({2.0, 2.0, 3.0}));
}

TEST(CostFunctionTest, RejectsOutOfDomain) {
  const CostFunction f = CostFunction::Table({0.0, 1.0});
  EXPECT_THROW(f(2), PreconditionError);
  EXPECT_THROW(f(-1), PreconditionError);
}

TEST(ValuationTest, SignIsAntisymmetric) {
  const Valuation v = Valuation::Sign(3.0);
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) EXPECT_EQ(v(a, b), -v(b, a));
  }
  EXPECT_EQ(v(2, 1), 3.0);
  EXPECT_EQ(v(1, 1), 0.0);
}

TEST(ValuationTest, TableLookup) {
  const Valuation v = Valuation::Table(2, 3, {1, 2, 3, 4, 5, 6});
  EXPECT_EQ(v(1, 2), 6.0);
  EXPECT_THROW(Valuation::Table(2, 2, {1, 2, 3}), PreconditionError);
}

TEST(GameTest, RejectsSingleBattlefield) {
  EXPECT_THROW(CostBlottoGame::SignLinear(1, 2, 2, 1.0), PreconditionError);
}

TEST(GameTest, RejectsMismatchedCostDomain) {
  std::vector<Valuation> v(2, Valuation::Sign());
  std::vector<CostFunction> ca(2, CostFunction::Zero(3));
  std::vector<CostFunction> cb(2, CostFunction::Zero(2));
  EXPECT_THROW(CostBlottoGame(2, 2, v, ca, cb, CostFunction::Zero(2), CostFunction::Zero(2)),
               PreconditionError);
}

TEST(StrategyTest, Validation) {
  EXPECT_NO_THROW(ValidateStrategy({1, 1}, 2, 2, false, "s"));
  EXPECT_THROW(ValidateStrategy({2, 1}, 2, 2, false, "s"), PreconditionError);
  EXPECT_THROW(ValidateStrategy({1}, 2, 2, false, "s"), PreconditionError);
  EXPECT_THROW(ValidateStrategy({0, 1}, 2, 2, true, "s"), PreconditionError);
  EXPECT_THROW(ValidateStrategy({-1, 1}, 2, 2, false, "s"), PreconditionError);
}

TEST(StrategyTest, MixedValidation) {
  MixedStrategy ok{{{{0, 1}, 0.5}, {{1, 0}, 0.5}}};
  EXPECT_NO_THROW(ValidateMixedStrategy(ok, 2, 2, false, "x"));
  MixedStrategy dup{{{{0, 1}, 0.5}, {{0, 1}, 0.5}}};
  EXPECT_THROW(ValidateMixedStrategy(dup, 2, 2, false, "x"), PreconditionError);
  MixedStrategy short_mass{{{{0, 1}, 0.5}}};
  EXPECT_THROW(ValidateMixedStrategy(short_mass, 2, 2, false, "x"), PreconditionError);
  EXPECT_THROW(ValidateMixedStrategy({}, 2, 2, false, "x"), PreconditionError);
}

TEST(StrategyTest, MixMergesSupport) {
  const MixedStrategy x = MixedStrategy::Pure({0, 1});
  const MixedStrategy y{{{{0, 1}, 0.5}, {{1, 1}, 0.5}}};
  const MixedStrategy m = MixedStrategy::Mix(x, y, 0.5);
  ASSERT_EQ(m.support.size(), 2u);
  EXPECT_DOUBLE_EQ(m.support[0].second, 0.75);
  EXPECT_DOUBLE_EQ(m.support[1].second, 0.25);
}

TEST(PayoffTest, ExampleOneEntries) {
  const CostBlottoGame g = ExampleOneGame();
  EXPECT_EQ(PayoffCosts<double>(g, {0, 0}, {0, 0}), std::make_pair(0.0, 0.0));
  EXPECT_EQ(PayoffCosts<double>(g, {1, 1}, {0, 0}), std::make_pair(0.0, -2.0));
  EXPECT_EQ(PayoffCosts<double>(g, {0, 2}, {1, 0}), std::make_pair(-2.0, -1.0));
}

TEST(PayoffTest, ZeroSumEntries) {
  const CostBlottoGame g = ExampleOneGame();
  EXPECT_EQ(PayoffZero<double>(g, {0, 0}, {0, 0}), 0.0);
  EXPECT_EQ(PayoffZero<double>(g, {1, 1}, {0, 1}), 0.0);
  EXPECT_EQ(PayoffZero<double>(g, {0, 2}, {1, 0}), -1.0);
}

TEST(PayoffTest, RejectsInvalidStrategy) {
  const CostBlottoGame g = ExampleOneGame();
  try {
    PayoffCosts<double>(g, {2, 2}, {0, 0});
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("strategy of A"), std::string::npos);
  }
}

// pi0_B computed independently as -pi_B - cost_A equals -pi0_A.
TEST(PayoffTest, ZeroSumIdentityExact) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const CostBlottoGame g = RandomSmallGame(rng);
    const auto sa = EnumerateStrategies(g.budget_a(), g.n(), false);
    const auto sb = EnumerateStrategies(g.budget_b(), g.n(), false);
    for (const auto& x : sa) {
      for (const auto& z : sb) {
        auto [pa, pb] = PayoffCosts<Rational>(g, x, z);
        const Rational b_zero = pb + TotalCost<Rational>(g, Player::kA, x);
        EXPECT_EQ(PayoffZero<Rational>(g, x, z) + b_zero, 0);
      }
    }
  }
}

// Transferring the opponent's costs leaves payoff differences unchanged.
TEST(PayoffTest, DifferenceIdentity) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const CostBlottoGame g = RandomSmallGame(rng);
    const auto sa = EnumerateStrategies(g.budget_a(), g.n(), false);
    const auto sb = EnumerateStrategies(g.budget_b(), g.n(), false);
    for (const auto& z : sb) {
      for (std::size_t i = 0; i + 1 < sa.size(); ++i) {
        const auto& s = sa[i];
        const auto& t = sa[i + 1];
        const Rational d0 = PayoffZero<Rational>(g, s, z) - PayoffZero<Rational>(g, t, z);
        const Rational dc =
            PayoffCosts<Rational>(g, s, z).first - PayoffCosts<Rational>(g, t, z).first;
        EXPECT_EQ(d0, dc);
        const double f0 = PayoffZero<double>(g, s, z) - PayoffZero<double>(g, t, z);
        const double fc = PayoffCosts<double>(g, s, z).first - PayoffCosts<double>(g, t, z).first;
        EXPECT_NEAR(f0, fc, 1e-12);
      }
    }
  }
}

TEST(EnumerateTest, ExampleOneSets) {
  const std::vector<PureStrategy> partial = EnumerateStrategies(2, 2, false);
  const std::vector<PureStrategy> want = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
  EXPECT_EQ(partial, want);
  const std::vector<PureStrategy> full = EnumerateStrategies(2, 2, true);
  const std::vector<PureStrategy> want_full = {{0, 2}, {1, 1}, {2, 0}};
  EXPECT_EQ(full, want_full);
  EXPECT_EQ(EnumerateStrategies(0, 3, false), std::vector<PureStrategy>{PureStrategy({0, 0, 0})});
}

TEST(EnumerateTest, CountsMatchBinomials) {
  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int d = 0; d <= 8; ++d) {
    for (int n = 1; n <= 5; ++n) {
      const auto partial = EnumerateStrategies(d, n, false);
      EXPECT_EQ(static_cast<long>(partial.size()), binom(d + n, n));
      EXPECT_EQ(static_cast<long>(CountStrategies(d, n, false)), binom(d + n, n));
      EXPECT_TRUE(std::is_sorted(partial.begin(), partial.end()));
      EXPECT_EQ(std::adjacent_find(partial.begin(), partial.end()), partial.end());
      EXPECT_EQ(CountStrategies(d, n, true), EnumerateStrategies(d, n, true).size());
      EXPECT_EQ(static_cast<long>(CountStrategies(d, n, true)), binom(d + n - 1, n - 1));
    }
  }
}

TEST(EnumerateTest, CapRaisesScaleError) {
  try {
    EnumerateStrategies(20, 6, false, 1000);
    FAIL() << "expected ScaleExceededError";
  } catch (const ScaleExceededError& e) {
    EXPECT_NE(std::string(e.what()).find("oracle scale exceeded"), std::string::npos);
  }
}

TEST(ExpectedPayoffTest, PointMasses) {
  const CostBlottoGame g = ExampleOneGame();
  const auto [a, b] = ExpectedPayoff(g, MixedStrategy::Pure({0, 0}), MixedStrategy::Pure({0, 0}),
                                     PayoffVariant::kCosts);
  EXPECT_EQ(a, 0.0);
  EXPECT_EQ(b, 0.0);
}

// A uniform over {(0,0),(0,1),(1,0),(1,1)} against B's (0,0): A's entries in
// that column are all 0 and B's are 0, -1, -1, -2.
TEST(ExpectedPayoffTest, UniformAgainstEmpty) {
  const CostBlottoGame g = ExampleOneGame();
  const MixedStrategy uniform{{{{0, 0}, 0.25}, {{0, 1}, 0.25}, {{1, 0}, 0.25}, {{1, 1}, 0.25}}};
  const auto [a, b] =
      ExpectedPayoff(g, uniform, MixedStrategy::Pure({0, 0}), PayoffVariant::kCosts);
  EXPECT_DOUBLE_EQ(a, 0.0);
  EXPECT_DOUBLE_EQ(b, -1.0);
}

TEST(ExpectedPayoffTest, ZeroVariantSumsToZero) {
  std::mt19937_64 rng(5);
  const CostBlottoGame g = RandomSmallGame(rng);
  const auto sa = EnumerateStrategies(g.budget_a(), g.n(), false);
  const auto sb = EnumerateStrategies(g.budget_b(), g.n(), false);
  MixedStrategy xa{{{sa.front(), 0.3}, {sa.back(), 0.7}}};
  if (sa.size() == 1) xa = MixedStrategy::Pure(sa.front());
  const MixedStrategy xb = MixedStrategy::Pure(sb.back());
  const auto [a, b] = ExpectedPayoff(g, xa, xb, PayoffVariant::kZero);
  EXPECT_DOUBLE_EQ(a + b, 0.0);
}

}  // namespace
}  // namespace blotto
