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
#include <utility>
#include <vector>

#include "blotto/errors.h"
#include "blotto/instances.h"
#include "blotto/numeric.h"
#include "blotto/oracle.h"
#include "blotto/payoff.h"
#include "example_one_fixture.h"
#include "gtest/gtest.h"

namespace blotto::oracle {
namespace {

using ::blotto::fixtures::FixtureMatrix;
using ::blotto::fixtures::FixtureOrder;
using ::blotto::fixtures::SwappedCell;

int IndexOf(const std::vector<PureStrategy>& list, const PureStrategy& s) {
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (list[k] == s) return static_cast<int>(k);
  }
  return -1;
}

TEST(BuildMatrixTest, ReproducesExampleOneFixtureExactly) {
  const MatrixGame<Rational> mg = BuildMatrix<Rational>(ExampleOneGame(), PayoffVariant::kCosts);
  ASSERT_EQ(mg.rows(), 6);
  ASSERT_EQ(mg.cols(), 6);
  const auto& order = FixtureOrder();
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      const int i = IndexOf(mg.row_strategies, order[r]);
      const int j = IndexOf(mg.col_strategies, order[c]);
      ASSERT_GE(i, 0);
      ASSERT_GE(j, 0);
      const int fc = SwappedCell(r, c) ? 9 - c : c;
      EXPECT_EQ(mg.payoff[i][j], Rational(FixtureMatrix()[r][fc].first)) << r << "," << c;
      EXPECT_EQ(mg.payoff_b[i][j], Rational(FixtureMatrix()[r][fc].second)) << r << "," << c;
    }
  }
}

// The swapped cells break the symmetry pi_A(x, z) = pi_B(z, x) of the
// symmetric game, so no payoff function reproduces them as printed.
TEST(BuildMatrixTest, SwappedCellsAreInconsistentWithSymmetry) {
  const auto& m = FixtureMatrix();
  int asymmetric = 0;
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      if (m[r][c].first != m[c][r].second) ++asymmetric;
      if (!SwappedCell(r, c) && !SwappedCell(c, r)) EXPECT_EQ(m[r][c].first, m[c][r].second) << r << "," << c;
    }
  }
  EXPECT_EQ(asymmetric, 8);
}

TEST(BuildMatrixTest, TransferredEntries) {
  const MatrixGame<double> mg = BuildMatrix<double>(ExampleOneGame());
  const int empty = IndexOf(mg.row_strategies, {0, 0});
  const int both = IndexOf(mg.row_strategies, {1, 1});
  EXPECT_EQ(mg.payoff[empty][empty], 0.0);
  EXPECT_EQ(mg.payoff[both][empty], 0.0);
  EXPECT_EQ(mg.payoff_b[both][empty], 0.0);
}

TEST(BuildMatrixTest, ZeroGameGivesZeroMatrix) {
  const MatrixGame<double> mg = BuildMatrix<double>(CostBlottoGame::SignLinear(2, 3, 2, 0.0, 0.0));
  for (const auto& row : mg.payoff) {
    for (double x : row) EXPECT_EQ(x, 0.0);
  }
}

TEST(BuildMatrixTest, ParallelMatchesSerial) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    const CostBlottoGame g = RandomSmallGame(rng);
    const MatrixGame<double> p = BuildMatrix<double>(g);
    const MatrixGame<double> s = BuildMatrixSerial<double>(g);
    EXPECT_EQ(p.payoff, s.payoff);
    EXPECT_EQ(p.row_strategies, s.row_strategies);
  }
}

TEST(BuildMatrixTest, CapRaisesScaleError) {
  EXPECT_THROW(BuildMatrix<double>(CostBlottoGame::SignLinear(4, 30, 30, 0.1)),
               ScaleExceededError);
}

TEST(SolveMatrixGameTest, MatchingPennies) {
  const MatrixSolution<Rational> s = SolveMatrixGame<Rational>({{1, -1}, {-1, 1}});
  EXPECT_EQ(s.value, 0);
  EXPECT_EQ(s.row, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(s.col, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
}

TEST(SolveMatrixGameTest, SingleEntry) {
  const MatrixSolution<double> s = SolveMatrixGame<double>({{7.0}});
  EXPECT_DOUBLE_EQ(s.value, 7.0);
  EXPECT_DOUBLE_EQ(s.row[0], 1.0);
  EXPECT_DOUBLE_EQ(s.col[0], 1.0);
}

// Rock-paper-scissors with a scaled payoff: value 0, uniform strategies.
TEST(SolveMatrixGameTest, RockPaperScissors) {
  const MatrixSolution<Rational> s =
      SolveMatrixGame<Rational>({{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}});
  EXPECT_EQ(s.value, 0);
  for (const Rational& p : s.row) EXPECT_EQ(p, Rational(1, 3));
}

// Row 0 strictly dominates; value is its minimum 2.
TEST(SolveMatrixGameTest, Dominance) {
  const MatrixSolution<double> s = SolveMatrixGame<double>({{3, 2, 4}, {1, 0, 1}});
  EXPECT_NEAR(s.value, 2.0, 1e-12);
  EXPECT_NEAR(s.row[0], 1.0, 1e-12);
  EXPECT_NEAR(s.col[1], 1.0, 1e-12);
}

TEST(MatrixGameSolveTest, ExampleOneValueIsZero) {
  EXPECT_EQ(MatrixGameSolve<Rational>(ExampleOneGame()).value, 0);
  EXPECT_NEAR(MatrixGameSolve<double>(ExampleOneGame()).value, 0.0, 1e-12);
}

// Optimal strategies guarantee the value: min over columns of x'M and max
// over rows of My bracket it, and every pure row and column satisfies the
// value sandwich.
TEST(MatrixGameSolveTest, RandomGamesAreOptimalExactly) {
  std::mt19937_64 rng(77);
  RandomGameOptions options;
  options.max_budget = 3;
  for (int trial = 0; trial < 10; ++trial) {
    const CostBlottoGame game = RandomSmallGame(rng, options);
    const MatrixGame<Rational> mg = BuildMatrix<Rational>(game);
    const MatrixSolution<Rational> s = SolveMatrixGame(mg.payoff);
    for (int c = 0; c < mg.cols(); ++c) {
      Rational guaranteed(0);
      Rational column_max = mg.payoff[0][c];
      for (int r = 0; r < mg.rows(); ++r) {
        guaranteed += s.row[r] * mg.payoff[r][c];
        column_max = std::max(column_max, mg.payoff[r][c]);
      }
      EXPECT_GE(guaranteed, s.value);
      EXPECT_GE(column_max, s.value);
    }
    for (int r = 0; r < mg.rows(); ++r) {
      Rational conceded(0);
      Rational row_min = mg.payoff[r][0];
      for (int c = 0; c < mg.cols(); ++c) {
        conceded += s.col[c] * mg.payoff[r][c];
        row_min = std::min(row_min, mg.payoff[r][c]);
      }
      EXPECT_LE(conceded, s.value);
      EXPECT_LE(row_min, s.value);
    }
  }
}

TEST(ExhaustiveTest, ExampleOneEquilibriumStrategies) {
  const std::vector<PureStrategy> want = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  const EquilibriumSets<Rational> exact = ExhaustiveEquilibriumStrategies<Rational>(ExampleOneGame());
  EXPECT_EQ(exact.value, 0);
  EXPECT_EQ(exact.row_set, want);
  EXPECT_EQ(exact.col_set, want);
  const EquilibriumSets<double> approx = ExhaustiveEquilibriumStrategies<double>(ExampleOneGame());
  EXPECT_EQ(approx.row_set, want);
  EXPECT_EQ(approx.col_set, want);
}

TEST(ExhaustiveTest, ZeroGameKeepsEverything) {
  const CostBlottoGame g = CostBlottoGame::SignLinear(2, 2, 3, 0.0, 0.0);
  const EquilibriumSets<Rational> sets = ExhaustiveEquilibriumStrategies<Rational>(g);
  EXPECT_EQ(sets.row_set.size(), CountStrategies(2, 2, false));
  EXPECT_EQ(sets.col_set.size(), CountStrategies(3, 2, false));
}

TEST(ToMixedTest, DropsZeros) {
  const MixedStrategy xi = ToMixed<double>({{0, 0}, {0, 1}, {1, 0}}, {0.5, 0.0, 0.5});
  ASSERT_EQ(xi.support.size(), 2u);
  EXPECT_EQ(xi.support[1].first, PureStrategy({1, 0}));
}

}  // namespace
}  // namespace blotto::oracle
