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
#include <set>
#include <sstream>
#include <string>

#include "blotto/config.h"
#include "blotto/experiments.h"
#include "blotto/instances.h"
#include "blotto/lp_model.h"
#include "gtest/gtest.h"

namespace blotto {
namespace {

class ExperimentsTest : public ::testing::Test {
 protected:
  std::unique_ptr<lp::Solver> solver_ = lp::MakeSolver("auto");
};

TEST_F(ExperimentsTest, SolveExampleOne) {
  const std::set<PureStrategy> s_star = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (Player p : {Player::kA, Player::kB}) {
    const EquilibriumReport r = SolveForPlayer(ExampleOneGame(), p, *solver_);
    EXPECT_NEAR(r.value, 0.0, 1e-9);
    EXPECT_TRUE(r.certificate.is_equilibrium);
    for (const auto& [s, prob] : r.strategy.support) EXPECT_TRUE(s_star.count(s)) << s.ToString();
    ASSERT_EQ(r.resources_obtained.size(), 3u);
    double total = 0;
    for (double x : r.resources_obtained) total += x;
    EXPECT_NEAR(total, 1.0, 1e-9);
    EXPECT_EQ(r.marginals.n(), 2);
  }
}

TEST_F(ExperimentsTest, ResourcesObtainedMatchesStrategy) {
  const CostBlottoGame game = CostBlottoGame::SignLinear(3, 5, 5, 0.3);
  const EquilibriumReport r = SolveForPlayer(game, Player::kA, *solver_);
  std::vector<double> from_support(6, 0.0);
  for (const auto& [s, prob] : r.strategy.support) from_support[s.Total()] += prob;
  for (int k = 0; k <= 5; ++k) EXPECT_NEAR(from_support[k], r.resources_obtained[k], 1e-7);
}

TEST_F(ExperimentsTest, SolveZeroGame) {
  const CostBlottoGame game = CostBlottoGame::SignLinear(3, 3, 4, 0.0, 0.0);
  EXPECT_NEAR(SolveForPlayer(game, Player::kA, *solver_).value, 0.0, 1e-12);
}

TEST_F(ExperimentsTest, BoundsExampleOne) {
  const BoundsReport r = ComputeBounds(ExampleOneGame(), StatisticKind::kResources, *solver_);
  EXPECT_NEAR(r.min.bound, 0.0, 1e-6);
  EXPECT_NEAR(r.max.bound, 2.0, 1e-6);
  EXPECT_TRUE(r.min.certificate.is_equilibrium);
  EXPECT_TRUE(r.max.certificate.is_equilibrium);
  const BoundsReport b =
      ComputeBounds(ExampleOneGame(), StatisticKind::kResources, *solver_, Player::kB);
  EXPECT_NEAR(b.min.bound, 0.0, 1e-6);
  EXPECT_NEAR(b.max.bound, 2.0, 1e-6);
}

TEST_F(ExperimentsTest, ExpenditureIsScaledResources) {
  const CostBlottoGame game = CostBlottoGame::SignLinear(3, 8, 8, 0.4);
  const BoundsReport res = ComputeBounds(game, StatisticKind::kResources, *solver_);
  const BoundsReport exp = ComputeBounds(game, StatisticKind::kExpenditure, *solver_);
  EXPECT_NEAR(exp.min.bound, 0.4 * res.min.bound, 1e-9);
  EXPECT_NEAR(exp.max.bound, 0.4 * res.max.bound, 1e-9);
}

TEST(HypothesisTest, Classification) {
  const HypothesisPrediction c1 = PredictResources(4, 10, 4.0);
  EXPECT_EQ(c1.which, HypothesisCase::kAllResources);
  EXPECT_EQ(c1.lo, 10);
  const HypothesisPrediction c2 = PredictResources(4, 40, 9.75);
  EXPECT_EQ(c2.which, HypothesisCase::kFloorCapped);
  EXPECT_EQ(c2.lo, 36);
  EXPECT_EQ(c2.hi, 36);
  const HypothesisPrediction c3 = PredictResources(4, 40, 10.0);
  EXPECT_EQ(c3.which, HypothesisCase::kInterval);
  EXPECT_EQ(c3.lo, 36);
  EXPECT_EQ(c3.hi, 40);
  EXPECT_EQ(PredictResources(2, 2, 1.0).which, HypothesisCase::kInterval);
  EXPECT_EQ(PredictResources(2, 2, 1.0).hi, 2);
}

TEST(HypothesisTest, PointChecks) {
  SweepRow row;
  row.point = {4, 40, 40, 10.0};
  row.min_resources = 37;
  row.max_resources = 39;
  HypothesisPoint h = CheckHypothesisPoint(row);
  EXPECT_TRUE(h.pass);
  EXPECT_FALSE(h.boundary);
  row.min_resources = 36 - 1e-5;
  row.max_resources = 40;
  h = CheckHypothesisPoint(row);
  EXPECT_TRUE(h.pass);
  EXPECT_TRUE(h.boundary);
  row.max_resources = row.min_resources;
  EXPECT_FALSE(CheckHypothesisPoint(row).pass);
  row.point.c0_inv = 9.75;
  row.min_resources = row.max_resources = 36.00002;
  EXPECT_TRUE(CheckHypothesisPoint(row).pass);
  row.max_resources = 37;
  EXPECT_FALSE(CheckHypothesisPoint(row).pass);
  row.error = "boom";
  EXPECT_FALSE(CheckHypothesisPoint(row).pass);
}

TEST(HypothesisTest, RejectsNonConformingSpec) {
  SweepSpec spec = SweepSpecFromJson(nlohmann::json::parse(
      R"({"n": [4], "budget_A": [10], "budget_B": [12], "c0_inv": [4]})"));
  EXPECT_THROW(ValidateHypothesisSpec(spec), ConfigError);
  spec = SweepSpecFromJson(nlohmann::json::parse(
      R"({"n": [4], "budget": [10], "c0_inv": [4], "assign_cost": {"kind": "linear", "coeff": 1}})"));
  EXPECT_THROW(ValidateHypothesisSpec(spec), ConfigError);
}

TEST(SweepTest, SmallGridFirstCaseAndDeterminism) {
  const SweepSpec spec = SweepSpecFromJson(nlohmann::json::parse(
      R"({"n": [4], "budget": [10], "c0_inv": [4, 2.5, 1]})"));
  const auto rows = RunSweep(spec, 2, "auto");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(rows[0].error.empty()) << rows[0].error;
  EXPECT_NEAR(rows[0].min_resources, 10.0, 1e-3);
  EXPECT_NEAR(rows[0].max_resources, 10.0, 1e-3);
  EXPECT_EQ(rows[1].point.c0_inv, 2.5);
  const HypothesisReport report = CheckHypothesis(spec, 1, "auto");
  EXPECT_TRUE(report.ok());
  auto strip = [](const std::vector<SweepRow>& r) {
    std::ostringstream out;
    WriteSweepCsv(r, out);
    std::string text;
    std::istringstream in(out.str());
    for (std::string line; std::getline(in, line);) {
      // Drop the timing column, the second to last.
      const auto last = line.rfind(',');
      const auto timing = line.rfind(',', last - 1);
      text += line.substr(0, timing) + line.substr(last) + "\n";
    }
    return text;
  };
  EXPECT_EQ(strip(rows), strip(RunSweep(spec, 1, "auto")));
  std::ostringstream out;
  WriteSweepCsv(rows, out);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), SweepCsvHeader());
}

TEST(SweepTest, ErrorsAreRecorded) {
  const SweepSpec spec = SweepSpecFromJson(nlohmann::json::parse(
      R"({"n": [2], "budget": [2], "c0_inv": [1]})"));
  const auto rows = RunSweep(spec, 1, "no-such-backend");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].error.empty());
  std::ostringstream out;
  WriteSweepCsv(rows, out);
  EXPECT_NE(out.str().find("no-such-backend"), std::string::npos);
}

TEST_F(ExperimentsTest, OracleDiffExampleAndZero) {
  const OracleDiffReport e = OracleDiff(ExampleOneGame(), *solver_);
  EXPECT_TRUE(e.pass);
  EXPECT_LE(e.difference, 1e-9);
  const OracleDiffReport z = OracleDiff(CostBlottoGame::SignLinear(2, 2, 3, 0.0, 0.0), *solver_);
  EXPECT_EQ(z.oracle_value, 0.0);
  EXPECT_NEAR(z.flow_value, 0.0, 1e-12);
}

TEST_F(ExperimentsTest, OracleDiffRandomSuite) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    const CostBlottoGame game = RandomSmallGame(rng);
    const OracleDiffReport r = OracleDiff(game, *solver_);
    EXPECT_TRUE(r.pass) << "trial " << trial << " diff " << r.difference;
  }
}

TEST_F(ExperimentsTest, LpStatsExampleOne) {
  const LpStatsReport r = ComputeLpStats(ExampleOneGame(), *solver_);
  EXPECT_EQ(r.n_hat, 3);
  EXPECT_EQ(r.edges_own, 12);
  EXPECT_EQ(r.status, "optimal");
  EXPECT_GT(r.size.num_variables, 0);
}

}  // namespace
}  // namespace blotto
