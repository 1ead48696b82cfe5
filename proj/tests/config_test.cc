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
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "blotto/config.h"
#include "blotto/errors.h"
#include "blotto/instances.h"
#include "gtest/gtest.h"

namespace blotto {
namespace {

using nlohmann::json;

std::string FieldOf(const json& doc) {
  try {
    GameFromJson(doc);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<accepted>";
}

json ExampleOneDoc() {
  return json::parse(R"({
    "n": 2, "budget_A": 2, "budget_B": 2,
    "valuations": {"kind": "sign", "weight": 1},
    "obtain_cost_A": {"kind": "linear", "coeff": 1},
    "obtain_cost_B": {"kind": "linear", "coeff": 1}
  })");
}

TEST(GameConfigTest, ExampleOne) { EXPECT_EQ(GameFromJson(ExampleOneDoc()), ExampleOneGame()); }

TEST(GameConfigTest, PerBattlefieldLists) {
  const json doc = json::parse(R"({
    "n": 2, "budget_A": 1, "budget_B": 2,
    "valuations": [{"kind": "sign", "weight": 2},
                   {"kind": "table", "table": [[0, 1, 2], [3, 4, 5]]}],
    "assign_costs_A": [{"kind": "none"}, {"kind": "quadratic", "coeff": 0.5}],
    "assign_costs_B": {"kind": "table", "table": [0, 0.25, 1]},
    "obtain_cost_B": {"kind": "linear", "coeff": 0.5}
  })");
  const CostBlottoGame g = GameFromJson(doc);
  EXPECT_EQ(g.valuation(0)(1, 0), 2.0);
  EXPECT_EQ(g.valuation(1)(1, 2), 5.0);
  EXPECT_EQ(g.assign_cost(Player::kA, 1)(1), 0.5);
  EXPECT_EQ(g.assign_cost(Player::kB, 0)(2), 1.0);
  EXPECT_TRUE(g.obtain_cost(Player::kA).IsZero());
  EXPECT_EQ(g.obtain_cost(Player::kB)(2), 1.0);
}

TEST(GameConfigTest, DiagnosticsNameTheField) {
  json doc = ExampleOneDoc();
  doc["assign_costs_A"] = json::array({{{"kind", "none"}},
                                       {{"kind", "table"}, {"table", {0, 1, 0.5}}}});
  EXPECT_EQ(FieldOf(doc), "assign_costs_A[1].table");

  doc = ExampleOneDoc();
  doc["obtain_cost_B"] = {{"kind", "table"}, {"table", {0, 1}}};
  EXPECT_EQ(FieldOf(doc), "obtain_cost_B.table");

  doc = ExampleOneDoc();
  doc["obtain_cost_A"] = {{"kind", "cubic"}};
  EXPECT_EQ(FieldOf(doc), "obtain_cost_A.kind");

  doc = ExampleOneDoc();
  doc["n"] = 1;
  EXPECT_EQ(FieldOf(doc), "n");

  doc = ExampleOneDoc();
  doc.erase("budget_B");
  EXPECT_EQ(FieldOf(doc), "budget_B");

  doc = ExampleOneDoc();
  doc["valuation"] = doc["valuations"];
  EXPECT_EQ(FieldOf(doc), "valuation");

  doc = ExampleOneDoc();
  doc["valuations"] = json::array({{{"kind", "sign"}}});
  EXPECT_EQ(FieldOf(doc), "valuations");

  doc = ExampleOneDoc();
  doc["valuations"] = {{"kind", "table"}, {"table", {{0, 1, 2}, {0, 1}, {0, 1, 2}}}};
  EXPECT_EQ(FieldOf(doc), "valuations.table[1]");
}

TEST(GameConfigTest, SyntaxErrorsReportLineAndColumn) {
  std::istringstream in("{\n  \"n\": 2,\n  oops\n}");
  try {
    ParseJson(in, "cfg.json");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "cfg.json");
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(GameConfigTest, RoundTrip) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const CostBlottoGame g = RandomSmallGame(rng);
    const json doc = GameToJson(g);
    EXPECT_EQ(GameFromJson(doc), g);
    EXPECT_EQ(GameToJson(GameFromJson(json::parse(doc.dump()))), doc);
  }
  const CostBlottoGame e = ExampleOneGame();
  EXPECT_EQ(GameFromJson(GameToJson(e)), e);
  const CostBlottoGame q = CostBlottoGame(
      3, 3, {Valuation::Sign(1), Valuation::Sign(2)},
      {CostFunction::Quadratic(0.1, 3), CostFunction::Zero(3)},
      {CostFunction::Linear(0.2, 3), CostFunction::Table({0, 1, 1, 2})},
      CostFunction::Linear(0.5, 3), CostFunction::Zero(3));
  EXPECT_EQ(GameFromJson(GameToJson(q)), q);
}

TEST(GridTest, NoAccumulationDrift) {
  const std::vector<double> g = GridValues(1.0, 10.0, 0.25);
  ASSERT_EQ(g.size(), 37u);
  EXPECT_EQ(g.front(), 1.0);
  EXPECT_EQ(g[35], 9.75);
  EXPECT_EQ(g.back(), 10.0);
  const std::vector<double> t = GridValues(0.1, 1.0, 0.1);
  ASSERT_EQ(t.size(), 10u);
  EXPECT_EQ(t[7], 0.1 + 7 * 0.1);
}

TEST(SweepSpecTest, ParseAndOrder) {
  const SweepSpec s = SweepSpecFromJson(json::parse(R"({
    "n": {"min": 2, "max": 4, "interval": 2},
    "budget": [5, 6],
    "c0_inv": [1, 2.5]
  })"));
  const auto points = s.Points();
  ASSERT_EQ(points.size(), 8u);
  EXPECT_EQ(points[0].n, 2);
  EXPECT_EQ(points[1].c0_inv, 2.5);
  EXPECT_EQ(points[2].budget_a, 6);
  EXPECT_EQ(points[4].n, 4);
  EXPECT_EQ(points[7].budget_b, 6);
  const CostBlottoGame g = s.MakeGame(points[1]);
  EXPECT_DOUBLE_EQ(g.obtain_cost(Player::kA)(5), 2.0);
  EXPECT_EQ(SweepSpecFromJson(SweepSpecToJson(s)).Points().size(), 8u);
}

TEST(SweepSpecTest, AssignCostApplied) {
  const SweepSpec s = SweepSpecFromJson(json::parse(R"({
    "n": [2], "budget_A": [3], "budget_B": [2], "c0_inv": [4],
    "assign_cost": {"kind": "quadratic", "coeff": 0.5}
  })"));
  const CostBlottoGame g = s.MakeGame(s.Points()[0]);
  EXPECT_EQ(g.budget_b(), 2);
  EXPECT_DOUBLE_EQ(g.assign_cost(Player::kA, 1)(3), 4.5);
}

TEST(SweepSpecTest, Rejections) {
  EXPECT_THROW(SweepSpecFromJson(json::parse(R"({"n": [4], "budget": [4]})")), ConfigError);
  EXPECT_THROW(SweepSpecFromJson(json::parse(
                   R"({"n": [4], "budget": [4], "c0_inv": {"min": 1, "max": 2, "interval": 0}})")),
               ConfigError);
  EXPECT_THROW(SweepSpecFromJson(json::parse(R"({"n": [], "budget": [4], "c0_inv": [1]})")),
               ConfigError);
  EXPECT_THROW(SweepSpecFromJson(json::parse(R"({"n": [4], "budget": [4], "c0_inv": [0]})")),
               ConfigError);
}

}  // namespace
}  // namespace blotto
