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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("blotto_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Run(const std::string& args) {
    const std::string cmd = std::string(BLOTTO_CLI) + " " + args + " > " +
                            (dir_ / "stdout.txt").string() + " 2> " + (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  static std::string Slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string Config(const std::string& name) const {
    return (fs::path(BLOTTO_CONFIG_DIR) / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, SolveWritesCertifiedJson) {
  ASSERT_EQ(Run("solve --config " + Config("example1.json") + " --player B --out " +
                (dir_ / "out").string()),
            0)
      << Slurp(dir_ / "stderr.txt");
  const json doc = json::parse(Slurp(dir_ / "out" / "solve_B.json"));
  EXPECT_NEAR(doc["value"].get<double>(), 0.0, 1e-9);
  EXPECT_TRUE(doc["certificate"]["is_equilibrium"].get<bool>());
  EXPECT_EQ(doc["marginals"]["resources_obtained"].size(), 3u);
  EXPECT_EQ(doc["player"], "B");
}

TEST_F(CliTest, BoundsExampleOne) {
  ASSERT_EQ(Run("bounds --config " + Config("example1.json") +
                " --statistic resources --out " + (dir_ / "out").string()),
            0);
  const json doc = json::parse(Slurp(dir_ / "out" / "bounds_resources_A.json"));
  EXPECT_NEAR(doc["min"].get<double>(), 0.0, 1e-6);
  EXPECT_NEAR(doc["max"].get<double>(), 2.0, 1e-6);
}

TEST_F(CliTest, SweepCsv) {
  const std::string spec = Write("spec.json", R"({"n": [2], "budget": [3], "c0_inv": [1, 2]})");
  ASSERT_EQ(Run("sweep --spec " + spec + " --jobs 1 --out " + (dir_ / "out").string()), 0);
  std::istringstream csv(Slurp(dir_ / "out" / "sweep.csv"));
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header,
            "n,D_A,D_B,c0_inv,min_resources,max_resources,min_expenditure,max_expenditure,value,"
            "solve_ms,error");
  int rows = 0;
  for (std::string line; std::getline(csv, line);) ++rows;
  EXPECT_EQ(rows, 2);
}

TEST_F(CliTest, CheckHypothesis) {
  const std::string spec = Write("spec.json", R"({"n": [4], "budget": [10], "c0_inv": [4]})");
  ASSERT_EQ(Run("check-hypothesis --spec " + spec + " --out " + (dir_ / "out").string()), 0);
  const json doc = json::parse(Slurp(dir_ / "out" / "hypothesis.json"));
  EXPECT_TRUE(doc["summary"]["ok"].get<bool>());
  EXPECT_EQ(doc["points"][0]["case"], 1);
  const std::string bad =
      Write("bad.json", R"({"n": [4], "budget_A": [10], "budget_B": [9], "c0_inv": [4]})");
  EXPECT_EQ(Run("check-hypothesis --spec " + bad + " --out " + (dir_ / "out").string()), 2);
}

TEST_F(CliTest, OracleDiffAndLpStats) {
  ASSERT_EQ(Run("oracle-diff --config " + Config("example1.json")), 0);
  const json diff = json::parse(Slurp(dir_ / "stdout.txt"));
  EXPECT_TRUE(diff["pass"].get<bool>());
  ASSERT_EQ(Run("lp-stats --config " + Config("example1.json")), 0);
  const json stats = json::parse(Slurp(dir_ / "stdout.txt"));
  EXPECT_EQ(stats["edges_own"], 12);
}

TEST_F(CliTest, ValidationErrorsExitTwo) {
  EXPECT_EQ(Run("solve --config " + (dir_ / "missing.json").string() + " --out " +
                (dir_ / "out").string()),
            2);
  const json err = json::parse(Slurp(dir_ / "stderr.txt"));
  EXPECT_EQ(err["error"]["type"], "validation");
  const std::string bad = Write("bad.json", R"({"n": 2, "budget_A": 2, "budget_B": 2,
      "obtain_cost_A": {"kind": "table", "table": [0, 2, 1]}})");
  EXPECT_EQ(Run("solve --config " + bad + " --out " + (dir_ / "out").string()), 2);
  EXPECT_NE(Slurp(dir_ / "stderr.txt").find("obtain_cost_A.table"), std::string::npos);
  EXPECT_EQ(Run("solve --out x"), 2);
  EXPECT_EQ(Run("--backend nope lp-stats --config " + Config("example1.json")), 2);
}

TEST_F(CliTest, OracleScaleRefused) {
  const std::string big = Write("big.json", R"({"n": 4, "budget_A": 30, "budget_B": 30})");
  EXPECT_EQ(Run("oracle-diff --config " + big), 2);
  EXPECT_NE(Slurp(dir_ / "stderr.txt").find("oracle scale exceeded"), std::string::npos);
}

TEST_F(CliTest, BackendFromEnvironment) {
  ASSERT_EQ(Run("lp-stats --config " + Config("example1.json")), 0);
  EXPECT_EQ(json::parse(Slurp(dir_ / "stdout.txt"))["backend"], "auto");
  ASSERT_EQ(std::system(("BLOTTO_LP_BACKEND=highs " + std::string(BLOTTO_CLI) +
                         " lp-stats --config " + Config("example1.json") + " > " +
                         (dir_ / "env.txt").string())
                            .c_str()),
            0);
  EXPECT_EQ(json::parse(Slurp(dir_ / "env.txt"))["backend"], "highs");
}

}  // namespace
