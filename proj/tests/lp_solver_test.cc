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
#include <random>
#include <sstream>

#include "blotto/dense_simplex.h"
#include "blotto/errors.h"
#include "blotto/interior_point.h"
#include "blotto/lp_model.h"
#include "blotto/revised_simplex.h"
#include "gtest/gtest.h"

namespace blotto::lp {
namespace {

// max 3x + 5y  s.t.  x <= 4, 2y <= 12, 3x + 2y <= 18, x, y >= 0.  Optimum 36.
Model TextbookModel() {
  Model m;
  m.SetObjectiveSense(ObjectiveSense::kMaximize);
  const int x = m.AddVariable("x", 0, kInfinity, 3);
  const int y = m.AddVariable("y", 0, kInfinity, 5);
  m.AddRow("r0", {{x, 1}}, RowSense::kLessEqual, 4);
  m.AddRow("r1", {{y, 2}}, RowSense::kLessEqual, 12);
  m.AddRow("r2", {{x, 3}, {y, 2}}, RowSense::kLessEqual, 18);
  return m;
}

class BackendTest : public ::testing::TestWithParam<const char*> {
 protected:
  std::unique_ptr<Solver> solver_ = MakeSolver(GetParam());
};

TEST_P(BackendTest, Textbook) {
  const Model m = TextbookModel();
  const Solution s = solver_->Solve(m);
  ASSERT_EQ(s.status, LpStatus::kOptimal) << s.message;
  EXPECT_NEAR(s.objective, 36.0, 1e-8);
  EXPECT_NEAR(s.primal[0], 2.0, 1e-6);
  EXPECT_NEAR(s.primal[1], 6.0, 1e-6);
}

// Free variable, negative bounds, >= and = rows:
// min x - y  s.t.  x + y = 1,  x - y >= -3,  -2 <= y <= 5,  x free.
// x = 1 - y, objective 1 - 2y, constraint 1 - 2y >= -3 -> y <= 2. Optimum -3.
TEST_P(BackendTest, MixedSensesAndBounds) {
  Model m;
  const int x = m.AddVariable("x", -kInfinity, kInfinity, 1);
  const int y = m.AddVariable("y", -2, 5, -1);
  m.AddRow("eq", {{x, 1}, {y, 1}}, RowSense::kEqual, 1);
  m.AddRow("ge", {{x, 1}, {y, -1}}, RowSense::kGreaterEqual, -3);
  const Solution s = solver_->Solve(m);
  ASSERT_EQ(s.status, LpStatus::kOptimal) << s.message;
  EXPECT_NEAR(s.objective, -3.0, 1e-8);
  EXPECT_NEAR(s.primal[1], 2.0, 1e-6);
  EXPECT_LE(m.MaxViolation(s.primal), 1e-7);
}

TEST_P(BackendTest, FixedVariable) {
  Model m;
  m.SetObjectiveSense(ObjectiveSense::kMaximize);
  const int x = m.AddVariable("x", 0, 10, 1);
  const int y = m.AddVariable("y", 2, 2, 1);
  m.AddRow("r", {{x, 1}, {y, 1}}, RowSense::kLessEqual, 7);
  const Solution s = solver_->Solve(m);
  ASSERT_EQ(s.status, LpStatus::kOptimal) << s.message;
  EXPECT_NEAR(s.objective, 7.0, 1e-8);
  EXPECT_NEAR(s.primal[y], 2.0, 1e-9);
}

TEST_P(BackendTest, InfeasibleIsNotReportedOptimal) {
  Model m;
  const int x = m.AddVariable("x", 0, kInfinity, 1);
  m.AddRow("lo", {{x, 1}}, RowSense::kGreaterEqual, 3);
  m.AddRow("hi", {{x, 1}}, RowSense::kLessEqual, 1);
  const Solution s = solver_->Solve(m);
  EXPECT_NE(s.status, LpStatus::kOptimal);
}

// Random feasible, bounded LPs: both backends must agree on the optimum.
Model RandomModel(std::mt19937& rng, int nv, int nr) {
  std::uniform_real_distribution<double> coef(-3, 3);
  std::uniform_int_distribution<int> sense(0, 2);
  Model m;
  m.SetObjectiveSense(rng() % 2 ? ObjectiveSense::kMaximize : ObjectiveSense::kMinimize);
  std::vector<double> x0(nv);
  for (int j = 0; j < nv; ++j) {
    const double lo = std::floor(coef(rng));
    const double hi = lo + 1 + std::abs(coef(rng));
    x0[j] = lo + (hi - lo) * 0.5;
    const int kind = static_cast<int>(rng() % 3);
    // Keep every variable bounded on at least the side the objective pushes.
    m.AddVariable("x" + std::to_string(j), lo, kind == 0 ? kInfinity : hi, coef(rng));
    if (kind == 0) m.SetBounds(j, lo, hi + 5);
  }
  for (int r = 0; r < nr; ++r) {
    std::vector<std::pair<int, double>> terms;
    double act = 0;
    for (int j = 0; j < nv; ++j) {
      if (rng() % 2) continue;
      const double a = std::round(coef(rng) * 4) / 4;
      terms.emplace_back(j, a);
      act += a * x0[j];
    }
    const int sk = sense(rng);
    const RowSense rs = sk == 0 ? RowSense::kLessEqual
                                : (sk == 1 ? RowSense::kGreaterEqual : RowSense::kEqual);
    const double rhs = rs == RowSense::kLessEqual ? act + 1 : (rs == RowSense::kGreaterEqual ? act - 1 : act);
    m.AddRow("r" + std::to_string(r), terms, rs, rhs);
  }
  return m;
}

TEST(LpBackends, RandomModelsAgree) {
  std::mt19937 rng(20260101);
  const DenseSimplexSolver simplex;
  const InteriorPointSolver ipm;
  const RevisedSimplexSolver revised;
  for (int trial = 0; trial < 60; ++trial) {
    const Model m = RandomModel(rng, 3 + trial % 9, 2 + trial % 7);
    const Solution a = simplex.Solve(m);
    const Solution b = ipm.Solve(m);
    const Solution c = revised.Solve(m);
    ASSERT_EQ(a.status, LpStatus::kOptimal) << "trial " << trial;
    ASSERT_EQ(b.status, LpStatus::kOptimal) << "trial " << trial << ": " << b.message;
    ASSERT_EQ(c.status, LpStatus::kOptimal) << "trial " << trial << ": " << c.message;
    EXPECT_NEAR(a.objective, b.objective, 1e-6 * (1 + std::abs(a.objective))) << "trial " << trial;
    EXPECT_NEAR(a.objective, c.objective, 1e-9 * (1 + std::abs(a.objective))) << "trial " << trial;
    EXPECT_LE(m.MaxViolation(a.primal), 1e-7);
    EXPECT_LE(m.MaxViolation(b.primal), 1e-7) << "trial " << trial;
    EXPECT_LE(m.MaxViolation(c.primal), 1e-9) << "trial " << trial;
  }
}

TEST(RevisedSimplex, WarmStartFromOptimalBasisNeedsNoPivots) {
  std::mt19937 rng(7);
  const RevisedSimplexSolver revised;
  for (int trial = 0; trial < 20; ++trial) {
    const Model m = RandomModel(rng, 8, 6);
    const Solution cold = revised.Solve(m);
    ASSERT_EQ(cold.status, LpStatus::kOptimal);
    const Solution warm = revised.SolveFrom(m, cold.basis);
    ASSERT_EQ(warm.status, LpStatus::kOptimal);
    EXPECT_NEAR(warm.objective, cold.objective, 1e-9 * (1 + std::abs(cold.objective)));
    EXPECT_LE(warm.iterations, 2);
  }
}

TEST(RevisedSimplex, WarmStartAfterAddingRow) {
  Model m = TextbookModel();
  const RevisedSimplexSolver revised;
  const Solution first = revised.Solve(m);
  ASSERT_EQ(first.status, LpStatus::kOptimal);
  m.AddRow("cut", {{0, 1.0}, {1, 1.0}}, RowSense::kLessEqual, 7.0);
  const Solution second = revised.SolveFrom(m, first.basis);
  ASSERT_EQ(second.status, LpStatus::kOptimal);
  EXPECT_NEAR(second.objective, DenseSimplexSolver().Solve(m).objective, 1e-9);
}

TEST(RevisedSimplex, DetectsUnboundedAndInfeasible) {
  Model unbounded;
  unbounded.SetObjectiveSense(ObjectiveSense::kMaximize);
  const int x = unbounded.AddVariable("x", 0, kInfinity, 1);
  const int y = unbounded.AddVariable("y", 0, kInfinity, 0);
  unbounded.AddRow("r", {{x, 1}, {y, -1}}, RowSense::kLessEqual, 1);
  EXPECT_EQ(RevisedSimplexSolver().Solve(unbounded).status, LpStatus::kUnbounded);

  Model infeasible;
  const int z = infeasible.AddVariable("z", 0, kInfinity, 1);
  infeasible.AddRow("r", {{z, 1}}, RowSense::kEqual, -1);
  EXPECT_EQ(RevisedSimplexSolver().Solve(infeasible).status, LpStatus::kInfeasible);
}

TEST(DenseSimplex, DetectsUnbounded) {
  Model m;
  m.SetObjectiveSense(ObjectiveSense::kMaximize);
  const int x = m.AddVariable("x", 0, kInfinity, 1);
  const int y = m.AddVariable("y", 0, kInfinity, 0);
  m.AddRow("r", {{x, 1}, {y, -1}}, RowSense::kLessEqual, 1);
  EXPECT_EQ(DenseSimplexSolver().Solve(m).status, LpStatus::kUnbounded);
}

TEST(DenseSimplex, DetectsInfeasible) {
  Model m;
  const int x = m.AddVariable("x", 0, kInfinity, 1);
  m.AddRow("r", {{x, 1}}, RowSense::kEqual, -1);
  EXPECT_EQ(DenseSimplexSolver().Solve(m).status, LpStatus::kInfeasible);
}

TEST(TableauSimplex, ExactRational) {
  // min -x - y s.t. x + 2y + s1 = 4, 3x + y + s2 = 6  -> x = 8/5, y = 6/5.
  using Q = Rational;
  TableauSimplex<Q> simplex(2, 4, {Q(1), Q(2), Q(1), Q(0), Q(3), Q(1), Q(0), Q(1)}, {Q(4), Q(6)},
                            {Q(-1), Q(-1), Q(0), Q(0)}, {2, 3});
  const auto r = simplex.Solve();
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.x[0], Q(8, 5));
  EXPECT_EQ(r.x[1], Q(6, 5));
  EXPECT_EQ(r.objective, Q(-14, 5));
}

TEST(LpFile, DeterministicCplexFormat) {
  std::ostringstream a, b;
  WriteLpFile(TextbookModel(), a);
  WriteLpFile(TextbookModel(), b);
  EXPECT_EQ(a.str(), b.str());
  const std::string text = a.str();
  EXPECT_NE(text.find("Maximize\n obj: + 3 x + 5 y"), std::string::npos) << text;
  EXPECT_NE(text.find(" c2: + 3 x + 2 y <= 18\n"), std::string::npos) << text;
  EXPECT_NE(text.find("Bounds\n 0 <= x\n"), std::string::npos) << text;
  EXPECT_NE(text.find("End\n"), std::string::npos);
}

TEST(LpFactory, Names) {
  EXPECT_EQ(MakeSolver("simplex")->Name(), "simplex");
  EXPECT_EQ(MakeSolver("ipm")->Name(), "ipm");
  EXPECT_EQ(MakeSolver("auto")->Name(), "auto");
  EXPECT_EQ(MakeSolver("revised")->Name(), "revised");
  EXPECT_THROW(MakeSolver("gurobi"), PreconditionError);
}

INSTANTIATE_TEST_SUITE_P(AllBackends, BackendTest, ::testing::Values("simplex", "ipm", "revised", "auto"));

}  // namespace
}  // namespace blotto::lp
