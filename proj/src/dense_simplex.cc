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

#include "blotto/dense_simplex.h"

#include <cmath>

namespace blotto::lp {

namespace {

// Model variable x_j expressed through standard-form columns:
//   x_j = offset + sign * col  (minus col2 for free variables).
struct ColumnMap {
  double offset = 0.0;
  double sign = 1.0;
  int col = -1;
  int col2 = -1;
};

struct StandardForm {
  int m = 0;
  int n = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;
  std::vector<int> basis_hint;
  std::vector<ColumnMap> map;
  double objective_offset = 0.0;
};

void CountShape(const Model& model, int& num_cols, int& num_upper) {
  num_cols = 0;
  num_upper = 0;
  for (const Variable& v : model.variables()) {
    const bool lo = std::isfinite(v.lower);
    const bool up = std::isfinite(v.upper);
    num_cols += (lo || up) ? 1 : 2;
    if (lo && up) ++num_upper;
  }
}

StandardForm Convert(const Model& model) {
  StandardForm sf;
  int structural = 0;
  int num_upper = 0;
  CountShape(model, structural, num_upper);
  int num_slack = num_upper;
  for (const Row& r : model.rows()) {
    if (r.sense != RowSense::kEqual) ++num_slack;
  }
  sf.m = model.num_rows() + num_upper;
  sf.n = structural + num_slack;
  sf.a.assign(static_cast<size_t>(sf.m) * sf.n, 0.0);
  sf.b.assign(sf.m, 0.0);
  sf.c.assign(sf.n, 0.0);
  sf.basis_hint.assign(sf.m, -1);
  sf.map.resize(model.num_variables());

  const double dir = model.sense() == ObjectiveSense::kMaximize ? -1.0 : 1.0;
  int col = 0;
  for (int j = 0; j < model.num_variables(); ++j) {
    const Variable& v = model.variable(j);
    ColumnMap& cm = sf.map[j];
    const bool lo = std::isfinite(v.lower);
    const bool up = std::isfinite(v.upper);
    if (lo) {
      cm = {v.lower, 1.0, col++, -1};
    } else if (up) {
      cm = {v.upper, -1.0, col++, -1};
    } else {
      cm = {0.0, 1.0, col, col + 1};
      col += 2;
    }
    const double cj = dir * v.objective;
    sf.objective_offset += cj * cm.offset;
    sf.c[cm.col] += cj * cm.sign;
    if (cm.col2 >= 0) sf.c[cm.col2] -= cj;
  }

  auto at = [&](int r, int k) -> double& { return sf.a[static_cast<size_t>(r) * sf.n + k]; };
  int slack = structural;
  int r = 0;
  for (const Row& row : model.rows()) {
    double rhs = row.rhs;
    for (const auto& [j, coeff] : row.terms) {
      const ColumnMap& cm = sf.map[j];
      rhs -= coeff * cm.offset;
      at(r, cm.col) += coeff * cm.sign;
      if (cm.col2 >= 0) at(r, cm.col2) -= coeff;
    }
    int slack_col = -1;
    if (row.sense == RowSense::kLessEqual) {
      slack_col = slack++;
      at(r, slack_col) = 1.0;
    } else if (row.sense == RowSense::kGreaterEqual) {
      slack_col = slack++;
      at(r, slack_col) = -1.0;
    }
    if (rhs < 0.0) {
      for (int k = 0; k < sf.n; ++k) at(r, k) = -at(r, k);
      rhs = -rhs;
    }
    sf.b[r] = rhs;
    if (slack_col >= 0 && at(r, slack_col) == 1.0) sf.basis_hint[r] = slack_col;
    ++r;
  }
  for (int j = 0; j < model.num_variables(); ++j) {
    const Variable& v = model.variable(j);
    if (!std::isfinite(v.lower) || !std::isfinite(v.upper)) continue;
    at(r, sf.map[j].col) = 1.0;
    at(r, slack) = 1.0;
    sf.b[r] = v.upper - v.lower;
    sf.basis_hint[r] = slack++;
    ++r;
  }
  return sf;
}

}  // namespace

std::size_t DenseSimplexSolver::TableauSize(const Model& model) {
  int structural = 0;
  int num_upper = 0;
  CountShape(model, structural, num_upper);
  std::size_t m = model.num_rows() + num_upper;
  std::size_t n = structural + num_upper + model.num_rows();
  // Artificials may add up to m further columns.
  return (m + 1) * (n + m + 1);
}

Solution DenseSimplexSolver::Solve(const Model& model) const {
  StandardForm sf = Convert(model);
  Solution sol;
  if (sf.m == 0) {
    // No rows: each variable sits at its objective-preferred finite bound.
    sol.primal.resize(model.num_variables());
    const double dir = model.sense() == ObjectiveSense::kMaximize ? -1.0 : 1.0;
    for (int j = 0; j < model.num_variables(); ++j) {
      const Variable& v = model.variable(j);
      const double cj = dir * v.objective;
      double x = cj > 0 ? v.lower : (cj < 0 ? v.upper : (std::isfinite(v.lower) ? v.lower : (std::isfinite(v.upper) ? v.upper : 0.0)));
      if (!std::isfinite(x)) {
        sol.status = LpStatus::kUnbounded;
        return sol;
      }
      sol.primal[j] = x;
    }
    sol.status = LpStatus::kOptimal;
    sol.objective = model.Objective(sol.primal);
    return sol;
  }
  TableauSimplex<double> simplex(sf.m, sf.n, std::move(sf.a), std::move(sf.b), sf.c,
                                 std::move(sf.basis_hint));
  auto result = simplex.Solve();
  sol.status = result.status;
  sol.iterations = result.iterations;
  if (result.status != LpStatus::kOptimal) {
    sol.message = std::string("dense simplex: ") + StatusName(result.status);
    return sol;
  }
  sol.primal.resize(model.num_variables());
  for (int j = 0; j < model.num_variables(); ++j) {
    const ColumnMap& cm = sf.map[j];
    double x = cm.offset + cm.sign * result.x[cm.col];
    if (cm.col2 >= 0) x -= result.x[cm.col2];
    sol.primal[j] = x;
  }
  sol.objective = model.Objective(sol.primal);
  return sol;
}

}  // namespace blotto::lp
