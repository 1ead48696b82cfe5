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

#include "blotto/highs_solver.h"

#include <algorithm>
#include <vector>

#include "Highs.h"

namespace blotto::lp {
namespace {

HighsLp ToHighsLp(const Model& model) {
  HighsLp lp;
  const int n = model.num_variables();
  const int m = model.num_rows();
  lp.num_col_ = n;
  lp.num_row_ = m;
  lp.sense_ = model.sense() == ObjectiveSense::kMaximize ? ObjSense::kMaximize
                                                         : ObjSense::kMinimize;
  lp.col_cost_.resize(n);
  lp.col_lower_.resize(n);
  lp.col_upper_.resize(n);
  for (int j = 0; j < n; ++j) {
    const Variable& v = model.variable(j);
    lp.col_cost_[j] = v.objective;
    lp.col_lower_[j] = v.lower;
    lp.col_upper_[j] = v.upper;
  }
  lp.row_lower_.resize(m);
  lp.row_upper_.resize(m);
  // Row-wise triplets, transposed into the column-wise matrix HiGHS expects.
  std::vector<int> count(n + 1, 0);
  for (int i = 0; i < m; ++i) {
    const Row& row = model.rows()[i];
    lp.row_lower_[i] = row.sense == RowSense::kLessEqual ? -kHighsInf : row.rhs;
    lp.row_upper_[i] = row.sense == RowSense::kGreaterEqual ? kHighsInf : row.rhs;
    for (const auto& [j, a] : row.terms) ++count[j + 1];
  }
  for (int j = 0; j < n; ++j) count[j + 1] += count[j];
  HighsSparseMatrix& mat = lp.a_matrix_;
  mat.format_ = MatrixFormat::kColwise;
  mat.num_col_ = n;
  mat.num_row_ = m;
  mat.start_.assign(count.begin(), count.end());
  mat.index_.resize(count[n]);
  mat.value_.resize(count[n]);
  std::vector<int> next(count.begin(), count.end() - 1);
  for (int i = 0; i < m; ++i) {
    for (const auto& [j, a] : model.rows()[i].terms) {
      mat.index_[next[j]] = i;
      mat.value_[next[j]] = a;
      ++next[j];
    }
  }
  return lp;
}

HighsBasisStatus ToHighs(BasisStatus s) {
  switch (s) {
    case BasisStatus::kBasic:
      return HighsBasisStatus::kBasic;
    case BasisStatus::kAtLower:
      return HighsBasisStatus::kLower;
    case BasisStatus::kAtUpper:
      return HighsBasisStatus::kUpper;
    case BasisStatus::kFree:
      return HighsBasisStatus::kZero;
  }
  return HighsBasisStatus::kNonbasic;
}

BasisStatus FromHighs(HighsBasisStatus s, double lower, double upper) {
  switch (s) {
    case HighsBasisStatus::kBasic:
      return BasisStatus::kBasic;
    case HighsBasisStatus::kLower:
      return BasisStatus::kAtLower;
    case HighsBasisStatus::kUpper:
      return BasisStatus::kAtUpper;
    default:
      if (lower > -kHighsInf) return BasisStatus::kAtLower;
      if (upper < kHighsInf) return BasisStatus::kAtUpper;
      return BasisStatus::kFree;
  }
}

// Nonbasic status for a variable with the given bounds.
HighsBasisStatus DefaultStatus(double lower, double upper) {
  if (lower > -kHighsInf) return HighsBasisStatus::kLower;
  if (upper < kHighsInf) return HighsBasisStatus::kUpper;
  return HighsBasisStatus::kZero;
}

// Extends a basis of a smaller related model and repairs statuses that do
// not fit the bounds. Returns false if the basic count is wrong.
bool MakeHighsBasis(const HighsLp& lp, const Basis& hint, HighsBasis* out) {
  out->col_status.resize(lp.num_col_);
  out->row_status.resize(lp.num_row_);
  int basic = 0;
  auto assign = [&](const std::vector<BasisStatus>& src, int k, double lo, double up,
                    bool is_row, HighsBasisStatus* dst) {
    HighsBasisStatus s = k < static_cast<int>(src.size())
                             ? ToHighs(src[k])
                             : (is_row ? HighsBasisStatus::kBasic : DefaultStatus(lo, up));
    if ((s == HighsBasisStatus::kLower && lo <= -kHighsInf) ||
        (s == HighsBasisStatus::kUpper && up >= kHighsInf) ||
        (s == HighsBasisStatus::kZero && (lo > -kHighsInf || up < kHighsInf))) {
      s = DefaultStatus(lo, up);
    }
    if (s == HighsBasisStatus::kBasic) ++basic;
    *dst = s;
  };
  for (int j = 0; j < lp.num_col_; ++j) {
    assign(hint.columns, j, lp.col_lower_[j], lp.col_upper_[j], false, &out->col_status[j]);
  }
  for (int i = 0; i < lp.num_row_; ++i) {
    assign(hint.rows, i, lp.row_lower_[i], lp.row_upper_[i], true, &out->row_status[i]);
  }
  out->valid = basic == lp.num_row_;
  return out->valid;
}

}  // namespace

Solution HighsSolver::Solve(const Model& model) const { return Run(model, nullptr); }

Solution HighsSolver::SolveFrom(const Model& model, const Basis& hint) const {
  return Run(model, hint.empty() || !options_.use_warm_start ? nullptr : &hint);
}

Solution HighsSolver::Run(const Model& model, const Basis* hint) const {
  Solution sol;
  Highs highs;
  highs.setOptionValue("output_flag", false);
  highs.setOptionValue("threads", 1);
  highs.setOptionValue("solver", "simplex");
  highs.setOptionValue("primal_feasibility_tolerance", options_.primal_feasibility_tolerance);
  highs.setOptionValue("dual_feasibility_tolerance", options_.dual_feasibility_tolerance);
  if (options_.time_limit > 0.0) highs.setOptionValue("time_limit", options_.time_limit);
  HighsLp lp = ToHighsLp(model);
  if (highs.passModel(std::move(lp)) == HighsStatus::kError) {
    sol.message = "highs: model rejected";
    return sol;
  }
  if (hint != nullptr) {
    HighsBasis basis;
    if (MakeHighsBasis(highs.getLp(), *hint, &basis)) highs.setBasis(basis);
  }
  const HighsStatus run = highs.run();
  const HighsModelStatus status = highs.getModelStatus();
  sol.iterations = highs.getInfo().simplex_iteration_count;
  switch (status) {
    case HighsModelStatus::kOptimal:
      break;
    case HighsModelStatus::kInfeasible:
      sol.status = LpStatus::kInfeasible;
      sol.message = "highs: infeasible";
      return sol;
    case HighsModelStatus::kUnbounded:
      sol.status = LpStatus::kUnbounded;
      sol.message = "highs: unbounded";
      return sol;
    default:
      sol.message = "highs: " + highs.modelStatusToString(status);
      return sol;
  }
  if (run == HighsStatus::kError) {
    sol.message = "highs: run failed";
    return sol;
  }
  const HighsSolution& hs = highs.getSolution();
  const HighsLp& solved = highs.getLp();
  sol.status = LpStatus::kOptimal;
  sol.primal = hs.col_value;
  for (int j = 0; j < solved.num_col_; ++j) {
    sol.primal[j] = std::clamp(sol.primal[j], solved.col_lower_[j], solved.col_upper_[j]);
  }
  sol.objective = model.Objective(sol.primal);
  const HighsBasis& hb = highs.getBasis();
  if (hb.valid) {
    sol.basis.columns.resize(solved.num_col_);
    sol.basis.rows.resize(solved.num_row_);
    for (int j = 0; j < solved.num_col_; ++j) {
      sol.basis.columns[j] =
          FromHighs(hb.col_status[j], solved.col_lower_[j], solved.col_upper_[j]);
    }
    for (int i = 0; i < solved.num_row_; ++i) {
      sol.basis.rows[i] = FromHighs(hb.row_status[i], solved.row_lower_[i], solved.row_upper_[i]);
    }
  }
  return sol;
}

}  // namespace blotto::lp
