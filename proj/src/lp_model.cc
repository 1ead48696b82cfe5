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

#include "blotto/lp_model.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "blotto/dense_simplex.h"
#include "blotto/errors.h"
#include "blotto/interior_point.h"
#include "blotto/highs_solver.h"
#include "blotto/revised_simplex.h"

namespace blotto::lp {

const char* StatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kNumericFailure:
      return "numeric-failure";
  }
  return "unknown";
}

int Model::AddVariable(std::string name, double lower, double upper, double objective) {
  if (std::isnan(lower) || std::isnan(upper) || lower > upper) {
    throw PreconditionError("variable " + name + " has invalid bounds");
  }
  vars_.push_back({std::move(name), lower, upper, objective});
  return static_cast<int>(vars_.size()) - 1;
}

int Model::AddRow(std::string name, std::vector<std::pair<int, double>> terms, RowSense sense,
                  double rhs) {
  for (const auto& [j, a] : terms) {
    if (j < 0 || j >= num_variables()) throw PreconditionError("row " + name + " references an unknown variable");
    if (!std::isfinite(a)) throw PreconditionError("row " + name + " has a non-finite coefficient");
  }
  rows_.push_back({std::move(name), std::move(terms), sense, rhs});
  return static_cast<int>(rows_.size()) - 1;
}

void Model::ClearObjective() {
  for (Variable& v : vars_) v.objective = 0.0;
}

void Model::SetBounds(int var, double lower, double upper) {
  if (lower > upper) throw PreconditionError("invalid bounds for " + vars_.at(var).name);
  vars_.at(var).lower = lower;
  vars_.at(var).upper = upper;
}

long Model::num_nonzeros() const {
  long nnz = 0;
  for (const Row& r : rows_) nnz += static_cast<long>(r.terms.size());
  return nnz;
}

double Model::Objective(const std::vector<double>& x) const {
  double obj = 0.0;
  for (int j = 0; j < num_variables(); ++j) obj += vars_[j].objective * x[j];
  return obj;
}

double Model::MaxViolation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < num_variables(); ++j) {
    worst = std::max({worst, vars_[j].lower - x[j], x[j] - vars_[j].upper});
  }
  for (const Row& r : rows_) {
    double act = 0.0;
    for (const auto& [j, a] : r.terms) act += a * x[j];
    switch (r.sense) {
      case RowSense::kLessEqual:
        worst = std::max(worst, act - r.rhs);
        break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, r.rhs - act);
        break;
      case RowSense::kEqual:
        worst = std::max(worst, std::abs(act - r.rhs));
        break;
    }
  }
  return worst;
}

namespace {

// Dense simplex while the tableau stays below this many entries.
constexpr std::size_t kAutoDenseLimit = 200'000;

class AutoSolver : public Solver {
 public:
  std::string Name() const override { return "auto"; }
  Solution Solve(const Model& model) const override {
    if (DenseSimplexSolver::TableauSize(model) <= kAutoDenseLimit) return simplex_.Solve(model);
    return highs_.Solve(model);
  }
  Solution SolveFrom(const Model& model, const Basis& hint) const override {
    if (DenseSimplexSolver::TableauSize(model) <= kAutoDenseLimit) return simplex_.Solve(model);
    return highs_.SolveFrom(model, hint);
  }

 private:
  DenseSimplexSolver simplex_;
  HighsSolver highs_;
};

}  // namespace

std::unique_ptr<Solver> MakeSolver(std::string_view name) {
  if (name == "simplex") return std::make_unique<DenseSimplexSolver>();
  if (name == "ipm") return std::make_unique<InteriorPointSolver>();
  if (name == "revised") return std::make_unique<RevisedSimplexSolver>();
  if (name == "highs") return std::make_unique<HighsSolver>();
  if (name == "auto" || name.empty()) return std::make_unique<AutoSolver>();
  throw PreconditionError("unknown LP backend '" + std::string(name) +
                          "' (expected highs, revised, simplex, ipm or auto)");
}

std::unique_ptr<Solver> DefaultSolver() {
  const char* env = std::getenv(kBackendEnvVar);
  return MakeSolver(env ? std::string_view(env) : std::string_view("auto"));
}

namespace {

std::string Num(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

void WriteTerms(const std::vector<std::pair<int, double>>& terms, const Model& model,
                std::ostream& out) {
  if (terms.empty()) {
    out << " 0 " << model.variable(0).name;
    return;
  }
  for (const auto& [j, a] : terms) {
    out << (a < 0 ? " - " : " + ") << Num(std::abs(a)) << ' ' << model.variable(j).name;
  }
}

}  // namespace

void WriteLpFile(const Model& model, std::ostream& out) {
  out << "\\ " << model.num_variables() << " variables, " << model.num_rows() << " rows\n";
  out << (model.sense() == ObjectiveSense::kMaximize ? "Maximize\n" : "Minimize\n");
  std::vector<std::pair<int, double>> objective;
  for (int j = 0; j < model.num_variables(); ++j) {
    if (model.variable(j).objective != 0.0) objective.emplace_back(j, model.variable(j).objective);
  }
  out << " obj:";
  WriteTerms(objective, model, out);
  out << "\nSubject To\n";
  for (int r = 0; r < model.num_rows(); ++r) {
    const Row& row = model.rows()[r];
    out << " c" << r << ':';
    WriteTerms(row.terms, model, out);
    switch (row.sense) {
      case RowSense::kLessEqual:
        out << " <= ";
        break;
      case RowSense::kGreaterEqual:
        out << " >= ";
        break;
      case RowSense::kEqual:
        out << " = ";
        break;
    }
    out << Num(row.rhs) << '\n';
  }
  out << "Bounds\n";
  for (const Variable& v : model.variables()) {
    const bool lo = std::isfinite(v.lower);
    const bool up = std::isfinite(v.upper);
    if (!lo && !up) {
      out << ' ' << v.name << " free\n";
    } else if (lo && up && v.lower == v.upper) {
      out << ' ' << v.name << " = " << Num(v.lower) << '\n';
    } else {
      out << ' ' << (lo ? Num(v.lower) : "-inf") << " <= " << v.name;
      if (up) out << " <= " << Num(v.upper);
      out << '\n';
    }
  }
  out << "End\n";
}

}  // namespace blotto::lp
