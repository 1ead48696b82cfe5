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

#ifndef BLOTTO_LP_MODEL_H_
#define BLOTTO_LP_MODEL_H_

#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blotto::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };
enum class ObjectiveSense { kMinimize, kMaximize };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kNumericFailure };

const char* StatusName(LpStatus status);

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  double objective = 0.0;
};

struct Row {
  std::string name;
  std::vector<std::pair<int, double>> terms;  // (variable index, coefficient)
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

// A linear program over real variables with simple bounds.
class Model {
 public:
  int AddVariable(std::string name, double lower, double upper, double objective = 0.0);
  int AddRow(std::string name, std::vector<std::pair<int, double>> terms, RowSense sense,
             double rhs);

  void SetObjectiveSense(ObjectiveSense sense) { sense_ = sense; }
  void SetObjective(int var, double coefficient) { vars_.at(var).objective = coefficient; }
  void ClearObjective();
  void SetBounds(int var, double lower, double upper);

  ObjectiveSense sense() const { return sense_; }
  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Row>& rows() const { return rows_; }
  const Variable& variable(int j) const { return vars_[j]; }
  int num_variables() const { return static_cast<int>(vars_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  long num_nonzeros() const;

  double Objective(const std::vector<double>& x) const;
  // Largest bound or row violation of x.
  double MaxViolation(const std::vector<double>& x) const;

 private:
  ObjectiveSense sense_ = ObjectiveSense::kMinimize;
  std::vector<Variable> vars_;
  std::vector<Row> rows_;
};

// Simplex basis: one status per variable and per row (the row's logical).
enum class BasisStatus : signed char { kBasic, kAtLower, kAtUpper, kFree };

struct Basis {
  std::vector<BasisStatus> columns;
  std::vector<BasisStatus> rows;
  bool empty() const { return columns.empty() && rows.empty(); }
};

struct Solution {
  LpStatus status = LpStatus::kNumericFailure;
  double objective = 0.0;
  std::vector<double> primal;
  int iterations = 0;
  std::string message;
  Basis basis;  // optimal basis, for backends that produce one
};

// Solver contract: honours bounds and row senses, reports primal values and
// objective in the model's own sense. Implementations are stateless, so one
// instance may be shared by concurrent solves.
class Solver {
 public:
  virtual ~Solver() = default;
  virtual std::string Name() const = 0;
  virtual Solution Solve(const Model& model) const = 0;
  // Warm start from a (possibly partial) basis of a related model. Variables
  // and rows beyond the basis size are treated as new: nonbasic variables and
  // basic logicals. Backends without warm starts ignore the hint.
  virtual Solution SolveFrom(const Model& model, const Basis& hint) const {
    (void)hint;
    return Solve(model);
  }
};

// Known backends: "highs" (HiGHS simplex), "revised" (in-house sparse revised
// simplex), "simplex" (dense tableau), "ipm" (sparse interior point), "auto"
// (dense tableau for small models, HiGHS otherwise). Throws on unknown names.
std::unique_ptr<Solver> MakeSolver(std::string_view name);

// Backend named by the BLOTTO_LP_BACKEND environment variable, "auto" when
// unset.
std::unique_ptr<Solver> DefaultSolver();
inline constexpr const char* kBackendEnvVar = "BLOTTO_LP_BACKEND";

// CPLEX LP text format: objective, constraints named c0..cK, bounds.
// Output depends only on the model.
void WriteLpFile(const Model& model, std::ostream& out);

}  // namespace blotto::lp

#endif  // BLOTTO_LP_MODEL_H_
