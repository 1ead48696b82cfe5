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

#include "blotto/game.h"

#include <cmath>
#include <map>
#include <sstream>

#include "blotto/errors.h"

namespace blotto {

CostFunction::CostFunction(Kind kind, double coefficient,
                           std::vector<double> table, int domain_max)
    : kind_(kind),
      coefficient_(coefficient),
      table_(std::move(table)),
      domain_max_(domain_max) {
  if (domain_max_ < 0) throw PreconditionError("cost function domain_max must be >= 0");
  if (!std::isfinite(coefficient_)) throw PreconditionError("cost coefficient must be finite");
  switch (kind_) {
    case Kind::kTable:
      for (size_t t = 0; t < table_.size(); ++t) {
        if (!std::isfinite(table_[t])) {
          throw PreconditionError("cost table entry " + std::to_string(t) + " is not finite");
        }
        if (t > 0 && table_[t] < table_[t - 1]) {
          std::ostringstream msg;
          msg << "cost table is decreasing at t=" << t << " (" << table_[t - 1]
              << " -> " << table_[t] << ")";
          throw PreconditionError(msg.str());
        }
      }
      break;
    case Kind::kLinear:
    case Kind::kQuadratic:
      // c*t and c*t^2 are non-decreasing on t >= 0 iff c >= 0 (or the domain
      // is the single point 0).
      if (coefficient_ < 0.0 && domain_max_ > 0) {
        throw PreconditionError("cost coefficient must be >= 0 for a non-decreasing cost");
      }
      break;
  }
}

CostFunction CostFunction::Table(std::vector<double> values) {
  if (values.empty()) throw PreconditionError("cost table must be nonempty");
  const int domain_max = static_cast<int>(values.size()) - 1;
  return CostFunction(Kind::kTable, 0.0, std::move(values), domain_max);
}

CostFunction CostFunction::Linear(double coefficient, int domain_max) {
  return CostFunction(Kind::kLinear, coefficient, {}, domain_max);
}

CostFunction CostFunction::Quadratic(double coefficient, int domain_max) {
  return CostFunction(Kind::kQuadratic, coefficient, {}, domain_max);
}

bool CostFunction::IsZero() const {
  if (kind_ != Kind::kTable) return coefficient_ == 0.0 || domain_max_ == 0;
  for (double v : table_) {
    if (v != 0.0) return false;
  }
  return true;
}

void CostFunction::CheckDomain(int t) const {
  if (t < 0 || t > domain_max_) {
    throw PreconditionError("cost function evaluated outside 0.." +
                            std::to_string(domain_max_) + ": t=" + std::to_string(t));
  }
}

Valuation::Valuation(Kind kind, double weight, int rows, int cols,
                     std::vector<double> table)
    : kind_(kind), weight_(weight), rows_(rows), cols_(cols), table_(std::move(table)) {
  if (!std::isfinite(weight_)) throw PreconditionError("valuation weight must be finite");
  if (kind_ == Kind::kTable) {
    if (rows_ <= 0 || cols_ <= 0 ||
        table_.size() != static_cast<size_t>(rows_) * static_cast<size_t>(cols_)) {
      throw PreconditionError("valuation table size does not match its dimensions");
    }
    for (double v : table_) {
      if (!std::isfinite(v)) throw PreconditionError("valuation table entry is not finite");
    }
  }
}

Valuation Valuation::Table(int rows, int cols, std::vector<double> values) {
  return Valuation(Kind::kTable, 0.0, rows, cols, std::move(values));
}

Valuation Valuation::Sign(double weight) { return Valuation(Kind::kSign, weight, 0, 0, {}); }

int PureStrategy::Total() const {
  int total = 0;
  for (int u : units) total += u;
  return total;
}

std::string PureStrategy::ToString() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < units.size(); ++i) out << (i ? "," : "") << units[i];
  out << ')';
  return out.str();
}

void ValidateStrategy(const PureStrategy& s, int n, int budget, bool full,
                      const std::string& who) {
  if (s.size() != n) {
    throw PreconditionError(who + " " + s.ToString() + " has " + std::to_string(s.size()) +
                            " entries, expected " + std::to_string(n));
  }
  for (int u : s.units) {
    if (u < 0) throw PreconditionError(who + " " + s.ToString() + " has a negative entry");
  }
  const int total = s.Total();
  if (full ? total != budget : total > budget) {
    throw PreconditionError(who + " " + s.ToString() + " assigns " + std::to_string(total) +
                            (full ? " resources, expected exactly " : " resources, budget is ") +
                            std::to_string(budget));
  }
}

MixedStrategy MixedStrategy::Mix(const MixedStrategy& x, const MixedStrategy& y,
                                 double weight) {
  std::map<PureStrategy, double> merged;
  for (const auto& [s, p] : x.support) merged[s] += weight * p;
  for (const auto& [s, p] : y.support) merged[s] += (1.0 - weight) * p;
  MixedStrategy out;
  for (auto& [s, p] : merged) {
    if (p > 0.0) out.support.emplace_back(s, p);
  }
  return out;
}

void ValidateMixedStrategy(const MixedStrategy& xi, int n, int budget, bool full,
                           const std::string& who) {
  if (xi.support.empty()) throw PreconditionError(who + " has empty support");
  double total = 0.0;
  std::map<PureStrategy, int> seen;
  for (const auto& [s, p] : xi.support) {
    ValidateStrategy(s, n, budget, full, who + " support entry");
    if (!(p >= 0.0)) throw PreconditionError(who + " has a negative probability");
    if (seen[s]++ > 0) throw PreconditionError(who + " lists " + s.ToString() + " twice");
    total += p;
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << who << " probabilities sum to " << total;
    throw PreconditionError(msg.str());
  }
}

CostBlottoGame::CostBlottoGame(int budget_a, int budget_b,
                               std::vector<Valuation> valuations,
                               std::vector<CostFunction> assign_costs_a,
                               std::vector<CostFunction> assign_costs_b,
                               CostFunction obtain_cost_a, CostFunction obtain_cost_b)
    : budget_a_(budget_a),
      budget_b_(budget_b),
      valuations_(std::move(valuations)),
      assign_costs_a_(std::move(assign_costs_a)),
      assign_costs_b_(std::move(assign_costs_b)),
      obtain_cost_a_(std::move(obtain_cost_a)),
      obtain_cost_b_(std::move(obtain_cost_b)) {
  if (budget_a_ < 0 || budget_b_ < 0) throw PreconditionError("budgets must be >= 0");
  const int n = static_cast<int>(valuations_.size());
  if (n < 2) throw PreconditionError("a game needs at least 2 battlefields, got " + std::to_string(n));
  if (static_cast<int>(assign_costs_a_.size()) != n ||
      static_cast<int>(assign_costs_b_.size()) != n) {
    throw PreconditionError("one assignment cost function per battlefield and player is required");
  }
  for (int i = 0; i < n; ++i) {
    const Valuation& v = valuations_[i];
    if (v.kind() == Valuation::Kind::kTable &&
        (v.rows() != budget_a_ + 1 || v.cols() != budget_b_ + 1)) {
      throw PreconditionError("valuation table of battlefield " + std::to_string(i) +
                              " must be (budget_A+1) x (budget_B+1)");
    }
    if (assign_costs_a_[i].domain_max() != budget_a_) {
      throw PreconditionError("assignment cost of A on battlefield " + std::to_string(i) +
                              " must have domain_max = budget_A");
    }
    if (assign_costs_b_[i].domain_max() != budget_b_) {
      throw PreconditionError("assignment cost of B on battlefield " + std::to_string(i) +
                              " must have domain_max = budget_B");
    }
  }
  if (obtain_cost_a_.domain_max() != budget_a_ || obtain_cost_b_.domain_max() != budget_b_) {
    throw PreconditionError("obtainment cost domain_max must equal the owner's budget");
  }
}

CostBlottoGame CostBlottoGame::SignLinear(int n, int budget_a, int budget_b,
                                          double unit_cost, double weight) {
  std::vector<Valuation> valuations(n, Valuation::Sign(weight));
  std::vector<CostFunction> ca(n, CostFunction::Zero(budget_a));
  std::vector<CostFunction> cb(n, CostFunction::Zero(budget_b));
  return CostBlottoGame(budget_a, budget_b, std::move(valuations), std::move(ca), std::move(cb),
                        CostFunction::Linear(unit_cost, budget_a),
                        CostFunction::Linear(unit_cost, budget_b));
}

}  // namespace blotto
