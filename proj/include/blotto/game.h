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

#ifndef BLOTTO_GAME_H_
#define BLOTTO_GAME_H_

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "blotto/numeric.h"

namespace blotto {

enum class Player { kA, kB };

inline Player Opponent(Player p) { return p == Player::kA ? Player::kB : Player::kA; }
inline const char* PlayerName(Player p) { return p == Player::kA ? "A" : "B"; }

// A non-decreasing cost function on {0, ..., domain_max}. Used both for
// per-battlefield assignment costs and for the obtainment cost of the total.
class CostFunction {
 public:
  enum class Kind { kTable, kLinear, kQuadratic };

  static CostFunction Table(std::vector<double> values);
  static CostFunction Linear(double coefficient, int domain_max);
  static CostFunction Quadratic(double coefficient, int domain_max);
  static CostFunction Zero(int domain_max) { return Linear(0.0, domain_max); }

  Kind kind() const { return kind_; }
  int domain_max() const { return domain_max_; }
  double coefficient() const { return coefficient_; }
  const std::vector<double>& table() const { return table_; }

  // True when f(t) == 0 for every t in the domain.
  bool IsZero() const;

  template <class Scalar>
  Scalar Eval(int t) const;
  double operator()(int t) const { return Eval<double>(t); }

  bool operator==(const CostFunction&) const = default;

 private:
  CostFunction(Kind kind, double coefficient, std::vector<double> table,
               int domain_max);
  void CheckDomain(int t) const;

  Kind kind_;
  double coefficient_ = 0.0;
  std::vector<double> table_;
  int domain_max_ = 0;
};

// Battlefield valuation v(a, b): the amount player A receives (and B pays)
// when A assigns a and B assigns b resources to the battlefield.
class Valuation {
 public:
  enum class Kind { kTable, kSign };

  // rows = budget_A + 1, cols = budget_B + 1, row-major.
  static Valuation Table(int rows, int cols, std::vector<double> values);
  static Valuation Sign(double weight = 1.0);

  Kind kind() const { return kind_; }
  double weight() const { return weight_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<double>& table() const { return table_; }

  template <class Scalar>
  Scalar Eval(int a, int b) const;
  double operator()(int a, int b) const { return Eval<double>(a, b); }

  bool operator==(const Valuation&) const = default;

 private:
  Valuation(Kind kind, double weight, int rows, int cols,
            std::vector<double> table);

  Kind kind_;
  double weight_ = 0.0;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> table_;
};

// Assignment of resources to battlefields.
struct PureStrategy {
  std::vector<int> units;

  PureStrategy() = default;
  explicit PureStrategy(std::vector<int> u) : units(std::move(u)) {}
  PureStrategy(std::initializer_list<int> u) : units(u) {}

  int size() const { return static_cast<int>(units.size()); }
  int operator[](int i) const { return units[i]; }
  int Total() const;
  std::string ToString() const;

  auto operator<=>(const PureStrategy&) const = default;
};

// Throws PreconditionError unless s has n nonnegative entries summing to at
// most (full: exactly) budget. `who` names the strategy in the message.
void ValidateStrategy(const PureStrategy& s, int n, int budget, bool full,
                      const std::string& who);

struct MixedStrategy {
  std::vector<std::pair<PureStrategy, double>> support;

  static MixedStrategy Pure(PureStrategy s) { return {{{std::move(s), 1.0}}}; }
  // Pointwise convex combination weight*x + (1-weight)*y, merging support.
  static MixedStrategy Mix(const MixedStrategy& x, const MixedStrategy& y,
                           double weight);
};

inline constexpr double kProbabilityTolerance = 1e-9;

void ValidateMixedStrategy(const MixedStrategy& xi, int n, int budget, bool full,
                           const std::string& who);

// The Colonel Blotto game with assignment and obtainment costs.
// Immutable; the constructor validates every invariant.
class CostBlottoGame {
 public:
  CostBlottoGame(int budget_a, int budget_b, std::vector<Valuation> valuations,
                 std::vector<CostFunction> assign_costs_a,
                 std::vector<CostFunction> assign_costs_b,
                 CostFunction obtain_cost_a, CostFunction obtain_cost_b);

  // Sign valuations with the given weight on every battlefield, linear
  // obtainment cost unit_cost*t for both players, no assignment costs.
  static CostBlottoGame SignLinear(int n, int budget_a, int budget_b,
                                   double unit_cost, double weight = 1.0);

  int n() const { return static_cast<int>(valuations_.size()); }
  int budget(Player p) const { return p == Player::kA ? budget_a_ : budget_b_; }
  int budget_a() const { return budget_a_; }
  int budget_b() const { return budget_b_; }
  const Valuation& valuation(int i) const { return valuations_[i]; }
  const std::vector<Valuation>& valuations() const { return valuations_; }
  const CostFunction& assign_cost(Player p, int i) const {
    return p == Player::kA ? assign_costs_a_[i] : assign_costs_b_[i];
  }
  const std::vector<CostFunction>& assign_costs(Player p) const {
    return p == Player::kA ? assign_costs_a_ : assign_costs_b_;
  }
  const CostFunction& obtain_cost(Player p) const {
    return p == Player::kA ? obtain_cost_a_ : obtain_cost_b_;
  }

  bool operator==(const CostBlottoGame&) const = default;

 private:
  int budget_a_;
  int budget_b_;
  std::vector<Valuation> valuations_;
  std::vector<CostFunction> assign_costs_a_;
  std::vector<CostFunction> assign_costs_b_;
  CostFunction obtain_cost_a_;
  CostFunction obtain_cost_b_;
};

// ---------------------------------------------------------------------------
// Template definitions.

template <class Scalar>
Scalar CostFunction::Eval(int t) const {
  CheckDomain(t);
  switch (kind_) {
    case Kind::kTable:
      return FromDouble<Scalar>(table_[t]);
    case Kind::kLinear:
      return FromDouble<Scalar>(coefficient_) * Scalar(t);
    case Kind::kQuadratic:
      return FromDouble<Scalar>(coefficient_) * Scalar(t) * Scalar(t);
  }
  return Scalar(0);
}

template <class Scalar>
Scalar Valuation::Eval(int a, int b) const {
  if (kind_ == Kind::kSign) {
    const int s = (a > b) - (a < b);
    return FromDouble<Scalar>(weight_) * Scalar(s);
  }
  return FromDouble<Scalar>(table_[static_cast<size_t>(a) * cols_ + b]);
}

}  // namespace blotto

#endif  // BLOTTO_GAME_H_
