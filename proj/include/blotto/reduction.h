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

#ifndef BLOTTO_REDUCTION_H_
#define BLOTTO_REDUCTION_H_

#include <vector>

#include "blotto/game.h"

namespace blotto {

// Fixed-budget zero-sum Blotto game: both players must assign their whole
// budget over n_hat battlefields, and player A receives sum_i value(i, a_i, b_i).
class SunkCostGame {
 public:
  // tables[i] is row-major with (budget_a+1) rows and (budget_b+1) columns.
  SunkCostGame(int budget_a, int budget_b, std::vector<std::vector<double>> tables);

  int n_hat() const { return static_cast<int>(tables_.size()); }
  int budget_a() const { return budget_a_; }
  int budget_b() const { return budget_b_; }
  int budget(Player p) const { return p == Player::kA ? budget_a_ : budget_b_; }
  double value(int i, int a, int b) const {
    return tables_[i][static_cast<size_t>(a) * (budget_b_ + 1) + b];
  }
  const std::vector<std::vector<double>>& tables() const { return tables_; }

  // The same game seen from B: budgets swapped, tables transposed and negated,
  // so that the "A" role of the result is player B.
  SunkCostGame Swapped() const;

  // Player A's payoff for a profile of full assignments.
  double Payoff(const PureStrategy& sa, const PureStrategy& sb) const;

 private:
  int budget_a_;
  int budget_b_;
  std::vector<std::vector<double>> tables_;
};

// Reduced valuation of battlefield i (0-based, i <= n). For i < n it is
// v_i(a,b) - cA_i(a) + cB_i(b); the extra battlefield i == n scores the
// unassigned resources: -gA(DA - a) + gB(DB - b).
template <class Scalar>
Scalar ReducedValuation(const CostBlottoGame& game, int i, int a, int b) {
  if (i < game.n()) {
    return game.valuation(i).Eval<Scalar>(a, b) -
           game.assign_cost(Player::kA, i).Eval<Scalar>(a) +
           game.assign_cost(Player::kB, i).Eval<Scalar>(b);
  }
  return -game.obtain_cost(Player::kA).Eval<Scalar>(game.budget_a() - a) +
         game.obtain_cost(Player::kB).Eval<Scalar>(game.budget_b() - b);
}

SunkCostGame BuildSunkCost(const CostBlottoGame& game);

// Appends the unassigned remainder D - sum(s) as an extra battlefield.
PureStrategy MapStrategy(const PureStrategy& s, int budget);
// Drops the last coordinate of a full assignment.
PureStrategy UnmapStrategy(const PureStrategy& s_hat);
// As above, additionally checking that s_hat assigns exactly `budget`.
PureStrategy UnmapStrategy(const PureStrategy& s_hat, int budget);
// Resources obtained in the game with costs: D - s_hat[last].
int ObtainedResources(const PureStrategy& s_hat, int budget);

MixedStrategy MapMixedStrategy(const MixedStrategy& xi, int budget);
MixedStrategy UnmapMixedStrategy(const MixedStrategy& xi_hat);

}  // namespace blotto

#endif  // BLOTTO_REDUCTION_H_
