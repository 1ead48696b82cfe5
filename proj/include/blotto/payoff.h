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

#ifndef BLOTTO_PAYOFF_H_
#define BLOTTO_PAYOFF_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "blotto/game.h"

namespace blotto {

enum class PayoffVariant {
  kCosts,  // each player carries its own costs
  kZero,   // opponent's costs transferred, making the game zero-sum
};

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

// Sum of costs carried by player p under strategy s: assignment costs plus the
// obtainment cost of the total.
template <class Scalar>
Scalar TotalCost(const CostBlottoGame& game, Player p, const PureStrategy& s) {
  Scalar cost(0);
  for (int i = 0; i < game.n(); ++i) cost += game.assign_cost(p, i).Eval<Scalar>(s[i]);
  cost += game.obtain_cost(p).Eval<Scalar>(s.Total());
  return cost;
}

// Pure payoffs (pi_A, pi_B) of the game with costs.
template <class Scalar>
std::pair<Scalar, Scalar> PayoffCosts(const CostBlottoGame& game,
                                      const PureStrategy& sa,
                                      const PureStrategy& sb) {
  ValidateStrategy(sa, game.n(), game.budget_a(), false, "strategy of A");
  ValidateStrategy(sb, game.n(), game.budget_b(), false, "strategy of B");
  Scalar battle(0);
  for (int i = 0; i < game.n(); ++i) battle += game.valuation(i).Eval<Scalar>(sa[i], sb[i]);
  Scalar pa = battle - TotalCost<Scalar>(game, Player::kA, sa);
  Scalar pb = -battle - TotalCost<Scalar>(game, Player::kB, sb);
  return {pa, pb};
}

// Player A's payoff in the zero-sum companion game; B's payoff is its negation.
template <class Scalar>
Scalar PayoffZero(const CostBlottoGame& game, const PureStrategy& sa,
                  const PureStrategy& sb) {
  auto [pa, pb] = PayoffCosts<Scalar>(game, sa, sb);
  (void)pb;
  return pa + TotalCost<Scalar>(game, Player::kB, sb);
}

// Number of strategies in S(D, n) (partial) or M(D, n) (full), saturating at
// SIZE_MAX.
std::size_t CountStrategies(int budget, int n, bool full);

// Every partial (sum <= budget) or full (sum == budget) assignment of n
// battlefields, lexicographically ordered. Throws ScaleExceededError when the
// count exceeds cap.
std::vector<PureStrategy> EnumerateStrategies(int budget, int n, bool full,
                                              std::size_t cap = kDefaultEnumerationCap);

// Expected payoffs of both players under independent mixed strategies over
// partial assignments.
std::pair<double, double> ExpectedPayoff(const CostBlottoGame& game,
                                         const MixedStrategy& xi_a,
                                         const MixedStrategy& xi_b,
                                         PayoffVariant variant);

}  // namespace blotto

#endif  // BLOTTO_PAYOFF_H_
