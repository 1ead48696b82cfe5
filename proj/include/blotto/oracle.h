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

#ifndef BLOTTO_ORACLE_H_
#define BLOTTO_ORACLE_H_

#include <cstddef>
#include <vector>

#include "blotto/game.h"
#include "blotto/numeric.h"
#include "blotto/payoff.h"

namespace blotto::oracle {

// Default cap on enumerated strategies per side.
inline constexpr std::size_t kMatrixCap = 10'000;

// Membership tolerance for equilibrium strategies.
template <class Scalar>
inline const Scalar kMembershipTolerance = Scalar(kIsExact<Scalar> ? 1e-9 : 1e-7);

// Full payoff matrix over partial assignments, rows for A and columns for B.
template <class Scalar>
struct MatrixGame {
  std::vector<PureStrategy> row_strategies;
  std::vector<PureStrategy> col_strategies;
  std::vector<std::vector<Scalar>> payoff;    // row player's payoff
  std::vector<std::vector<Scalar>> payoff_b;  // column player's payoff

  int rows() const { return static_cast<int>(row_strategies.size()); }
  int cols() const { return static_cast<int>(col_strategies.size()); }
};

// payoff[r][c] is pi_A (kCosts) or the zero-sum payoff (kZero), in which case
// payoff_b is its negation. Rows are built in parallel. Throws
// ScaleExceededError when either side has more than cap strategies.
template <class Scalar>
MatrixGame<Scalar> BuildMatrix(const CostBlottoGame& game,
                               PayoffVariant variant = PayoffVariant::kZero,
                               std::size_t cap = kMatrixCap);

// Single-threaded reference for BuildMatrix.
template <class Scalar>
MatrixGame<Scalar> BuildMatrixSerial(const CostBlottoGame& game,
                                     PayoffVariant variant = PayoffVariant::kZero,
                                     std::size_t cap = kMatrixCap);

template <class Scalar>
struct MatrixSolution {
  Scalar value{0};
  std::vector<Scalar> row;  // optimal maximin mixture of the row player
  std::vector<Scalar> col;  // optimal minimax mixture of the column player
  int iterations = 0;
};

// Minimax value and optimal strategies of the zero-sum game given by payoff.
// Throws SolverError if the simplex fails.
template <class Scalar>
MatrixSolution<Scalar> SolveMatrixGame(const std::vector<std::vector<Scalar>>& payoff);

// Converts a probability vector over strategies into a MixedStrategy,
// dropping zero entries.
template <class Scalar>
MixedStrategy ToMixed(const std::vector<PureStrategy>& strategies,
                      const std::vector<Scalar>& probabilities);

template <class Scalar>
struct MatrixGameResult {
  Scalar value{0};
  MixedStrategy row;
  MixedStrategy col;
};

// Builds the zero-sum matrix of the game and solves it.
template <class Scalar>
MatrixGameResult<Scalar> MatrixGameSolve(const CostBlottoGame& game,
                                         std::size_t cap = kMatrixCap);

template <class Scalar>
struct EquilibriumSets {
  Scalar value{0};
  std::vector<PureStrategy> row_set;
  std::vector<PureStrategy> col_set;
};

// All pure strategies that guarantee the game value up to eps: rows whose
// worst reply is at least value - eps, columns whose worst reply is at most
// value + eps.
template <class Scalar>
EquilibriumSets<Scalar> ExhaustiveEquilibriumStrategies(
    const CostBlottoGame& game, const Scalar& eps = kMembershipTolerance<Scalar>,
    std::size_t cap = kMatrixCap);

}  // namespace blotto::oracle

#endif  // BLOTTO_ORACLE_H_
