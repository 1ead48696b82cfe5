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

#ifndef BLOTTO_STRATEGY_TOOLS_H_
#define BLOTTO_STRATEGY_TOOLS_H_

#include <vector>

#include "blotto/game.h"
#include "blotto/layered_graph.h"
#include "blotto/numeric.h"
#include "blotto/reduction.h"

namespace blotto {

// Per-battlefield assignment distributions: p[i][t] is the probability of
// placing exactly t resources on battlefield i (0-based), t = 0..budget.
template <class Scalar>
struct BasicMarginals {
  std::vector<std::vector<Scalar>> p;

  int n() const { return static_cast<int>(p.size()); }
  int budget() const { return p.empty() ? 0 : static_cast<int>(p[0].size()) - 1; }
};
using Marginals = BasicMarginals<double>;

inline constexpr double kMarginalTolerance = 1e-9;

// Clamps negative entries to zero and rescales every battlefield to sum 1.
void NormalizeMarginals(Marginals& m);

// P_i(t) = total flow on layer-i edges carrying t units, normalized. Throws
// InvalidFlowError if the flow violates conservation by more than tol.
Marginals MarginalsFromFlow(const StrategyFlow& flow, double tol = kFeasibilityTolerance);

// Marginals of a mixed strategy over n-battlefield assignments of at most
// `budget` resources (full assignments are a special case).
template <class Scalar>
BasicMarginals<Scalar> MarginalsFromMixed(const MixedStrategy& xi, int n, int budget);

// Greedy path stripping: from the source, repeatedly follow the outgoing edge
// with the most residual flow (ties toward fewer units), take the bottleneck as
// the path probability and subtract it. The support has at most num_edges
// entries and the probabilities are renormalized to sum 1. Entries are full
// assignments over n_hat battlefields. Throws InvalidFlowError if residual mass
// above tol cannot reach the sink.
MixedStrategy DecomposeFlow(const StrategyFlow& flow, double tol = kFeasibilityTolerance);

template <class Scalar>
struct BestResponse {
  Scalar value{0};
  PureStrategy strategy;  // full assignment over n_hat battlefields
};

// Best full-assignment reply of `player` in the sunk-cost game against the
// opponent's marginals, by dynamic programming over the player's layered
// graph. Among optimal replies the lexicographically smallest assignment is
// returned (ties toward fewer units on earlier battlefields). The parallel
// version spreads each layer over OpenMP threads; the serial one is the
// reference implementation. Both give identical results.
template <class Scalar>
BestResponse<Scalar> BestResponseValue(const SunkCostGame& game,
                                       const BasicMarginals<Scalar>& opponent, Player player);
template <class Scalar>
BestResponse<Scalar> BestResponseValueSerial(const SunkCostGame& game,
                                             const BasicMarginals<Scalar>& opponent,
                                             Player player);

// Expected payoff of player A in the sunk-cost game given both marginals.
double ExpectedSunkPayoff(const SunkCostGame& game, const Marginals& a, const Marginals& b);

struct Certificate {
  bool is_equilibrium = false;
  double value = 0.0;          // realized zero-sum payoff of A
  double best_response_a = 0.0;
  double best_response_b = 0.0;  // in B's own payoff, i.e. -pi_A
  double gap_a = 0.0;          // best_response_a - value
  double gap_b = 0.0;          // best_response_b + value
};

inline constexpr double kCertificateTolerance = 1e-5;

// Checks the profile in the zero-sum companion game: both mixed strategies are
// over partial assignments, mapped into the sunk-cost game, and each side's
// best-response value is compared with the realized payoff.
Certificate CertifyEquilibrium(const CostBlottoGame& game, const MixedStrategy& xi_a,
                               const MixedStrategy& xi_b, double eps = kCertificateTolerance);

}  // namespace blotto

#endif  // BLOTTO_STRATEGY_TOOLS_H_
