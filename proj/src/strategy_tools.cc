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

#include "blotto/strategy_tools.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "blotto/errors.h"

namespace blotto {
namespace {

// Residual flow at or below this is treated as zero while stripping paths.
constexpr double kResidualFloor = 1e-13;

std::string DimensionMessage(const char* what, int got, int want) {
  std::ostringstream msg;
  msg << what << ": got " << got << ", expected " << want;
  return msg.str();
}

template <class Scalar, bool kParallel>
BestResponse<Scalar> BestResponseImpl(const SunkCostGame& game,
                                      const BasicMarginals<Scalar>& opponent, Player player) {
  std::optional<SunkCostGame> swapped;
  if (player == Player::kB) swapped.emplace(game.Swapped());
  const SunkCostGame& g = swapped ? *swapped : game;
  const int n_hat = g.n_hat();
  const int d = g.budget_a();
  const int d_opp = g.budget_b();
  if (opponent.n() != n_hat) {
    throw PreconditionError(DimensionMessage("opponent marginals battlefields", opponent.n(), n_hat));
  }
  for (const auto& row : opponent.p) {
    if (static_cast<int>(row.size()) != d_opp + 1) {
      throw PreconditionError(DimensionMessage("opponent marginal length",
                                               static_cast<int>(row.size()), d_opp + 1));
    }
  }

  // Expected payoff of placing a units on battlefield i.
  const int width = d + 1;
  std::vector<Scalar> expected(static_cast<std::size_t>(n_hat) * width);
#pragma omp parallel for collapse(2) schedule(static) if (kParallel)
  for (int i = 0; i < n_hat; ++i) {
    for (int a = 0; a <= d; ++a) {
      Scalar s(0);
      const auto& p = opponent.p[i];
      for (int b = 0; b <= d_opp; ++b) {
        if (p[b] != Scalar(0)) s += p[b] * FromDouble<Scalar>(g.value(i, a, b));
      }
      expected[static_cast<std::size_t>(i) * width + a] = s;
    }
  }
  auto e = [&](int i, int a) -> const Scalar& {
    return expected[static_cast<std::size_t>(i) * width + a];
  };

  // best[k][j]: best value from node (k, j) to the sink; choice[k][j] the
  // smallest optimal placement on battlefield k.
  std::vector<std::vector<Scalar>> best(n_hat, std::vector<Scalar>(width));
  std::vector<std::vector<int>> choice(n_hat, std::vector<int>(width, 0));
  for (int j = 0; j <= d; ++j) {
    best[n_hat - 1][j] = e(n_hat - 1, d - j);
    choice[n_hat - 1][j] = d - j;
  }
  for (int k = n_hat - 2; k >= 0; --k) {
    const int j_max = k == 0 ? 0 : d;
#pragma omp parallel for schedule(dynamic, 4) if (kParallel)
    for (int j = 0; j <= j_max; ++j) {
      Scalar top = e(k, 0) + best[k + 1][j];
      int arg = 0;
      for (int a = 1; a <= d - j; ++a) {
        Scalar cand = e(k, a) + best[k + 1][j + a];
        if (cand > top) {
          top = std::move(cand);
          arg = a;
        }
      }
      best[k][j] = std::move(top);
      choice[k][j] = arg;
    }
  }
  BestResponse<Scalar> out;
  out.value = best[0][0];
  out.strategy.units.resize(n_hat);
  int j = 0;
  for (int k = 0; k < n_hat; ++k) {
    out.strategy.units[k] = choice[k][j];
    j += choice[k][j];
  }
  return out;
}

}  // namespace

void NormalizeMarginals(Marginals& m) {
  for (auto& row : m.p) {
    double total = 0.0;
    for (double& x : row) {
      x = std::max(x, 0.0);
      total += x;
    }
    if (total <= 0.0) throw InvalidFlowError("marginal with no mass");
    for (double& x : row) x /= total;
  }
}

Marginals MarginalsFromFlow(const StrategyFlow& flow, double tol) {
  flow.Validate(tol);
  const LayeredGraph& g = flow.graph;
  Marginals m;
  m.p.assign(g.n_hat(), std::vector<double>(g.budget() + 1, 0.0));
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edges()[e];
    m.p[edge.layer - 1][edge.units] += std::max(flow.edge_flow[e], 0.0);
  }
  NormalizeMarginals(m);
  return m;
}

template <class Scalar>
BasicMarginals<Scalar> MarginalsFromMixed(const MixedStrategy& xi, int n, int budget) {
  ValidateMixedStrategy(xi, n, budget, false, "mixed strategy");
  BasicMarginals<Scalar> m;
  m.p.assign(n, std::vector<Scalar>(budget + 1, Scalar(0)));
  for (const auto& [s, prob] : xi.support) {
    const Scalar p = FromDouble<Scalar>(prob);
    for (int i = 0; i < n; ++i) m.p[i][s[i]] += p;
  }
  return m;
}

MixedStrategy DecomposeFlow(const StrategyFlow& flow, double tol) {
  flow.Validate(tol);
  const LayeredGraph& g = flow.graph;
  const int n_hat = g.n_hat();
  const int d = g.budget();
  std::vector<double> residual(flow.edge_flow);
  for (double& x : residual) x = std::max(x, 0.0);

  MixedStrategy out;
  double stripped = 0.0;
  std::vector<int> path(n_hat);
  std::vector<int> edges(n_hat);
  for (int round = 0; round < g.num_edges() && 1.0 - stripped > kResidualFloor; ++round) {
    int j = 0;
    double bottleneck = std::numeric_limits<double>::infinity();
    bool dead_end = false;
    for (int layer = 1; layer <= n_hat; ++layer) {
      const int a_lo = layer == n_hat ? d - j : 0;
      int pick = -1;
      double top = kResidualFloor;
      for (int a = a_lo; a <= d - j; ++a) {
        const int idx = g.EdgeIndex(layer, j, a);
        if (idx >= 0 && residual[idx] > top) {
          top = residual[idx];
          pick = idx;
        }
      }
      if (pick < 0) {
        dead_end = true;
        break;
      }
      edges[layer - 1] = pick;
      path[layer - 1] = g.edges()[pick].units;
      bottleneck = std::min(bottleneck, top);
      j += path[layer - 1];
    }
    if (dead_end) break;
    for (int idx : edges) residual[idx] -= bottleneck;
    out.support.emplace_back(PureStrategy(path), bottleneck);
    stripped += bottleneck;
  }
  if (1.0 - stripped > tol) {
    std::ostringstream msg;
    msg << "residual mass " << 1.0 - stripped << " cannot reach the sink";
    throw InvalidFlowError(msg.str());
  }
  for (auto& entry : out.support) entry.second /= stripped;
  return out;
}

template <class Scalar>
BestResponse<Scalar> BestResponseValue(const SunkCostGame& game,
                                       const BasicMarginals<Scalar>& opponent, Player player) {
  return BestResponseImpl<Scalar, true>(game, opponent, player);
}

template <class Scalar>
BestResponse<Scalar> BestResponseValueSerial(const SunkCostGame& game,
                                             const BasicMarginals<Scalar>& opponent,
                                             Player player) {
  return BestResponseImpl<Scalar, false>(game, opponent, player);
}

double ExpectedSunkPayoff(const SunkCostGame& game, const Marginals& a, const Marginals& b) {
  if (a.n() != game.n_hat() || b.n() != game.n_hat()) {
    throw PreconditionError("marginals do not match the battlefield count");
  }
  if (a.budget() != game.budget_a() || b.budget() != game.budget_b()) {
    throw PreconditionError("marginals do not match the budgets");
  }
  double total = 0.0;
  for (int i = 0; i < game.n_hat(); ++i) {
    for (int x = 0; x <= game.budget_a(); ++x) {
      if (a.p[i][x] == 0.0) continue;
      double row = 0.0;
      for (int y = 0; y <= game.budget_b(); ++y) row += b.p[i][y] * game.value(i, x, y);
      total += a.p[i][x] * row;
    }
  }
  return total;
}

Certificate CertifyEquilibrium(const CostBlottoGame& game, const MixedStrategy& xi_a,
                               const MixedStrategy& xi_b, double eps) {
  ValidateMixedStrategy(xi_a, game.n(), game.budget_a(), false, "strategy of A");
  ValidateMixedStrategy(xi_b, game.n(), game.budget_b(), false, "strategy of B");
  const SunkCostGame sunk = BuildSunkCost(game);
  const Marginals ma =
      MarginalsFromMixed<double>(MapMixedStrategy(xi_a, game.budget_a()), sunk.n_hat(), game.budget_a());
  const Marginals mb =
      MarginalsFromMixed<double>(MapMixedStrategy(xi_b, game.budget_b()), sunk.n_hat(), game.budget_b());
  Certificate c;
  c.value = ExpectedSunkPayoff(sunk, ma, mb);
  c.best_response_a = BestResponseValue<double>(sunk, mb, Player::kA).value;
  c.best_response_b = BestResponseValue<double>(sunk, ma, Player::kB).value;
  c.gap_a = c.best_response_a - c.value;
  c.gap_b = c.best_response_b + c.value;
  c.is_equilibrium = c.gap_a <= eps && c.gap_b <= eps;
  return c;
}

template BasicMarginals<double> MarginalsFromMixed<double>(const MixedStrategy&, int, int);
template BasicMarginals<Rational> MarginalsFromMixed<Rational>(const MixedStrategy&, int, int);
template BestResponse<double> BestResponseValue<double>(const SunkCostGame&, const Marginals&,
                                                        Player);
template BestResponse<Rational> BestResponseValue<Rational>(const SunkCostGame&,
                                                            const BasicMarginals<Rational>&,
                                                            Player);
template BestResponse<double> BestResponseValueSerial<double>(const SunkCostGame&,
                                                              const Marginals&, Player);
template BestResponse<Rational> BestResponseValueSerial<Rational>(
    const SunkCostGame&, const BasicMarginals<Rational>&, Player);

}  // namespace blotto
