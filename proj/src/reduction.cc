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

#include "blotto/reduction.h"

#include <string>

#include "blotto/errors.h"

namespace blotto {

SunkCostGame::SunkCostGame(int budget_a, int budget_b,
                           std::vector<std::vector<double>> tables)
    : budget_a_(budget_a), budget_b_(budget_b), tables_(std::move(tables)) {
  if (budget_a_ < 0 || budget_b_ < 0) throw PreconditionError("budgets must be >= 0");
  if (tables_.empty()) throw PreconditionError("sunk-cost game needs at least one battlefield");
  const size_t cells = static_cast<size_t>(budget_a_ + 1) * static_cast<size_t>(budget_b_ + 1);
  for (size_t i = 0; i < tables_.size(); ++i) {
    if (tables_[i].size() != cells) {
      throw PreconditionError("payoff table " + std::to_string(i) + " has " +
                              std::to_string(tables_[i].size()) + " cells, expected " +
                              std::to_string(cells));
    }
  }
}

SunkCostGame SunkCostGame::Swapped() const {
  std::vector<std::vector<double>> swapped(tables_.size());
  const int rows = budget_b_ + 1;
  const int cols = budget_a_ + 1;
  for (size_t i = 0; i < tables_.size(); ++i) {
    swapped[i].resize(static_cast<size_t>(rows) * cols);
    for (int b = 0; b < rows; ++b) {
      for (int a = 0; a < cols; ++a) {
        swapped[i][static_cast<size_t>(b) * cols + a] = -value(static_cast<int>(i), a, b);
      }
    }
  }
  return SunkCostGame(budget_b_, budget_a_, std::move(swapped));
}

double SunkCostGame::Payoff(const PureStrategy& sa, const PureStrategy& sb) const {
  ValidateStrategy(sa, n_hat(), budget_a_, true, "full assignment of A");
  ValidateStrategy(sb, n_hat(), budget_b_, true, "full assignment of B");
  double total = 0.0;
  for (int i = 0; i < n_hat(); ++i) total += value(i, sa[i], sb[i]);
  return total;
}

SunkCostGame BuildSunkCost(const CostBlottoGame& game) {
  const int n_hat = game.n() + 1;
  const int da = game.budget_a();
  const int db = game.budget_b();
  std::vector<std::vector<double>> tables(n_hat);
  for (int i = 0; i < n_hat; ++i) {
    tables[i].resize(static_cast<size_t>(da + 1) * (db + 1));
    for (int a = 0; a <= da; ++a) {
      for (int b = 0; b <= db; ++b) {
        tables[i][static_cast<size_t>(a) * (db + 1) + b] = ReducedValuation<double>(game, i, a, b);
      }
    }
  }
  return SunkCostGame(da, db, std::move(tables));
}

PureStrategy MapStrategy(const PureStrategy& s, int budget) {
  ValidateStrategy(s, s.size(), budget, false, "strategy");
  PureStrategy out = s;
  out.units.push_back(budget - s.Total());
  return out;
}

PureStrategy UnmapStrategy(const PureStrategy& s_hat) {
  if (s_hat.size() < 2) throw PreconditionError("full assignment needs at least 2 coordinates");
  for (int u : s_hat.units) {
    if (u < 0) throw PreconditionError("full assignment " + s_hat.ToString() + " has a negative entry");
  }
  PureStrategy out = s_hat;
  out.units.pop_back();
  return out;
}

PureStrategy UnmapStrategy(const PureStrategy& s_hat, int budget) {
  ValidateStrategy(s_hat, s_hat.size(), budget, true, "full assignment");
  return UnmapStrategy(s_hat);
}

int ObtainedResources(const PureStrategy& s_hat, int budget) {
  ValidateStrategy(s_hat, s_hat.size(), budget, true, "full assignment");
  return budget - s_hat.units.back();
}

MixedStrategy MapMixedStrategy(const MixedStrategy& xi, int budget) {
  MixedStrategy out;
  out.support.reserve(xi.support.size());
  for (const auto& [s, p] : xi.support) out.support.emplace_back(MapStrategy(s, budget), p);
  return out;
}

MixedStrategy UnmapMixedStrategy(const MixedStrategy& xi_hat) {
  MixedStrategy out;
  out.support.reserve(xi_hat.support.size());
  for (const auto& [s, p] : xi_hat.support) out.support.emplace_back(UnmapStrategy(s), p);
  return out;
}

}  // namespace blotto
