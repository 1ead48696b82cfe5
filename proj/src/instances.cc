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

#include "blotto/instances.h"

#include <array>
#include <utility>
#include <vector>

namespace blotto {
namespace {

CostFunction RandomCost(std::mt19937_64& rng, int budget) {
  static constexpr std::array<double, 4> kIncrements = {0.0, 0.25, 0.5, 1.0};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(kIncrements.size()) - 1);
  std::vector<double> table(budget + 1, 0.0);
  for (int t = 1; t <= budget; ++t) table[t] = table[t - 1] + kIncrements[pick(rng)];
  return CostFunction::Table(std::move(table));
}

}  // namespace

CostBlottoGame ExampleOneGame() { return CostBlottoGame::SignLinear(2, 2, 2, 1.0); }

CostBlottoGame RandomSmallGame(std::mt19937_64& rng, const RandomGameOptions& options) {
  std::uniform_int_distribution<int> pick_n(options.min_n, options.max_n);
  std::uniform_int_distribution<int> pick_budget(options.min_budget, options.max_budget);
  std::uniform_int_distribution<int> pick_value(-options.max_abs_valuation,
                                                options.max_abs_valuation);
  const int n = pick_n(rng);
  const int da = pick_budget(rng);
  const int db = pick_budget(rng);
  std::vector<Valuation> valuations;
  for (int i = 0; i < n; ++i) {
    std::vector<double> table(static_cast<std::size_t>(da + 1) * (db + 1));
    for (double& x : table) x = pick_value(rng);
    valuations.push_back(Valuation::Table(da + 1, db + 1, std::move(table)));
  }
  std::vector<CostFunction> ca;
  std::vector<CostFunction> cb;
  for (int i = 0; i < n; ++i) {
    ca.push_back(RandomCost(rng, da));
    cb.push_back(RandomCost(rng, db));
  }
  CostFunction ga = RandomCost(rng, da);
  CostFunction gb = RandomCost(rng, db);
  return CostBlottoGame(da, db, std::move(valuations), std::move(ca), std::move(cb),
                        std::move(ga), std::move(gb));
}

}  // namespace blotto
