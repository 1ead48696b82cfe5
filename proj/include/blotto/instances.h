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

#ifndef BLOTTO_INSTANCES_H_
#define BLOTTO_INSTANCES_H_

#include <cstdint>
#include <random>

#include "blotto/game.h"

namespace blotto {

// Two battlefields, budget 2 each, sign valuations, obtainment cost g(t) = t
// and no assignment costs.
CostBlottoGame ExampleOneGame();

struct RandomGameOptions {
  int min_n = 2;
  int max_n = 3;
  int min_budget = 0;
  int max_budget = 5;
  int max_abs_valuation = 2;  // integer table entries in [-max, max]
};

// Random game with integer valuation tables and non-decreasing costs whose
// increments are drawn from {0, 0.25, 0.5, 1}. Deterministic given the state
// of rng.
CostBlottoGame RandomSmallGame(std::mt19937_64& rng, const RandomGameOptions& options = {});

}  // namespace blotto

#endif  // BLOTTO_INSTANCES_H_
