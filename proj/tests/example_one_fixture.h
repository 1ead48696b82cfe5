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

#ifndef BLOTTO_TESTS_EXAMPLE_ONE_FIXTURE_H_
#define BLOTTO_TESTS_EXAMPLE_ONE_FIXTURE_H_

#include <utility>
#include <vector>

#include "blotto/game.h"

namespace blotto::fixtures {

// Reference payoff matrix (pi_A, pi_B) of the two-battlefield example with
// costs, transcribed verbatim. Rows are A's strategies and columns B's, both
// in the order below.
inline const std::vector<PureStrategy>& FixtureOrder() {
  static const std::vector<PureStrategy> order = {{0, 0}, {0, 1}, {1, 0},
                                                  {1, 1}, {0, 2}, {2, 0}};
  return order;
}

inline const std::vector<std::vector<std::pair<double, double>>>& FixtureMatrix() {
  static const std::vector<std::vector<std::pair<double, double>>> m = {
      {{0, 0}, {-1, 0}, {-1, 0}, {-2, 0}, {-1, -1}, {-1, -1}},
      {{0, -1}, {-1, -1}, {-1, -1}, {-2, -1}, {-1, -2}, {-2, -1}},
      {{0, -1}, {-1, -1}, {-1, -1}, {-2, -1}, {-2, -1}, {-1, -2}},
      {{0, -2}, {-1, -2}, {-1, -2}, {-2, -2}, {-2, -2}, {-2, -2}},
      {{-1, -1}, {-1, -2}, {-2, -1}, {-2, -2}, {-2, -2}, {-2, -2}},
      {{-1, -1}, {-2, -1}, {-1, -2}, {-2, -2}, {-2, -2}, {-2, -2}},
  };
  return m;
}

// Cells of rows (0,1), (1,0) against columns (0,2), (2,0): the only entries
// that agree with the payoff definition after swapping those column labels
// rather than as transcribed.
inline bool SwappedCell(int r, int c) { return (r == 1 || r == 2) && (c == 4 || c == 5); }

}  // namespace blotto::fixtures

#endif  // BLOTTO_TESTS_EXAMPLE_ONE_FIXTURE_H_
