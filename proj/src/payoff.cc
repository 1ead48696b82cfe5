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

#include "blotto/payoff.h"

#include <cstdint>
#include <limits>

#include "blotto/errors.h"

namespace blotto {

std::size_t CountStrategies(int budget, int n, bool full) {
  if (budget < 0 || n < 1) throw PreconditionError("enumeration needs budget >= 0 and n >= 1");
  // Partial: C(D+n, n). Full: C(D+n-1, n-1).
  const std::uint64_t top = full ? static_cast<std::uint64_t>(budget) + n - 1
                                 : static_cast<std::uint64_t>(budget) + n;
  const std::uint64_t k = full ? n - 1 : n;
  std::uint64_t result = 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (top - k + i) / i stays integral at every step.
    const std::uint64_t factor = top - k + i;
    if (result > kMax / factor) return std::numeric_limits<std::size_t>::max();
    result = result * factor / i;
  }
  return static_cast<std::size_t>(result);
}

namespace {

void Enumerate(int remaining, bool full, std::vector<int>& prefix, int n,
               std::vector<PureStrategy>& out) {
  const int i = static_cast<int>(prefix.size());
  if (i == n - 1) {
    if (full) {
      prefix.push_back(remaining);
      out.emplace_back(prefix);
      prefix.pop_back();
    } else {
      for (int u = 0; u <= remaining; ++u) {
        prefix.push_back(u);
        out.emplace_back(prefix);
        prefix.pop_back();
      }
    }
    return;
  }
  for (int u = 0; u <= remaining; ++u) {
    prefix.push_back(u);
    Enumerate(remaining - u, full, prefix, n, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PureStrategy> EnumerateStrategies(int budget, int n, bool full, std::size_t cap) {
  const std::size_t count = CountStrategies(budget, n, full);
  if (count > cap) {
    throw ScaleExceededError(std::to_string(count) + " strategies for D=" + std::to_string(budget) +
                             ", n=" + std::to_string(n) + " exceed cap " + std::to_string(cap));
  }
  std::vector<PureStrategy> out;
  out.reserve(count);
  std::vector<int> prefix;
  prefix.reserve(n);
  Enumerate(budget, full, prefix, n, out);
  return out;
}

std::pair<double, double> ExpectedPayoff(const CostBlottoGame& game,
                                         const MixedStrategy& xi_a,
                                         const MixedStrategy& xi_b,
                                         PayoffVariant variant) {
  ValidateMixedStrategy(xi_a, game.n(), game.budget_a(), false, "mixed strategy of A");
  ValidateMixedStrategy(xi_b, game.n(), game.budget_b(), false, "mixed strategy of B");
  double pa = 0.0;
  double pb = 0.0;
  for (const auto& [x, px] : xi_a.support) {
    for (const auto& [z, pz] : xi_b.support) {
      const double w = px * pz;
      if (variant == PayoffVariant::kCosts) {
        auto [a, b] = PayoffCosts<double>(game, x, z);
        pa += w * a;
        pb += w * b;
      } else {
        const double a = PayoffZero<double>(game, x, z);
        pa += w * a;
        pb -= w * a;
      }
    }
  }
  return {pa, pb};
}

}  // namespace blotto
