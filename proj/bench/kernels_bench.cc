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

// Kernel benchmarks: OpenMP kernels against their serial references, plus a
// stage-one LP solve.

#include <memory>

#include "benchmark/benchmark.h"
#include "blotto/flow_lp.h"
#include "blotto/game.h"
#include "blotto/lp_model.h"
#include "blotto/oracle.h"
#include "blotto/reduction.h"
#include "blotto/strategy_tools.h"

namespace blotto {
namespace {

Marginals UniformMarginals(int n, int budget) {
  Marginals m;
  m.p.assign(n, std::vector<double>(budget + 1, 1.0 / (budget + 1)));
  return m;
}

template <bool kParallel>
void BM_BestResponse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const SunkCostGame game = BuildSunkCost(CostBlottoGame::SignLinear(n, d, d, 0.1));
  const Marginals opponent = UniformMarginals(game.n_hat(), d);
  for (auto _ : state) {
    auto r = kParallel ? BestResponseValue<double>(game, opponent, Player::kA)
                       : BestResponseValueSerial<double>(game, opponent, Player::kA);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_BestResponse<true>)->Args({10, 30})->Args({20, 200});
BENCHMARK(BM_BestResponse<false>)->Args({10, 30})->Args({20, 200});

template <bool kParallel>
void BM_BuildMatrix(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const CostBlottoGame game = CostBlottoGame::SignLinear(3, d, d, 0.2);
  for (auto _ : state) {
    auto m = kParallel ? oracle::BuildMatrix<double>(game) : oracle::BuildMatrixSerial<double>(game);
    benchmark::DoNotOptimize(m.payoff.data());
  }
}
BENCHMARK(BM_BuildMatrix<true>)->Arg(8)->Arg(14);
BENCHMARK(BM_BuildMatrix<false>)->Arg(8)->Arg(14);

void BM_StageOneSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const MinimaxLp lp = BuildMinimaxLp(BuildSunkCost(CostBlottoGame::SignLinear(n, d, d, 0.1)),
                                      Player::kA);
  const auto solver = lp::DefaultSolver();
  for (auto _ : state) {
    SolveResult r = Solve(lp, *solver);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_StageOneSolve)->Args({4, 10})->Args({4, 20})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace blotto

BENCHMARK_MAIN();
