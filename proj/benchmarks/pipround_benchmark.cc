// Copyright 2026 The pipround Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "pipround/generators.h"
#include "pipround/harness.h"
#include "pipround/instance.h"
#include "pipround/lp.h"
#include "pipround/random.h"
#include "pipround/regimes.h"
#include "pipround/rounding.h"

namespace pipround {
namespace {

NormalizedInstance MakeInstance(int n, int m) {
  return Normalize(RandomInstance(n, m, 4.0, 0.3, 12345));
}

void BM_SolveLp(benchmark::State& state) {
  const NormalizedInstance inst =
      MakeInstance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveLp(inst));
  }
}
BENCHMARK(BM_SolveLp)->Args({50, 20})->Args({200, 50})->Args({500, 100});

void BM_AlterBySorting(benchmark::State& state) {
  const NormalizedInstance inst =
      MakeInstance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const FractionalSolution lp = SolveLp(inst);
  RandomStream rng(7);
  // Dense enough rounding that every row needs repair.
  const std::vector<uint8_t> x_prime = IndependentRound(lp.x, 1.0, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(AlterBySorting(inst, x_prime));
  }
}
BENCHMARK(BM_AlterBySorting)->Args({200, 50})->Args({1000, 200});

void BM_RoundAndAlter(benchmark::State& state) {
  const NormalizedInstance inst = MakeInstance(200, 50);
  const FractionalSolution lp = SolveLp(inst);
  const RegimeConfig cfg = SelectRegime(inst);
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RoundAndAlter(inst, lp, cfg, state.range(0), ++seed));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RoundAndAlter)->Arg(100)->Arg(1000);

void BM_EstimateRejections(benchmark::State& state) {
  const NormalizedInstance inst = MakeInstance(60, 30);
  const FractionalSolution lp = SolveLp(inst);
  const RegimeConfig cfg = ConfigFor(Regime::kWeakW2, inst);
  const auto mode = state.range(0) == 0 ? AlterationMode::kIsolated
                                        : AlterationMode::kCascaded;
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        EstimateRejections(inst, lp, cfg, 1000, mode, ++seed));
  }
}
BENCHMARK(BM_EstimateRejections)->Arg(0)->Arg(1);

}  // namespace
}  // namespace pipround

BENCHMARK_MAIN();
