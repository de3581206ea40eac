// Copyright 2026 The batchbandit Authors.
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

#include <cstdint>

#include "benchmark/benchmark.h"
#include "batchbandit/etc_policy.h"
#include "batchbandit/grid.h"
#include "batchbandit/reward.h"
#include "batchbandit/rng.h"
#include "batchbandit/ucb2.h"

namespace batchbandit {
namespace {

void BM_RunEtc(benchmark::State& state) {
  const int64_t horizon = state.range(0);
  const auto mode = static_cast<BatchMode>(state.range(1));
  const Grid grid = *ArithmeticGrid(horizon, 5);
  const BanditInstance instance =
      *MakeInstance(RewardFamily::Gaussian(), 0.5, 0.6);
  uint64_t rep = 0;
  for (auto _ : state) {
    RngStream rng = MakeRngStream(1, rep++);
    benchmark::DoNotOptimize(RunEtc(grid, instance, rng, mode));
  }
  state.SetItemsProcessed(state.iterations() * horizon);
}
BENCHMARK(BM_RunEtc)
    ->Args({10000, static_cast<int>(BatchMode::kShuffled)})
    ->Args({10000, static_cast<int>(BatchMode::kLowSwitch)})
    ->Args({40000, static_cast<int>(BatchMode::kShuffled)});

void BM_RunUcb2(benchmark::State& state) {
  const int64_t horizon = state.range(0);
  const BanditInstance instance =
      *MakeInstance(RewardFamily::Gaussian(), 0.5, 0.6);
  uint64_t rep = 0;
  for (auto _ : state) {
    RngStream rng = MakeRngStream(2, rep++);
    benchmark::DoNotOptimize(RunUcb2({0.1, horizon}, instance, rng));
  }
  state.SetItemsProcessed(state.iterations() * horizon);
}
BENCHMARK(BM_RunUcb2)->Arg(10000)->Arg(40000);

void BM_SampleReward(benchmark::State& state) {
  const auto kind = static_cast<FamilyKind>(state.range(0));
  const BanditInstance instance = *MakeInstance(RewardFamily{kind}, 0.5, 0.6);
  RngStream rng = MakeRngStream(3, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleReward(instance, Arm::kFirst, rng));
  }
}
BENCHMARK(BM_SampleReward)
    ->Arg(static_cast<int>(FamilyKind::kGaussian))
    ->Arg(static_cast<int>(FamilyKind::kBernoulli))
    ->Arg(static_cast<int>(FamilyKind::kPoisson))
    ->Arg(static_cast<int>(FamilyKind::kStudentT));

}  // namespace
}  // namespace batchbandit

BENCHMARK_MAIN();
