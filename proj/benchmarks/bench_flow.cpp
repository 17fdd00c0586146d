// Copyright 2026 The naive-a Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <optional>
#include <vector>

#include "naive_a/flow.hpp"
#include "naive_a/verify.hpp"

namespace {

using namespace naive_a;

FlowMap path_flow(PointIndex n) {
  std::vector<std::optional<AugPoint>> next(n);
  for (PointIndex i = 0; i + 1 < n; ++i) next[i] = AugPoint::base(i + 1);
  return FlowMap(std::move(next), 0);
}

// One pile of v tokens spreading along a path: v - 1 steps.
void BM_StabilizePile(benchmark::State& state) {
  const auto v = static_cast<Count>(state.range(0));
  FlowMap f = path_flow(static_cast<PointIndex>(v + 1));
  Chain a = base_chain({{0, v}});
  for (auto _ : state) benchmark::DoNotOptimize(stabilize(f, a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StabilizePile)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

// Two stacked balls, the shape weighted_ball chains take on a line.
void BM_StabilizeStackedBalls(benchmark::State& state) {
  const auto r = static_cast<PointIndex>(state.range(0));
  FlowMap f = path_flow(8 * r + 4);
  Chain a;
  for (PointIndex i = 0; i <= 2 * r; ++i) a.add(AugPoint::base(i), 1);
  for (PointIndex i = r / 2; i <= r + r / 2; ++i) a.add(AugPoint::base(i), 1);
  for (auto _ : state) benchmark::DoNotOptimize(stabilize(f, a));
}
BENCHMARK(BM_StabilizeStackedBalls)->Arg(6)->Arg(12)->Arg(48);

void BM_Step(benchmark::State& state) {
  FlowMap f = path_flow(4096);
  Chain a;
  for (PointIndex i = 0; i < 2048; i += 2) a.add(AugPoint::base(i), 3);
  for (auto _ : state) benchmark::DoNotOptimize(step(f, a));
}
BENCHMARK(BM_Step);

void BM_FlowMonitor(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(flow_monitor({4, 2}));
}
BENCHMARK(BM_FlowMonitor)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
