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

#include "naive_a/generators.hpp"
#include "naive_a/tailor.hpp"
#include "naive_a/verify.hpp"

namespace {

using namespace naive_a;

Instance paths_instance(std::int64_t count) {
  GeneratorParams p;
  p.count = count;
  return gen_instance("weighted_ball", p, 7);
}

void BM_CheckInstance(benchmark::State& state) {
  Instance inst = paths_instance(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_instance(inst.space, inst.chains, inst.R, inst.epsilon, inst.S));
  }
  state.counters["points"] = static_cast<double>(inst.space.size());
}
BENCHMARK(BM_CheckInstance)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

// Args: path count, worker threads.
void BM_Pipeline(benchmark::State& state) {
  Instance inst = paths_instance(state.range(0));
  PipelineOptions opts;
  opts.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pipeline(inst.space, inst.chains, inst.R,
                                          inst.epsilon, inst.S, opts));
  }
  state.counters["points"] = static_cast<double>(inst.space.size());
}
BENCHMARK(BM_Pipeline)
    ->Args({5, 1})
    ->Args({20, 1})
    ->Args({20, 4})
    ->Unit(benchmark::kMillisecond);

void BM_CyclicPipeline(benchmark::State& state) {
  GeneratorParams p;
  p.n = state.range(0);
  p.folner_radius = p.n / 8;
  p.S = p.folner_radius;
  Instance inst = gen_instance("cayley_cyclic", p, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_pipeline(inst.space, inst.chains, inst.R, inst.epsilon, inst.S));
  }
}
BENCHMARK(BM_CyclicPipeline)->Arg(80)->Arg(240)->Unit(benchmark::kMillisecond);

void BM_VerifyCertificate(benchmark::State& state) {
  Instance inst = paths_instance(state.range(0));
  PipelineResult r =
      run_pipeline(inst.space, inst.chains, inst.R, inst.epsilon, inst.S);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_certificate(
        inst.space, inst.chains, r.params, r.subsets, r.certificate));
  }
}
BENCHMARK(BM_VerifyCertificate)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
