/*
 * Copyright 2026 The impbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "bench_util.hpp"
#include "impbench/curation.hpp"
#include "impbench/fuzzer.hpp"
#include "impbench/metrics.hpp"

namespace impbench {
namespace {

void BM_StaticMetricsFuzzed(benchmark::State& state) {
  const Program p = generate_accepted(FuzzConfig{}, 3, 1'000'000).program;
  for (auto _ : state) benchmark::DoNotOptimize(static_metrics(p));
}
BENCHMARK(BM_StaticMetricsFuzzed);

void BM_DepDegreeFuzzed(benchmark::State& state) {
  const Program p = generate_accepted(FuzzConfig{}, 3, 1'000'000).program;
  for (auto _ : state) benchmark::DoNotOptimize(dep_degree(p));
}
BENCHMARK(BM_DepDegreeFuzzed);

void BM_ProfileMbpp(benchmark::State& state) {
  const Program p = bench::Mbpp();
  for (auto _ : state) benchmark::DoNotOptimize(profile(p));
}
BENCHMARK(BM_ProfileMbpp);

void BM_MakeInstance(benchmark::State& state) {
  const Program p = bench::Mbpp();
  CurationOptions opts;
  opts.task = static_cast<TaskKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_instance("mbpp_962", p, opts));
}
BENCHMARK(BM_MakeInstance)->Arg(0)->Arg(1)->Arg(2);

}  // namespace
}  // namespace impbench
