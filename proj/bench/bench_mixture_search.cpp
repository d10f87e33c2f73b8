// Copyright 2026 The Ratiobound Authors
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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ratiobound/generators.hpp"
#include "ratiobound/mixture_search.hpp"

namespace {

using namespace ratiobound;

constexpr std::size_t kStates = 12;

void BM_SampleSerial(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleMixturesSerial(kStates, count, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleParallel(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleMixturesParallel(kStates, count, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SearchSerial(benchmark::State& state) {
  const GameInstance inst = GenRandom(12, kStates, 3, 0.1, 10.0);
  const Matrix mix = SampleMixturesSerial(kStates, state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SearchMixturesSerial(inst, mix));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SearchParallel(benchmark::State& state) {
  const GameInstance inst = GenRandom(12, kStates, 3, 0.1, 10.0);
  const Matrix mix = SampleMixturesSerial(kStates, state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SearchMixturesParallel(inst, mix));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = KernelThreads();
}

BENCHMARK(BM_SampleSerial)->Arg(10000)->Arg(100000);
BENCHMARK(BM_SampleParallel)->Arg(10000)->Arg(100000);
BENCHMARK(BM_SearchSerial)->Arg(10000)->Arg(100000);
BENCHMARK(BM_SearchParallel)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
