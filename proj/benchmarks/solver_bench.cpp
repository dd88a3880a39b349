// Copyright 2026 The monopos Authors
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

#include "monopos/checker.hpp"
#include "monopos/families.hpp"
#include "monopos/induced_paths.hpp"
#include "monopos/lex_formula.hpp"
#include "monopos/position_sets.hpp"
#include "monopos/products.hpp"

namespace {

using namespace monopos;

void BM_MpGear(benchmark::State& state) {
  const Graph g = gear_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mp_number(g).value);
}
BENCHMARK(BM_MpGear)->DenseRange(4, 8, 2);

void BM_GpGear(benchmark::State& state) {
  const Graph g = gear_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gp_number(g).value);
}
BENCHMARK(BM_GpGear)->DenseRange(4, 8, 2);

void BM_MpGrid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = cartesian_product(path_graph(n), path_graph(n)).graph();
  for (auto _ : state) benchmark::DoNotOptimize(mp_number(g).value);
}
BENCHMARK(BM_MpGrid)->DenseRange(2, 5);

void BM_MpLowerTorus(benchmark::State& state) {
  const Graph g = cartesian_product(cycle_graph(4), cycle_graph(4)).graph();
  for (auto _ : state) benchmark::DoNotOptimize(mp_lower(g).value);
}
BENCHMARK(BM_MpLowerTorus);

void BM_IntervalCycle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = cycle_graph(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(monophonic_interval(g, 0, n / 2).size());
}
BENCHMARK(BM_IntervalCycle)->RangeMultiplier(2)->Range(8, 64);

void BM_LexFormulaVersusDirect(benchmark::State& state) {
  const Graph g = cycle_graph(5), h = path_graph(3);
  const bool direct = state.range(0) != 0;
  for (auto _ : state) {
    if (direct)
      benchmark::DoNotOptimize(
          mp_number(lexicographic_product(g, h).graph()).value);
    else
      benchmark::DoNotOptimize(lex_mp(g, h).value);
  }
}
BENCHMARK(BM_LexFormulaVersusDirect)->Arg(0)->Arg(1);

void BM_GenerateDedup(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_connected_graphs(n, true).size());
}
BENCHMARK(BM_GenerateDedup)->DenseRange(4, 6);

}  // namespace

BENCHMARK_MAIN();
