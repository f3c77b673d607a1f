// Copyright 2026 The ggsa Authors.
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

#include "ggsa/analytics.hpp"
#include "ggsa/ansatz.hpp"
#include "ggsa/grover.hpp"
#include "ggsa/qmin.hpp"

namespace {

void BM_GroverIterate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::uint64_t N = std::uint64_t{1} << n;
  const ggsa::PureState eta = ggsa::equal_superposition(n);
  const ggsa::MarkedSet marked({N / 3}, N);
  const std::uint64_t tau = ggsa::optimal_iterations(N, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ggsa::success_probability(eta, marked, tau));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(tau));
}
BENCHMARK(BM_GroverIterate)->DenseRange(8, 16, 4);

void BM_ProductUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ggsa::LocalGateParams p{0.3, 1.2, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(ggsa::prepare_ansatz_state(n, p));
}
BENCHMARK(BM_ProductUnitary)->DenseRange(8, 20, 4);

void BM_AverageOverAllSets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::uint64_t r = static_cast<std::uint64_t>(state.range(1));
  const ggsa::PureState psi = ggsa::prepare_ansatz_state(n, {0.3, 1.2, 0.7});
  for (auto _ : state) benchmark::DoNotOptimize(ggsa::average_over_all_sets(psi, r, 4));
}
BENCHMARK(BM_AverageOverAllSets)->Args({5, 3})->Args({6, 2})->Args({7, 2})
    ->Unit(benchmark::kMillisecond);

void BM_Gqma(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ggsa::ObjectiveTable table = ggsa::ObjectiveTable::random_permutation(n, 1);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ggsa::run_gqma(table, std::nullopt, ggsa::SearchSchedule{}, seed++));
  }
}
BENCHMARK(BM_Gqma)->DenseRange(4, 10, 3)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
