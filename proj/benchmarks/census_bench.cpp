#include <benchmark/benchmark.h>

#include "nilzeta/oracle/census.hpp"

namespace {

using namespace nilzeta::oracle;

void BM_Subalgebras(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const int workers = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(count_subalgebras(n, 2, k, workers));
}
BENCHMARK(BM_Subalgebras)->Args({2, 5, 1})->Args({3, 3, 1})->Args({3, 4, 1})->Args({3, 4, 4})->Unit(benchmark::kMillisecond);

void BM_Ideals(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_ideals(n, 2, k, 1));
}
BENCHMARK(BM_Ideals)->Args({2, 5})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_Sublattices(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_sublattices(d, 2, 3, 1));
}
BENCHMARK(BM_Sublattices)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace
