#include <benchmark/benchmark.h>

#include "cubiccm/cubiccm.hpp"

using namespace cubiccm;

static void BM_QExpansion(benchmark::State& state) {
  const auto chi = canonical_character(QuadField::from_discriminant(-state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qexpansion(chi, state.range(1)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_QExpansion)->Args({7, 1000})->Args({4, 1000})->Args({163, 1000})->Args({7, 10000})
    ->Unit(benchmark::kMillisecond);

static void BM_ClassList(benchmark::State& state) {
  const Integer det = static_cast<long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(class_list(det));
}
BENCHMARK(BM_ClassList)->Arg(400)->Arg(100003)->Arg(10000019)->Unit(benchmark::kMicrosecond);

static void BM_BruteForceOrder(benchmark::State& state) {
  const GramMatrix g = GramMatrix::diagonal(IntVector(static_cast<std::size_t>(state.range(0)), Integer(1)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_order(g, state.range(1)));
}
BENCHMARK(BM_BruteForceOrder)->Args({2, 5})->Args({3, 5})->Args({4, 3})->Unit(benchmark::kMillisecond);

static void BM_Invariants(benchmark::State& state) {
  const GramMatrix L = make_standard("L");
  for (auto _ : state) benchmark::DoNotOptimize(invariants(L));
}
BENCHMARK(BM_Invariants)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
