#include <benchmark/benchmark.h>

#include "mukai/orbit.hpp"

using namespace mukai;

static void BM_MinusOneOrbit(benchmark::State& state) {
  const Params p(2, static_cast<int64_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minus_one_divisors(p).size());
  }
}
BENCHMARK(BM_MinusOneOrbit)->Arg(1)->Arg(3)->Arg(5);

static void BM_LargestSporadicOrbit(benchmark::State& state) {
  const Params p(2, 3, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minus_one_divisors(p).size());
  }
}
BENCHMARK(BM_LargestSporadicOrbit);

static void BM_ClassGrouping(benchmark::State& state) {
  const Params p(2, 3, 5);
  const auto s = minus_one_divisors(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classes_up_to_point_symmetry(s, false).size());
  }
}
BENCHMARK(BM_ClassGrouping);

BENCHMARK_MAIN();
