#include <benchmark/benchmark.h>

#include "mukai/cones.hpp"
#include "mukai/lattice.hpp"

using namespace mukai;

static void BM_EffectiveMembership(benchmark::State& state) {
  const Params p(2, static_cast<int64_t>(state.range(0)), 3);
  EffectiveCone cone(p);
  const auto antik = anticanonical(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cone.member(antik).member);
  }
}
BENCHMARK(BM_EffectiveMembership)->Arg(3)->Arg(5);

static void BM_MovableMembership(benchmark::State& state) {
  const Params p(2, 3, 3);
  EffectiveCone cone(p);
  cone.extremal(); // prune outside the timed loop
  const auto antik = anticanonical(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cone.in_movable(antik));
  }
}
BENCHMARK(BM_MovableMembership);

static void BM_ExtremalPruning(benchmark::State& state) {
  const Params p(2, 3, 3);
  EffectiveCone seed(p);
  const GeneratedCone cone{p, seed.generators(), false};
  for (auto _ : state) {
    benchmark::DoNotOptimize(extremal_generators(cone).generators.size());
  }
}
BENCHMARK(BM_ExtremalPruning);
