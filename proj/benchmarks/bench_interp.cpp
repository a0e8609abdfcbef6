#include <benchmark/benchmark.h>

#include "mukai/coxgen.hpp"
#include "mukai/interp.hpp"
#include "mukai/lattice.hpp"

using namespace mukai;

static void BM_SectionDimension(benchmark::State& state) {
  const Params p(2, 3, 3);
  const auto antik = anticanonical(p);
  InterpConfig cfg;
  cfg.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(h0(p, antik, cfg));
  }
}
BENCHMARK(BM_SectionDimension);

static void BM_SectionBasis(benchmark::State& state) {
  const Params p(2, 3, 4);
  const auto d = parse_divisor("[4 | 2,2,2,2,2,2,2]", p);
  InterpConfig cfg;
  cfg.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(section_basis(p, d, cfg).basis.size());
  }
}
BENCHMARK(BM_SectionBasis);

static void BM_GenerationCheck(benchmark::State& state) {
  const Params p(2, 1, 3);
  InterpConfig cfg;
  cfg.seed = 1;
  const auto ones = degree_one_effectives(p, cfg);
  const auto antik = anticanonical(p);
  const auto decs = decompositions(antik, ones);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiplication_image_rank(p, antik, decs, ones, cfg));
  }
}
BENCHMARK(BM_GenerationCheck);
