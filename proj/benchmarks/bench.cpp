#include <benchmark/benchmark.h>

#include "zck/coulomb.hpp"
#include "zck/identify.hpp"
#include "zck/local_space.hpp"
#include "zck/mpoly.hpp"

using namespace zck;

namespace {

const Quiver& single_vertex() {
  static const Quiver q = parse_quiver("vertex v\n");
  return q;
}

const Quiver& kronecker() {
  static const Quiver q = parse_quiver("vertex 1\nvertex 2\nedge 1 2\nedge 1 2\n");
  return q;
}

void BM_VerifyAllSingleVertex(benchmark::State& state) {
  const DimVector alpha{{static_cast<int>(state.range(0))}};
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(single_vertex(), alpha).pairs_checked);
}
BENCHMARK(BM_VerifyAllSingleVertex)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyAllKronecker(benchmark::State& state) {
  const DimVector alpha{{2, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(kronecker(), alpha).pairs_checked);
}
BENCHMARK(BM_VerifyAllKronecker)->Unit(benchmark::kMillisecond);

void BM_FcFactors(benchmark::State& state) {
  const CoulombAlgebra alg(kronecker(), DimVector{{2, 2}});
  const Cocharacter l{{2, -1, 0, 1}}, m{{-2, 1, 1, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(alg.fc_factors(l, m));
}
BENCHMARK(BM_FcFactors);

void BM_LocalityRelations(benchmark::State& state) {
  const ColoredIndexSet cis(DimVector{{static_cast<int>(state.range(0))}});
  for (auto _ : state) benchmark::DoNotOptimize(locality_relations(single_vertex(), cis).size());
}
BENCHMARK(BM_LocalityRelations)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_MPolyMul(benchmark::State& state) {
  const std::size_t n = 6;
  MPoly p = MPoly::constant(n, 1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) p *= MPoly::difference(n, x, y);
  const MPoly q = p + MPoly::variable(n, 0);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_MPolyMul)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
