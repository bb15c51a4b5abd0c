#include <benchmark/benchmark.h>

#include "stressfree/catalog.hpp"
#include "stressfree/shifting.hpp"

using namespace sf;

static void BM_ExteriorShift(benchmark::State& state) {
    Graph g = random_planar_triangulation(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(exterior_shift(g));
}
BENCHMARK(BM_ExteriorShift)->Arg(8)->Arg(12);

static void BM_SymmetricShift(benchmark::State& state) {
    Graph g = random_planar_triangulation(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(symmetric_shift(g));
}
BENCHMARK(BM_SymmetricShift)->Arg(8)->Arg(12);
