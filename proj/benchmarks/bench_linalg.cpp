#include <benchmark/benchmark.h>

#include "stressfree/catalog.hpp"
#include "stressfree/generic.hpp"
#include "stressfree/matrix.hpp"
#include "stressfree/rigidity.hpp"

using namespace sf;

static void BM_Rank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    FieldMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m.at(r, c) = counter_random_field(7, static_cast<uint64_t>(r) * n + c);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(32)->Arg(64)->Arg(128);

static void BM_RigidityStackedSphere(benchmark::State& state) {
    Graph g = random_planar_triangulation(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(analyze_rigidity(g, 3));
}
BENCHMARK(BM_RigidityStackedSphere)->Arg(15)->Arg(30);
