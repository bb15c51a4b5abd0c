#include <benchmark/benchmark.h>

#include "stressfree/catalog.hpp"
#include "stressfree/minors.hpp"

using namespace sf;

static void BM_MinorWitnessPetersenK5(benchmark::State& state) {
    Graph host = petersen_graph();
    Graph k5 = complete_graph(5);
    for (auto _ : state) benchmark::DoNotOptimize(has_minor(host, k5));
}
BENCHMARK(BM_MinorWitnessPetersenK5);

static void BM_MinorNoneIcosahedronK5(benchmark::State& state) {
    Graph host = icosahedron();
    Graph k5 = complete_graph(5);
    for (auto _ : state) benchmark::DoNotOptimize(has_minor(host, k5));
}
BENCHMARK(BM_MinorNoneIcosahedronK5);

static void BM_LinklessTorusGraph(benchmark::State& state) {
    Graph g = figure1_torus();
    for (auto _ : state) benchmark::DoNotOptimize(is_linkless(g));
}
BENCHMARK(BM_LinklessTorusGraph);
