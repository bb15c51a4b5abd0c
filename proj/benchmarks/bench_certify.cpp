#include <benchmark/benchmark.h>

#include "stressfree/catalog.hpp"
#include "stressfree/certify.hpp"

using namespace sf;

static void BM_CertifyIcosahedronR5(benchmark::State& state) {
    Graph g = icosahedron();
    for (auto _ : state) benchmark::DoNotOptimize(certify(g, 5));
}
BENCHMARK(BM_CertifyIcosahedronR5);

static void BM_CertifyTorusGraphR6(benchmark::State& state) {
    Graph g = figure1_torus();
    for (auto _ : state) benchmark::DoNotOptimize(certify(g, 6));
}
BENCHMARK(BM_CertifyTorusGraphR6);

static void BM_ReplayWithNumericChecks(benchmark::State& state) {
    Graph g = icosahedron();
    auto cert = std::move(*certify(g, 5).certificate);
    for (auto _ : state)
        benchmark::DoNotOptimize(replay_certificate(g, cert, true));
}
BENCHMARK(BM_ReplayWithNumericChecks);
