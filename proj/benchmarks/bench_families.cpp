#include <benchmark/benchmark.h>

#include "incpath/families.hpp"

using namespace incpath;

static void BM_DyadicBipartiteH(benchmark::State& state) {
    for (auto _ : state) {
        auto h = dyadicBipartiteH(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(h.edges);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DyadicBipartiteH)->RangeMultiplier(2)->Range(16, 512)->Complexity();

static void BM_ExtendedClique(benchmark::State& state) {
    for (auto _ : state) {
        auto h = extendedClique(4, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(h.edges);
    }
}
BENCHMARK(BM_ExtendedClique)->Arg(16)->Arg(64);

static void BM_HalfGraph(benchmark::State& state) {
    for (auto _ : state) {
        auto h = halfGraph(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(h.edges);
    }
}
BENCHMARK(BM_HalfGraph)->Arg(64)->Arg(256)->Arg(1024);
