#include <benchmark/benchmark.h>

#include "incpath/families.hpp"
#include "incpath/instance_gen.hpp"
#include "incpath/peeling.hpp"
#include "incpath/rng.hpp"

using namespace incpath;

static void BM_DCoreHalfGraph(benchmark::State& state) {
    auto g = halfGraph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = dCore(g, 3);
        benchmark::DoNotOptimize(r.core);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DCoreHalfGraph)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_LCoreExtendedClique(benchmark::State& state) {
    auto h = extendedClique(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = lCore(h, 2, 3);
        benchmark::DoNotOptimize(r.core);
    }
}
BENCHMARK(BM_LCoreExtendedClique)->Arg(16)->Arg(32)->Arg(64);

static void BM_MaximalPeel(benchmark::State& state) {
    Rng rng(1);
    auto g = dyadicBipartiteH(static_cast<int>(state.range(0)));
    auto lab = randomVertexLabeling(g, rng);
    for (auto _ : state) {
        auto r = maximalPeel(g, lab);
        benchmark::DoNotOptimize(r.k);
    }
}
BENCHMARK(BM_MaximalPeel)->Arg(32)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
