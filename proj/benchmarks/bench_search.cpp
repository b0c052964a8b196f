#include <benchmark/benchmark.h>

#include "incpath/families.hpp"
#include "incpath/instance_gen.hpp"
#include "incpath/path_search.hpp"
#include "incpath/rng.hpp"

using namespace incpath;

static void BM_VertexPathDP(benchmark::State& state) {
    Rng rng(7);
    auto g = dyadicBipartiteH(static_cast<int>(state.range(0)));
    auto lab = randomVertexLabeling(g, rng);
    for (auto _ : state) {
        auto w = longestIncreasingVertexPath(g, lab);
        benchmark::DoNotOptimize(w.vertexSeq);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VertexPathDP)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_EdgePathExhaustive(benchmark::State& state) {
    Rng rng(9);
    auto g = randomConnectedGraph(rng, 8, 8, static_cast<int>(state.range(0)));
    auto lab = randomEdgeLabeling(g, rng);
    SearchBudget budget;
    for (auto _ : state) {
        auto r = longestIncreasingEdgePath(g, lab, budget);
        benchmark::DoNotOptimize(r.bestLength);
    }
}
BENCHMARK(BM_EdgePathExhaustive)->Arg(10)->Arg(14)->Arg(18);

static void BM_AdversarialAnneal(benchmark::State& state) {
    Rng rng(11);
    auto g = randomConnectedGraph(rng, 12, 12, 24);
    SearchBudget budget;
    budget.maxNodes = state.range(0);
    for (auto _ : state) {
        auto r = adversarialMin(g, StructureKind::VertexPath, AdversarialMode::Anneal, budget, 3);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_AdversarialAnneal)->Arg(500)->Arg(2000);

static void BM_TwoSidedSearch(benchmark::State& state) {
    Rng rng(13);
    auto g = dyadicBipartiteH(static_cast<int>(state.range(0)));
    int n = g.vertexCount();
    auto perm = rng.permutation(n);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[perm[i]] = i - n / 2;
    auto lab = Labeling::integers(LabelTarget::Vertices, labels);
    for (auto _ : state) {
        auto w = twoSidedSearch(g, lab, 3, 3);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_TwoSidedSearch)->Arg(32)->Arg(64);
