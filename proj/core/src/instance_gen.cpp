#include "incpath/instance_gen.hpp"

#include <algorithm>
#include <set>

namespace incpath {

FiniteHypergraph randomConnectedGraph(Rng& rng, int minVertices, int maxVertices, int maxEdges) {
    int n = rng.intIn(minVertices, maxVertices);
    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
        used.insert({u, v});
        edges.push_back({u, v});
    }
    int target = rng.intIn(static_cast<int>(edges.size()),
                           std::min(maxEdges, n * (n - 1) / 2));
    int guard = 0;
    while (static_cast<int>(edges.size()) < target && guard++ < 200) {
        int a = rng.intIn(0, n - 1), b = rng.intIn(0, n - 1);
        if (a == b) continue;
        auto key = std::minmax(a, b);
        if (!used.insert({key.first, key.second}).second) continue;
        edges.push_back({key.first, key.second});
    }
    return FiniteHypergraph::dense(2, n, std::move(edges));
}

FiniteHypergraph randomGraph(Rng& rng, int minVertices, int maxVertices, int maxEdges) {
    int n = rng.intIn(minVertices, maxVertices);
    int target = rng.intIn(1, std::min(maxEdges, n * (n - 1) / 2));
    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> edges;
    int guard = 0;
    while (static_cast<int>(edges.size()) < target && guard++ < 400) {
        int a = rng.intIn(0, n - 1), b = rng.intIn(0, n - 1);
        if (a == b) continue;
        auto key = std::minmax(a, b);
        if (!used.insert({key.first, key.second}).second) continue;
        edges.push_back({key.first, key.second});
    }
    return FiniteHypergraph::dense(2, n, std::move(edges));
}

FiniteHypergraph randomSimple3Uniform(Rng& rng, int minVertices, int maxVertices, int maxEdges) {
    int n = std::max(3, rng.intIn(minVertices, maxVertices));
    int target = rng.intIn(1, maxEdges);
    std::set<std::pair<int, int>> usedPairs;
    std::vector<std::vector<int>> edges;
    int guard = 0;
    while (static_cast<int>(edges.size()) < target && guard++ < 600) {
        int a = rng.intIn(0, n - 1), b = rng.intIn(0, n - 1), c = rng.intIn(0, n - 1);
        if (a == b || b == c || a == c) continue;
        std::vector<int> e{a, b, c};
        std::sort(e.begin(), e.end());
        bool clash = false;
        for (int i = 0; i < 3 && !clash; ++i)
            for (int j = i + 1; j < 3 && !clash; ++j)
                if (usedPairs.count({e[i], e[j]})) clash = true;
        if (clash) continue;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) usedPairs.insert({e[i], e[j]});
        edges.push_back(std::move(e));
    }
    return FiniteHypergraph::dense(3, n, std::move(edges));
}

FiniteDigraph randomDigraph(Rng& rng, int minVertices, int maxVertices, int maxArcs) {
    int n = rng.intIn(minVertices, maxVertices);
    int target = rng.intIn(1, std::min(maxArcs, n * (n - 1)));
    std::set<std::pair<int, int>> used;
    std::vector<std::pair<int, int>> arcs;
    int guard = 0;
    while (static_cast<int>(arcs.size()) < target && guard++ < 400) {
        int a = rng.intIn(0, n - 1), b = rng.intIn(0, n - 1);
        if (a == b) continue;
        if (!used.insert({a, b}).second) continue;
        arcs.emplace_back(a, b);
    }
    return FiniteDigraph::dense(n, std::move(arcs));
}

namespace {

Labeling shuffledNatural(LabelTarget target, int count, Rng& rng) {
    auto perm = rng.permutation(count);
    std::vector<int> labels(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) labels[i] = perm[i] + 1;
    return Labeling::natural(target, labels);
}

}  // namespace

Labeling randomVertexLabeling(const FiniteHypergraph& g, Rng& rng) {
    return shuffledNatural(LabelTarget::Vertices, g.vertexCount(), rng);
}

Labeling randomEdgeLabeling(const FiniteHypergraph& g, Rng& rng) {
    return shuffledNatural(LabelTarget::Edges, g.edgeCount(), rng);
}

Labeling randomVertexLabelingD(const FiniteDigraph& d, Rng& rng) {
    return shuffledNatural(LabelTarget::Vertices, d.vertexCount(), rng);
}

Labeling randomArcLabeling(const FiniteDigraph& d, Rng& rng) {
    return shuffledNatural(LabelTarget::Edges, d.arcCount(), rng);
}

Ordering randomOrdering(int n, Rng& rng) {
    return Ordering::fromSequence(rng.permutation(n));
}

Partition randomPartition(int n, int maxBlocks, Rng& rng) {
    int blocks = rng.intIn(1, std::min(maxBlocks, n));
    Partition p;
    p.blocks.assign(static_cast<std::size_t>(blocks), {});
    for (int v = 0; v < n; ++v) p.blocks[rng.below(static_cast<std::uint64_t>(blocks))].push_back(v);
    p.blocks.erase(std::remove_if(p.blocks.begin(), p.blocks.end(),
                                  [](const std::vector<int>& b) { return b.empty(); }),
                   p.blocks.end());
    return p;
}

}  // namespace incpath
