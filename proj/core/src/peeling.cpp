#include "incpath/peeling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace incpath {

namespace {

void requireCleanGraph(const FiniteHypergraph& g) {
    auto bad = validate(g, false);
    if (!bad.empty()) throw std::domain_error("invalid graph: " + bad.front());
}

// Threshold peel over an abstract count: rounds of simultaneous removal
// (lowest position first within a round), counts updated lazily through a
// worklist of touched vertices. remove(v, touched) drops v and appends every
// still-alive vertex whose count it lowered.
template <typename CountOf, typename Remove>
CoreResult peelLoop(int n, const std::vector<char>& inScope, CountOf countOf, Remove remove, int thr) {
    CoreResult res;
    std::vector<char> alive(inScope.begin(), inScope.end());
    std::vector<char> queued(static_cast<std::size_t>(n), 0);
    std::vector<int> wave;
    for (int v = 0; v < n; ++v)
        if (alive[v] && countOf(v) < thr) {
            wave.push_back(v);
            queued[v] = 1;
        }
    int round = 0;
    while (!wave.empty()) {
        ++round;
        std::vector<int> touched;
        for (int v : wave) {
            res.eliminationOrder.push_back({v, round, countOf(v)});
            alive[v] = false;
            remove(v, touched);
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        wave.clear();
        for (int u : touched)
            if (alive[u] && !queued[u] && countOf(u) < thr) {
                wave.push_back(u);
                queued[u] = 1;
            }
    }
    for (int v = 0; v < n; ++v)
        if (alive[v]) res.core.push_back(v);
    return res;
}

CoreResult dCoreOnSubset(const FiniteHypergraph& g, int d, const std::vector<char>& inScope) {
    const int n = g.vertexCount();
    auto adj = adjacencyLists(g);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<char> alive(inScope.begin(), inScope.end());
    for (int v = 0; v < n; ++v)
        if (alive[v])
            for (int u : adj[v])
                if (alive[u]) ++deg[v];
    auto removeV = [&](int v, std::vector<int>& touched) {
        alive[v] = false;
        for (int u : adj[v])
            if (alive[u]) {
                --deg[u];
                touched.push_back(u);
            }
    };
    return peelLoop(
        n, inScope, [&](int v) { return deg[v]; }, removeV, d);
}

CoreResult directedCoreOnSubset(const FiniteDigraph& dg, int thr, const std::vector<char>& inScope,
                                bool useOut) {
    const int n = dg.vertexCount();
    auto fwd = useOut ? outLists(dg) : inLists(dg);
    auto bwd = useOut ? inLists(dg) : outLists(dg);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<char> alive(inScope.begin(), inScope.end());
    for (int v = 0; v < n; ++v)
        if (alive[v])
            for (int u : fwd[v])
                if (alive[u]) ++deg[v];
    auto removeV = [&](int v, std::vector<int>& touched) {
        alive[v] = false;
        for (int u : bwd[v])
            if (alive[u]) {
                --deg[u];
                touched.push_back(u);
            }
    };
    return peelLoop(
        n, inScope, [&](int v) { return deg[v]; }, removeV, thr);
}

std::vector<char> fullScope(int n) { return std::vector<char>(static_cast<std::size_t>(n), 1); }

std::vector<char> scopeOf(const std::vector<int>& subset, int n) {
    std::vector<char> s(static_cast<std::size_t>(n), 0);
    for (int v : subset) s[v] = 1;
    return s;
}

}  // namespace

CoreResult dCore(const FiniteHypergraph& g, int d) {
    requireCleanGraph(g);
    if (d < 0) throw std::invalid_argument("dCore: d must be >= 0");
    return dCoreOnSubset(g, d, fullScope(g.vertexCount()));
}

CoreResult lCore(const FiniteHypergraph& h, int l, int d) {
    requireCleanGraph(h);
    if (l < 2 || l > h.k) throw std::invalid_argument("lCore: need 2 <= l <= k");
    if (d < 1) throw std::invalid_argument("lCore: d must be >= 1");
    const int n = h.vertexCount();
    auto inc = buildIncidence(h);
    std::vector<int> aliveInEdge(static_cast<std::size_t>(h.edgeCount()), 0);
    for (int e = 0; e < h.edgeCount(); ++e) aliveInEdge[e] = static_cast<int>(h.edges[e].size());
    std::vector<char> alive = fullScope(n);
    // qual[v] = number of edges containing v with at least l alive vertices
    std::vector<int> qual(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int e : inc[v])
            if (aliveInEdge[e] >= l) ++qual[v];
    auto removeV = [&](int v, std::vector<int>& touched) {
        alive[v] = false;
        for (int e : inc[v]) {
            int before = aliveInEdge[e]--;
            if (before == l)  // edge just dropped below the co-membership bar
                for (int u : h.edges[e])
                    if (alive[u]) {
                        --qual[u];
                        touched.push_back(u);
                    }
        }
    };
    return peelLoop(
        n, fullScope(n), [&](int v) { return qual[v]; }, removeV, d);
}

CoreResult outCore(const FiniteDigraph& d, int thr) {
    if (thr < 0) throw std::invalid_argument("outCore: threshold must be >= 0");
    return directedCoreOnSubset(d, thr, fullScope(d.vertexCount()), true);
}

CoreResult inCore(const FiniteDigraph& d, int thr) {
    if (thr < 0) throw std::invalid_argument("inCore: threshold must be >= 0");
    return directedCoreOnSubset(d, thr, fullScope(d.vertexCount()), false);
}

namespace {

void requireBipartition(const Partition& parts, int n) {
    auto bad = validatePartition(parts, n);
    if (!bad.empty()) throw std::domain_error("not a partition: " + bad.front());
    if (parts.blockCount() != 2) throw std::domain_error("expected a partition into exactly two sets");
}

}  // namespace

PairedCoreResult pairedCoreCheck(const FiniteHypergraph& g, const Partition& parts, int d) {
    requireCleanGraph(g);
    requireBipartition(parts, g.vertexCount());
    PairedCoreResult res;
    res.w1 = dCoreOnSubset(g, d, scopeOf(parts.blocks[0], g.vertexCount())).core;
    res.w2 = dCoreOnSubset(g, d, scopeOf(parts.blocks[1], g.vertexCount())).core;
    std::set<int> s1(res.w1.begin(), res.w1.end());
    std::set<int> s2(res.w2.begin(), res.w2.end());
    for (const auto& e : g.edges) {
        int a = e[0], b = e[1];
        if (s1.count(a) && s2.count(b)) {
            res.found = true;
            res.crossingEdge = {a, b};
            break;
        }
        if (s1.count(b) && s2.count(a)) {
            res.found = true;
            res.crossingEdge = {b, a};
            break;
        }
    }
    return res;
}

PairedCoreResult directedPairedCoreCheck(const FiniteDigraph& dg, const Partition& parts, int d) {
    requireBipartition(parts, dg.vertexCount());
    PairedCoreResult res;
    res.w1 = directedCoreOnSubset(dg, d, scopeOf(parts.blocks[0], dg.vertexCount()), true).core;
    res.w2 = directedCoreOnSubset(dg, d, scopeOf(parts.blocks[1], dg.vertexCount()), false).core;
    std::set<int> s1(res.w1.begin(), res.w1.end());
    std::set<int> s2(res.w2.begin(), res.w2.end());
    // the required arc runs from W2 into W1
    for (const auto& [u, v] : dg.arcs)
        if (s2.count(u) && s1.count(v)) {
            res.found = true;
            res.crossingEdge = {v, u};
            break;
        }
    return res;
}

ChiStarResult maximalPeel(const FiniteHypergraph& g, const Labeling& phi) {
    requireCleanGraph(g);
    if (phi.target != LabelTarget::Vertices) throw std::domain_error("maximalPeel: vertex labeling required");
    const int n = g.vertexCount();
    auto adj = adjacencyLists(g);
    std::vector<char> alive = fullScope(n);
    ChiStarResult res;
    int remaining = n;
    while (remaining > 0) {
        std::vector<int> maximal;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            bool dominated = false;
            for (int u : adj[v])
                if (alive[u] && phi.at(u) > phi.at(v)) {
                    dominated = true;
                    break;
                }
            if (!dominated) maximal.push_back(v);
        }
        for (int v : maximal) alive[v] = false;
        remaining -= static_cast<int>(maximal.size());
        res.rounds.blocks.push_back(std::move(maximal));
    }
    res.k = res.rounds.blockCount();
    return res;
}

namespace {

bool chiStarBacktrack(const std::vector<std::vector<int>>& adj, int k,
                      std::optional<int> backDegreeCap, std::vector<int>& block, int v, long& nodes,
                      long budgetNodes, bool symmetryCut) {
    const int n = static_cast<int>(adj.size());
    if (v == n) return true;
    if (nodes++ > budgetNodes) return false;
    int maxUsed = 0;
    for (int u = 0; u < v; ++u) maxUsed = std::max(maxUsed, block[u]);
    int limit = symmetryCut ? std::min(k, maxUsed + 1) : k;
    for (int b = 1; b <= limit; ++b) {
        bool ok = true;
        int back = 0;
        for (int u : adj[v]) {
            if (u >= v || block[u] == 0) continue;
            if (block[u] == b) {
                ok = false;
                break;
            }
            if (block[u] < b) ++back;
        }
        if (ok && backDegreeCap && back > *backDegreeCap) ok = false;
        if (ok && backDegreeCap) {
            // assigning v may push an earlier vertex in a later block over the cap
            for (int u : adj[v]) {
                if (u >= v || block[u] <= b) continue;
                int ub = 0;
                for (int w : adj[u])
                    if (w < v && block[w] != 0 && block[w] < block[u]) ++ub;
                ++ub;  // v itself
                if (ub > *backDegreeCap) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        block[v] = b;
        if (chiStarBacktrack(adj, k, backDegreeCap, block, v + 1, nodes, budgetNodes, symmetryCut))
            return true;
        block[v] = 0;
    }
    return false;
}

}  // namespace

std::optional<Partition> chiStarUpperBoundSearch(const FiniteHypergraph& g, int k, long budgetNodes,
                                                 std::optional<int> backDegreeCap, int exactLimit) {
    requireCleanGraph(g);
    if (k < 1) throw std::invalid_argument("chiStarUpperBoundSearch: k must be >= 1");
    const int n = g.vertexCount();
    auto adj = adjacencyLists(g);
    if (n <= exactLimit) {
        std::vector<int> block(static_cast<std::size_t>(n), 0);
        long nodes = 0;
        // block order is irrelevant without the cap, so symmetry can be cut
        if (!chiStarBacktrack(adj, k, backDegreeCap, block, 0, nodes, budgetNodes,
                              !backDegreeCap.has_value()))
            return std::nullopt;
        Partition p;
        p.blocks.assign(static_cast<std::size_t>(k), {});
        for (int v = 0; v < n; ++v) p.blocks[block[v] - 1].push_back(v);
        while (!p.blocks.empty() && p.blocks.back().empty()) p.blocks.pop_back();
        return p;
    }
    // Beyond the exact limit: greedy coloring on the degeneracy order.
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[v] = v;
    Partition greedy = degeneracyColoring(g, all);
    if (greedy.blockCount() > k) return std::nullopt;
    if (backDegreeCap) {
        auto blockOf = greedy.blockOf(n);
        for (int v = 0; v < n; ++v) {
            int back = 0;
            for (int u : adj[v])
                if (blockOf[u] < blockOf[v]) ++back;
            if (back > *backDegreeCap) return std::nullopt;
        }
    }
    return greedy;
}

FiniteHypergraph twoDistanceGraph(const FiniteHypergraph& g, int t) {
    requireCleanGraph(g);
    if (t < 1) throw std::invalid_argument("twoDistanceGraph: t must be >= 1");
    const int n = g.vertexCount();
    auto adj = adjacencyLists(g);
    for (auto& a : adj) std::sort(a.begin(), a.end());
    FiniteHypergraph out;
    out.k = 2;
    out.ids = g.ids;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::vector<int> common;
            std::set_intersection(adj[u].begin(), adj[u].end(), adj[v].begin(), adj[v].end(),
                                  std::back_inserter(common));
            if (static_cast<int>(common.size()) >= t) out.edges.push_back({u, v});
        }
    return out;
}

namespace {

// Min-degree removal order (lowest position on ties) over an induced subgraph.
std::vector<int> peelOrder(const std::vector<std::vector<int>>& fwd, const std::vector<int>& subset,
                           int n) {
    std::vector<char> in = scopeOf(subset, n);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int v : subset)
        for (int u : fwd[v])
            if (in[u]) ++deg[v];
    std::vector<char> alive = in;
    std::vector<int> order;
    for (std::size_t step = 0; step < subset.size(); ++step) {
        int best = -1;
        for (int v : subset)
            if (alive[v] && (best == -1 || deg[v] < deg[best])) best = v;
        order.push_back(best);
        alive[best] = false;
        for (int u : fwd[best])
            if (alive[u]) --deg[u];
    }
    return order;
}

}  // namespace

Partition degeneracyColoring(const FiniteHypergraph& g, const std::vector<int>& subset) {
    const int n = g.vertexCount();
    auto adj = adjacencyLists(g);
    std::vector<char> in = scopeOf(subset, n);
    // symmetric degree peel needs updates on both endpoints; adjacencyLists
    // already lists both directions
    auto order = peelOrder(adj, subset, n);
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    int maxColor = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::set<int> used;
        for (int u : adj[v])
            if (in[u] && color[u] != 0) used.insert(color[u]);
        int c = 1;
        while (used.count(c)) ++c;
        color[v] = c;
        maxColor = std::max(maxColor, c);
    }
    Partition p;
    p.blocks.assign(static_cast<std::size_t>(maxColor), {});
    for (int v : subset) p.blocks[color[v] - 1].push_back(v);
    for (auto& b : p.blocks) std::sort(b.begin(), b.end());
    return p;
}

AcyclicBlocks acyclicBlockPartition(const FiniteDigraph& dg, const std::vector<int>& subset) {
    const int n = dg.vertexCount();
    auto out = outLists(dg);
    auto in = inLists(dg);
    std::vector<char> scope = scopeOf(subset, n);

    // out-degree peel; removing v lowers out-degrees of its in-neighbors
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int v : subset)
        for (int u : out[v])
            if (scope[u]) ++deg[v];
    std::vector<char> alive = scope;
    std::vector<int> order;
    for (std::size_t step = 0; step < subset.size(); ++step) {
        int best = -1;
        for (int v : subset)
            if (alive[v] && (best == -1 || deg[v] < deg[best])) best = v;
        order.push_back(best);
        alive[best] = false;
        for (int u : in[best])
            if (alive[u]) --deg[u];
    }

    AcyclicBlocks res;
    res.peelPosition.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) res.peelPosition[order[i]] = i;
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    int maxColor = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::set<int> used;
        for (int u : out[v])
            if (scope[u] && color[u] != 0) used.insert(color[u]);
        int c = 1;
        while (used.count(c)) ++c;
        color[v] = c;
        maxColor = std::max(maxColor, c);
    }
    res.blocks.blocks.assign(static_cast<std::size_t>(maxColor), {});
    for (int v : subset) res.blocks.blocks[color[v] - 1].push_back(v);
    for (auto& b : res.blocks.blocks) std::sort(b.begin(), b.end());
    return res;
}

}  // namespace incpath
