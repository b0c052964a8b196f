#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "incpath/families.hpp"
#include "incpath/instance_gen.hpp"
#include "incpath/model.hpp"
#include "incpath/oracles.hpp"
#include "incpath/path_search.hpp"
#include "incpath/peeling.hpp"

using namespace incpath;

namespace {

FiniteHypergraph cycle(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return FiniteHypergraph::dense(2, n, std::move(edges));
}

std::vector<int> allVerts(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

// threshold peel in a randomized removal order; the core must not depend on it
std::vector<int> randomOrderPeel(const FiniteHypergraph& g, int d, Rng& rng) {
    const int n = g.vertexCount();
    auto adj = adjacencyLists(g);
    std::vector<int> deg(n, 0);
    std::vector<char> alive(n, 1);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    while (true) {
        std::vector<int> deficient;
        for (int v = 0; v < n; ++v)
            if (alive[v] && deg[v] < d) deficient.push_back(v);
        if (deficient.empty()) break;
        int v = deficient[rng.below(deficient.size())];
        alive[v] = 0;
        for (int u : adj[v])
            if (alive[u]) --deg[u];
    }
    std::vector<int> core;
    for (int v = 0; v < n; ++v)
        if (alive[v]) core.push_back(v);
    return core;
}

}  // namespace

TEST_CASE("dCore basics") {
    auto c5 = cycle(5);
    CHECK(dCore(c5, 2).core == allVerts(5));

    for (const auto& tree : rootedTreeCatalogue(7)) CHECK(dCore(tree, 2).core.empty());

    auto k4me = FiniteHypergraph::dense(2, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(dCore(k4me, 3).core.empty());
    CHECK(dCoreBrute(k4me, 3).empty());
}

TEST_CASE("dCore equals the brute-force union of qualifying subsets") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        Rng tr = rng.fork(t);
        auto g = randomGraph(tr, 4, 10, 16);
        for (int d = 1; d <= 3; ++d) CHECK(dCore(g, d).core == dCoreBrute(g, d));
    }
}

TEST_CASE("peel order does not change the core") {
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        Rng tr = rng.fork(t);
        auto g = randomGraph(tr, 4, 11, 18);
        for (int d = 1; d <= 3; ++d) {
            auto det = dCore(g, d).core;
            auto rand = randomOrderPeel(g, d, tr);
            CHECK(det == rand);
        }
    }
}

TEST_CASE("elimination order replays as a certificate") {
    Rng rng(17);
    auto g = randomGraph(rng, 6, 10, 14);
    int d = 2;
    auto res = dCore(g, d);
    auto adj = adjacencyLists(g);
    std::vector<char> alive(g.vertexCount(), 1);
    auto degreeWithin = [&](int v) {
        int c = 0;
        for (int u : adj[v])
            if (alive[u]) ++c;
        return c;
    };
    int lastRound = 0;
    for (const auto& step : res.eliminationOrder) {
        CHECK(step.round >= lastRound);
        lastRound = step.round;
        CHECK(degreeWithin(step.vertex) == step.countAtPeel);
        CHECK(step.countAtPeel < d);
        alive[step.vertex] = 0;
    }
    // the survivors are the core, each meeting the threshold inside it
    std::set<int> core(res.core.begin(), res.core.end());
    for (int v : res.core) {
        int c = 0;
        for (int u : adj[v])
            if (core.count(u)) ++c;
        CHECK(c >= d);
    }
    // fixpoint maximality: putting any peeled vertex back leaves it deficient
    for (const auto& step : res.eliminationOrder) {
        int c = 0;
        for (int u : adj[step.vertex])
            if (core.count(u)) ++c;
        CHECK(c < d);
    }
}

TEST_CASE("lCore spec instances") {
    auto ec = extendedClique(3, 4);
    auto base = extendedCliqueBase(3, 4);
    CHECK(lCore(ec, 2, 3).core == base);
    CHECK(lCoreBrute(ec, 2, 3) == base);
    CHECK(lCore(ec, 3, 2).core.empty());
    CHECK(lCoreBrute(ec, 3, 2).empty());

    auto k34 = completeHypergraph(3, 4);
    CHECK(lCore(k34, 2, 1).core == allVerts(4));

    CHECK_THROWS_AS(lCore(ec, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(lCore(ec, 4, 1), std::invalid_argument);
}

TEST_CASE("lCore monotonicity and the 2-uniform reduction") {
    Rng rng(19);
    for (int t = 0; t < 20; ++t) {
        Rng tr = rng.fork(t);
        auto h = randomSimple3Uniform(tr, 6, 10, 9);
        for (int d = 1; d <= 2; ++d) {
            auto a = lCore(h, 2, d).core;
            auto b = lCore(h, 2, d + 1).core;
            CHECK(std::includes(a.begin(), a.end(), b.begin(), b.end()));
            auto c = lCore(h, 3, d).core;
            CHECK(std::includes(a.begin(), a.end(), c.begin(), c.end()));
            CHECK(lCore(h, 2, d).core == lCoreBrute(h, 2, d));
        }
        auto g = randomGraph(tr, 4, 9, 12);
        for (int d = 1; d <= 3; ++d) CHECK(lCore(g, 2, d).core == dCore(g, d).core);
    }
}

TEST_CASE("directed cores") {
    std::vector<std::pair<int, int>> cyc;
    for (int i = 0; i < 5; ++i) cyc.emplace_back(i, (i + 1) % 5);
    auto d5 = FiniteDigraph::dense(5, cyc);
    CHECK(outCore(d5, 1).core == allVerts(5));
    CHECK(inCore(d5, 1).core == allVerts(5));
    CHECK(outCore(d5, 0).core == allVerts(5));

    // transitive tournament: the sink peels and everything cascades
    std::vector<std::pair<int, int>> tt;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) tt.emplace_back(i, j);
    auto t4 = FiniteDigraph::dense(4, tt);
    CHECK(outCore(t4, 2).core.empty());
    CHECK(directedCoreBrute(t4, 2, true).empty());

    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        Rng tr = rng.fork(t);
        auto dg = randomDigraph(tr, 4, 9, 20);
        for (int thr = 1; thr <= 2; ++thr) {
            CHECK(outCore(dg, thr).core == directedCoreBrute(dg, thr, true));
            CHECK(inCore(dg, thr).core == directedCoreBrute(dg, thr, false));
        }
    }
}

TEST_CASE("pairedCoreCheck on the bridged cliques") {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            edges.push_back({i, j});
            edges.push_back({4 + i, 4 + j});
        }
    auto noBridge = FiniteHypergraph::dense(2, 8, edges);
    Partition parts{{{0, 1, 2, 3}, {4, 5, 6, 7}}};
    CHECK_FALSE(pairedCoreCheck(noBridge, parts, 3).found);
    CHECK_FALSE(pairedCoreBrute(noBridge, parts, 3));

    edges.push_back({0, 4});
    auto bridged = FiniteHypergraph::dense(2, 8, edges);
    auto r = pairedCoreCheck(bridged, parts, 3);
    CHECK(r.found);
    REQUIRE(r.crossingEdge.has_value());
    CHECK(r.crossingEdge->first == 0);
    CHECK(r.crossingEdge->second == 4);
    CHECK(pairedCoreBrute(bridged, parts, 3));

    // d = 0: found iff any edge crosses the partition
    CHECK(pairedCoreCheck(bridged, parts, 0).found);
    CHECK_FALSE(pairedCoreCheck(noBridge, parts, 0).found);

    Partition notAPartition{{{0, 1}, {1, 2}}};
    CHECK_THROWS_AS(pairedCoreCheck(bridged, notAPartition, 1), std::domain_error);
}

TEST_CASE("pairedCoreCheck completeness against brute force") {
    Rng rng(29);
    for (int t = 0; t < 30; ++t) {
        Rng tr = rng.fork(t);
        auto g = randomGraph(tr, 6, 11, 16);
        auto parts = randomPartition(g.vertexCount(), 2, tr);
        if (parts.blockCount() != 2) continue;
        for (int d = 1; d <= 2; ++d)
            CHECK(pairedCoreCheck(g, parts, d).found == pairedCoreBrute(g, parts, d));
    }
}

TEST_CASE("directedPairedCoreCheck") {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < 3; ++i) {
        arcs.emplace_back(i, (i + 1) % 3);
        arcs.emplace_back(3 + i, 3 + (i + 1) % 3);
    }
    Partition parts{{{0, 1, 2}, {3, 4, 5}}};
    auto withArc = arcs;
    withArc.emplace_back(3, 0);  // from side 2 into side 1
    auto d1 = FiniteDigraph::dense(6, withArc);
    auto r = directedPairedCoreCheck(d1, parts, 1);
    CHECK(r.found);
    CHECK(directedPairedCoreBrute(d1, parts, 1));

    auto reversed = arcs;
    reversed.emplace_back(0, 3);  // wrong direction
    auto d2 = FiniteDigraph::dense(6, reversed);
    CHECK_FALSE(directedPairedCoreCheck(d2, parts, 1).found);
    CHECK_FALSE(directedPairedCoreBrute(d2, parts, 1));
    CHECK(directedPairedCoreCheck(d2, parts, 0).found == false);  // no arc from W2 to W1 at all
    CHECK(directedPairedCoreCheck(d1, parts, 0).found);
}

TEST_CASE("maximalPeel rounds") {
    auto p3 = FiniteHypergraph::dense(2, 3, {{0, 1}, {1, 2}});
    auto r1 = maximalPeel(p3, Labeling::natural(LabelTarget::Vertices, {1, 2, 3}));
    CHECK(r1.k == 3);
    CHECK(r1.rounds.blocks[0] == std::vector<int>{2});
    CHECK(r1.rounds.blocks[1] == std::vector<int>{1});
    CHECK(r1.rounds.blocks[2] == std::vector<int>{0});

    auto r2 = maximalPeel(p3, Labeling::natural(LabelTarget::Vertices, {1, 3, 2}));
    CHECK(r2.k == 2);
    CHECK(r2.rounds.blocks[0] == std::vector<int>{1});
    CHECK(r2.rounds.blocks[1] == std::vector<int>{0, 2});

    auto edgeless = FiniteHypergraph::dense(2, 4, {});
    CHECK(maximalPeel(edgeless, Labeling::natural(LabelTarget::Vertices, {2, 1, 4, 3})).k == 1);
}

TEST_CASE("maximalPeel equals the exact longest increasing path") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        Rng tr = rng.fork(t);
        auto g = randomGraph(tr, 3, 9, 14);
        for (int rep = 0; rep < 3; ++rep) {
            auto lab = randomVertexLabeling(g, tr);
            int k = maximalPeel(g, lab).k;
            CHECK(k == longestIncreasingVertexPath(g, lab).length());
            CHECK(k == longestIncreasingVertexPathBrute(g, lab));
            // every vertex in round j has a larger-labeled neighbor one round up
            auto peel = maximalPeel(g, lab);
            auto adj = adjacencyLists(g);
            for (std::size_t j = 1; j < peel.rounds.blocks.size(); ++j)
                for (int v : peel.rounds.blocks[j]) {
                    bool ok = false;
                    for (int u : adj[v])
                        for (int w : peel.rounds.blocks[j - 1])
                            if (u == w && lab.at(u) > lab.at(v)) ok = true;
                    CHECK(ok);
                }
        }
    }
}

TEST_CASE("chiStarUpperBoundSearch") {
    auto c5 = cycle(5);
    auto p3 = chiStarUpperBoundSearch(c5, 3);
    REQUIRE(p3.has_value());
    CHECK(validatePartition(*p3, 5).empty());
    auto blockOf = p3->blockOf(5);
    for (const auto& e : c5.edges) CHECK(blockOf[e[0]] != blockOf[e[1]]);
    CHECK_FALSE(chiStarUpperBoundSearch(c5, 2).has_value());

    auto hg = halfGraph(4);
    auto p2 = chiStarUpperBoundSearch(hg, 2);
    REQUIRE(p2.has_value());
    CHECK(p2->blockCount() == 2);

    // with a back-degree cap of zero nothing with an edge is feasible
    CHECK_FALSE(chiStarUpperBoundSearch(c5, 3, 2000000, 0).has_value());
    CHECK(chiStarUpperBoundSearch(c5, 3, 2000000, 2).has_value());
}

TEST_CASE("twoDistanceGraph") {
    auto k4 = completeHypergraph(2, 4);
    auto t2 = twoDistanceGraph(k4, 2);
    CHECK(t2.edgeCount() == 6);

    auto c5 = cycle(5);
    auto pent = twoDistanceGraph(c5, 1);
    CHECK(pent.edgeCount() == 5);
    std::set<std::set<int>> want{{0, 2}, {1, 3}, {2, 4}, {0, 3}, {1, 4}};
    std::set<std::set<int>> got;
    for (const auto& e : pent.edges) got.insert({e[0], e[1]});
    CHECK(got == want);

    CHECK(twoDistanceGraph(c5, 4).edgeCount() == 0);
}

TEST_CASE("degeneracyColoring blocks are independent and few") {
    Rng rng(37);
    for (int t = 0; t < 20; ++t) {
        Rng tr = rng.fork(t);
        auto g = randomGraph(tr, 4, 10, 15);
        auto p = degeneracyColoring(g, allVerts(g.vertexCount()));
        auto blockOf = p.blockOf(g.vertexCount());
        for (const auto& e : g.edges) CHECK(blockOf[e[0]] != blockOf[e[1]]);
        int d = 1;
        while (!dCore(g, d).core.empty()) ++d;  // first empty threshold
        CHECK(p.blockCount() <= d);
    }
    for (const auto& tree : rootedTreeCatalogue(6)) {
        if (tree.edgeCount() == 0) continue;
        CHECK(degeneracyColoring(tree, allVerts(tree.vertexCount())).blockCount() <= 2);
    }
}

TEST_CASE("acyclicBlockPartition blocks induce acyclic subdigraphs") {
    Rng rng(41);
    for (int t = 0; t < 20; ++t) {
        Rng tr = rng.fork(t);
        auto dg = randomDigraph(tr, 4, 9, 18);
        auto ab = acyclicBlockPartition(dg, allVerts(dg.vertexCount()));
        for (const auto& blk : ab.blocks.blocks) {
            std::set<int> in(blk.begin(), blk.end());
            // within a block every arc runs against the peel position
            for (const auto& [u, v] : dg.arcs)
                if (in.count(u) && in.count(v)) CHECK(ab.peelPosition[v] < ab.peelPosition[u]);
        }
    }
}
