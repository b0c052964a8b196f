#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "incpath/families.hpp"
#include "incpath/model.hpp"

using namespace incpath;

namespace {

std::vector<int> degrees(const FiniteHypergraph& h) {
    std::vector<int> deg(h.vertexCount(), 0);
    for (const auto& e : h.edges)
        for (int v : e) ++deg[v];
    return deg;
}

std::set<std::set<ExternalId>> edgeIdSets(const FiniteHypergraph& h) {
    std::set<std::set<ExternalId>> out;
    for (const auto& e : h.edges) {
        std::set<ExternalId> s;
        for (int v : e) s.insert(h.ids[v]);
        out.insert(std::move(s));
    }
    return out;
}

// expansion(small) must equal the induced substructure of expansion(large) on
// the small expansion's id set
void checkInduced(const FiniteHypergraph& small, const FiniteHypergraph& large) {
    std::set<ExternalId> ids(small.ids.begin(), small.ids.end());
    for (ExternalId id : small.ids) CHECK(large.indexOf(id) >= 0);
    std::set<std::set<ExternalId>> induced;
    for (const auto& e : large.edges) {
        std::set<ExternalId> s;
        bool inside = true;
        for (int v : e) {
            if (!ids.count(large.ids[v])) inside = false;
            s.insert(large.ids[v]);
        }
        if (inside) induced.insert(std::move(s));
    }
    CHECK(edgeIdSets(small) == induced);
}

}  // namespace

TEST_CASE("halfGraph matches the membership rule") {
    auto h1 = halfGraph(1);
    CHECK(h1.edgeCount() == 1);

    auto h3 = halfGraph(3);
    CHECK(h3.edgeCount() == 6);
    // i_x = 2(x-1), f_y = 2(y-1)+1
    auto sets = edgeIdSets(h3);
    CHECK(sets.count({0, 1}));  // i1 f1
    CHECK(sets.count({0, 3}));  // i1 f2
    CHECK(sets.count({0, 5}));  // i1 f3
    CHECK(sets.count({2, 3}));  // i2 f2
    CHECK(sets.count({2, 5}));  // i2 f3
    CHECK(sets.count({4, 5}));  // i3 f3
    auto deg = degrees(h3);
    CHECK(deg[h3.indexOf(5)] == 3);  // f3
    CHECK(deg[h3.indexOf(4)] == 1);  // i3
    CHECK_THROWS_AS(halfGraph(0), std::invalid_argument);
}

TEST_CASE("halfGraph degree law up to n = 100") {
    for (int n : {2, 7, 25, 100}) {
        auto h = halfGraph(n);
        auto deg = degrees(h);
        for (int x = 1; x <= n; ++x) {
            CHECK(deg[h.indexOf(2 * (x - 1))] == n - x + 1);
            CHECK(deg[h.indexOf(2 * (x - 1) + 1)] == x);
        }
    }
}

TEST_CASE("dyadicIndexSet values and partition property") {
    CHECK(dyadicIndexSet(1, 10) == std::vector<int>{1, 3, 5, 7, 9});
    CHECK(dyadicIndexSet(2, 10) == std::vector<int>{2, 6, 10});
    CHECK(dyadicIndexSet(3, 10) == std::vector<int>{4});
    CHECK(dyadicIndexSet(4, 10) == std::vector<int>{8});

    for (int n : {1, 2, 3, 17, 64, 511, 512}) {
        std::vector<int> seen(n + 1, 0);
        for (int i = 1; (1 << (i - 1)) <= n; ++i)
            for (int v : dyadicIndexSet(i, n)) ++seen[v];
        for (int v = 1; v <= n; ++v) CHECK(seen[v] == 1);
    }
    // spot check at a large bound
    std::size_t total = 0;
    int n = 1 << 16;
    for (int i = 1; (1 << (i - 1)) <= n; ++i) total += dyadicIndexSet(i, n).size();
    CHECK(total == static_cast<std::size_t>(n));
}

TEST_CASE("dyadicBipartiteH at n = 2 is the two crossed edges") {
    auto h = dyadicBipartiteH(2);
    CHECK(h.vertexCount() == 4);
    auto sets = edgeIdSets(h);
    CHECK(sets.size() == 2);
    CHECK(sets.count({0, 3}));  // L1 with R2
    CHECK(sets.count({1, 2}));  // R1 with L2
}

TEST_CASE("dyadicBipartiteH is bipartite with disjoint halves") {
    for (int n : {2, 5, 16, 32}) {
        auto h = dyadicBipartiteH(n);
        CHECK(validate(h, false).empty());
        for (const auto& e : h.edges) {
            ExternalId a = h.ids[e[0]], b = h.ids[e[1]];
            CHECK(a % 2 != b % 2);  // joins the L side to the R side
        }
    }
}

TEST_CASE("extendedClique counts and degrees") {
    auto e33 = extendedClique(3, 3);
    CHECK(e33.edgeCount() == 3);
    CHECK(e33.vertexCount() == 6);
    auto deg = degrees(e33);
    auto base = extendedCliqueBase(3, 3);
    for (int v = 0; v < e33.vertexCount(); ++v) {
        bool isBase = std::find(base.begin(), base.end(), v) != base.end();
        CHECK(deg[v] == (isBase ? 2 : 1));
    }

    auto e44 = extendedClique(4, 4);
    CHECK(e44.edgeCount() == 6);
    CHECK(e44.vertexCount() == 16);
    auto deg44 = degrees(e44);
    for (int v : extendedCliqueBase(4, 4)) CHECK(deg44[v] == 3);
    CHECK(validate(e44, true).empty());
}

TEST_CASE("branching tree truncation shape") {
    auto t42 = infiniteBranchingTreeTrunc(4, 2);
    CHECK(t42.edgeCount() == 4);
    CHECK(t42.vertexCount() == 13);
    auto deg = degrees(t42);
    CHECK(deg[0] == 1);  // root
    int deg1 = 0, deg2 = 0;
    for (int v = 0; v < t42.vertexCount(); ++v) (deg[v] == 1 ? deg1 : deg2)++;
    CHECK(deg1 + deg2 == 13);
    CHECK(deg2 == 3);  // the three level-1 non-root vertices

    auto p = infiniteBranchingTreeTrunc(2, 5);
    CHECK(p.edgeCount() == 5);
    CHECK(p.vertexCount() == 6);
}

TEST_CASE("tkTree truncation shape") {
    auto t = tkTree(2, 3);
    CHECK(t.vertexCount() == 13);  // 1 + 3 + 9
    auto star = tkTree(1, 5);
    CHECK(star.vertexCount() == 6);
    CHECK(star.edgeCount() == 5);
    auto degS = degrees(star);
    CHECK(degS[0] == 5);
    // all leaves at equal depth: BFS from the root
    auto big = tkTree(3, 2);
    auto deg = degrees(big);
    std::vector<int> depth(big.vertexCount(), -1);
    depth[0] = 0;
    auto adj = adjacencyLists(big);
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier)
            for (int u : adj[v])
                if (depth[u] == -1) {
                    depth[u] = depth[v] + 1;
                    next.push_back(u);
                }
        frontier = next;
    }
    for (int v = 0; v < big.vertexCount(); ++v)
        if (deg[v] == 1 && v != 0) CHECK(depth[v] == 3);
}

TEST_CASE("completeHypergraph counts") {
    CHECK(completeHypergraph(2, 4).edgeCount() == 6);
    CHECK(completeHypergraph(3, 5).edgeCount() == 10);
    CHECK(completeHypergraph(4, 4).edgeCount() == 1);
    // not simple for k >= 3, n > k
    CHECK(!validate(completeHypergraph(3, 5), true).empty());
    CHECK(validate(completeHypergraph(3, 5), false).empty());
}

TEST_CASE("cLseparationExample shapes") {
    auto a = cLseparationExample(3, 3, 4);
    auto b = extendedClique(3, 4);
    CHECK(edgeIdSets(a) == edgeIdSets(b));  // l = k coincides

    auto c = cLseparationExample(4, 3, 4);
    CHECK(c.edgeCount() == 6);
    CHECK(c.vertexCount() == 16);
    auto deg = degrees(c);
    auto base = cLseparationBase(4, 3, 4);
    std::set<int> baseSet(base.begin(), base.end());
    for (int v = 0; v < c.vertexCount(); ++v)
        if (!baseSet.count(v)) CHECK(deg[v] == 1);

    // l = 2: each base vertex gets its own pendant-extended edge
    auto m = cLseparationExample(3, 2, 4);
    CHECK(m.edgeCount() == 4);
    CHECK(validate(m, true).empty());

    CHECK_THROWS_AS(cLseparationExample(3, 1, 4), std::invalid_argument);
}

TEST_CASE("truncation monotonicity under the identity embedding") {
    for (int n : {2, 3, 5}) {
        checkInduced(halfGraph(n), halfGraph(n + 2));
        checkInduced(dyadicBipartiteH(n), dyadicBipartiteH(n + 3));
        checkInduced(extendedClique(3, n), extendedClique(3, n + 2));
        checkInduced(cLseparationExample(4, 3, n + 1), cLseparationExample(4, 3, n + 3));
        checkInduced(completeHypergraph(2, n), completeHypergraph(2, n + 2));
    }
    checkInduced(infiniteBranchingTreeTrunc(3, 2), infiniteBranchingTreeTrunc(3, 4));
    checkInduced(tkTree(2, 3), tkTree(3, 3));
    checkInduced(completeHypergraph(3, 4), completeHypergraph(3, 6));
}

TEST_CASE("expandFamily dispatch and unknown family") {
    FamilySpec spec{"half-graph", {{"n", 3}}};
    CHECK(expandFamily(spec).edgeCount() == 6);
    FamilySpec bad{"no-such-family", {}};
    CHECK_THROWS_AS(expandFamily(bad), std::invalid_argument);
}
