#include "incpath/labeling_synth.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "incpath/peeling.hpp"

namespace incpath {

namespace {

void requireClean(const FiniteHypergraph& h, bool simple, const char* who) {
    auto bad = validate(h, simple);
    if (!bad.empty()) throw std::domain_error(std::string(who) + ": " + bad.front());
}

void requireOrdering(const Ordering& o, int n, const char* who) {
    if (o.size() != n) throw std::domain_error(std::string(who) + ": ordering size mismatch");
}

// Ladder rank realizing E_1 < E_3 < E_2 < E_5 < E_4 < ...: every odd block
// sits below both adjacent even blocks.
int ladderRank(int block) {
    if (block == 1) return 0;
    if (block % 2 == 0) return block;
    return block - 2;
}

// Distance blocks + ladder labels over an abstract edge adjacency. Component 0
// is the seed's; other components (by minimum edge id) stack below it.
struct LadderOut {
    std::vector<int> block;      // 1-based within component
    std::vector<int> component;  // 0 = seed component
    std::vector<int> labels;     // natural labels 1..m
    int maxBlock = 0;
};

LadderOut ladderLabels(int m, const std::vector<std::vector<int>>& edgeAdj, int seedEdge) {
    LadderOut out;
    out.block.assign(static_cast<std::size_t>(m), 0);
    out.component.assign(static_cast<std::size_t>(m), -1);
    out.labels.assign(static_cast<std::size_t>(m), 0);

    auto bfs = [&](int seed, int comp) {
        std::queue<int> q;
        q.push(seed);
        out.component[seed] = comp;
        out.block[seed] = 1;
        while (!q.empty()) {
            int e = q.front();
            q.pop();
            out.maxBlock = std::max(out.maxBlock, out.block[e]);
            for (int f : edgeAdj[e])
                if (out.component[f] == -1) {
                    out.component[f] = comp;
                    out.block[f] = out.block[e] + 1;
                    q.push(f);
                }
        }
    };
    int comps = 0;
    if (m > 0) bfs(seedEdge, comps++);
    for (int e = 0; e < m; ++e)
        if (out.component[e] == -1) bfs(e, comps++);

    // label ranges: components comps-1, ..., 1 from the bottom, seed on top
    std::vector<std::vector<int>> perComp(static_cast<std::size_t>(comps));
    for (int e = 0; e < m; ++e) perComp[out.component[e]].push_back(e);
    int next = 1;
    for (int c = comps - 1; c >= 0; --c) {
        auto edges = perComp[c];
        std::sort(edges.begin(), edges.end(), [&](int a, int b) {
            int ra = ladderRank(out.block[a]), rb = ladderRank(out.block[b]);
            if (ra != rb) return ra < rb;
            return a < b;
        });
        for (int e : edges) out.labels[e] = next++;
    }
    return out;
}

std::vector<std::vector<int>> sharedVertexAdjacency(const FiniteHypergraph& h) {
    auto inc = buildIncidence(h);
    std::vector<std::set<int>> nbr(static_cast<std::size_t>(h.edgeCount()));
    for (const auto& edgesAt : inc)
        for (int e : edgesAt)
            for (int f : edgesAt)
                if (e != f) nbr[e].insert(f);
    std::vector<std::vector<int>> adj;
    adj.reserve(nbr.size());
    for (auto& s : nbr) adj.emplace_back(s.begin(), s.end());
    return adj;
}

}  // namespace

EdgeExtrema computeEdgeExtrema(const FiniteHypergraph& h, const Ordering& baseOrder,
                               const Ordering& prec) {
    requireOrdering(baseOrder, h.vertexCount(), "computeEdgeExtrema");
    requireOrdering(prec, h.vertexCount(), "computeEdgeExtrema");
    EdgeExtrema x;
    const int m = h.edgeCount();
    x.least.resize(static_cast<std::size_t>(m));
    x.secondLeast.resize(static_cast<std::size_t>(m));
    x.precMax.resize(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        std::vector<int> vs = h.edges[e];
        std::sort(vs.begin(), vs.end(), [&](int a, int b) { return baseOrder.less(a, b); });
        x.least[e] = vs[0];
        x.secondLeast[e] = vs.size() > 1 ? vs[1] : vs[0];
        int pm = vs[0];
        for (int v : vs)
            if (prec.less(pm, v)) pm = v;
        x.precMax[e] = pm;
    }
    return x;
}

BlockAlternatingResult blockAlternating(const FiniteHypergraph& h, int seedEdge) {
    requireClean(h, false, "blockAlternating");
    if (seedEdge < 0 || seedEdge >= h.edgeCount())
        throw std::domain_error("blockAlternating: seed edge absent");
    auto ladder = ladderLabels(h.edgeCount(), sharedVertexAdjacency(h), seedEdge);
    BlockAlternatingResult r;
    r.labels = Labeling::natural(LabelTarget::Edges, ladder.labels);
    r.blockOfEdge = std::move(ladder.block);
    r.componentOfEdge = std::move(ladder.component);
    r.maxBlock = ladder.maxBlock;
    return r;
}

FiniteHypergraph starReduction(const FiniteHypergraph& h, const Ordering& prec) {
    requireClean(h, false, "starReduction");
    requireOrdering(prec, h.vertexCount(), "starReduction");
    FiniteHypergraph g;
    g.k = 2;
    g.ids = h.ids;
    std::set<std::pair<int, int>> seen;
    for (const auto& e : h.edges) {
        int center = e[0];
        for (int v : e)
            if (prec.less(v, center)) center = v;
        for (int v : e) {
            if (v == center) continue;
            auto key = std::minmax(center, v);
            if (seen.insert({key.first, key.second}).second) g.edges.push_back({center, v});
        }
    }
    return g;
}

TypeSplitResult typeSplitHyperedge(const FiniteHypergraph& h, const Ordering& baseOrder,
                                   const Ordering& prec) {
    requireClean(h, true, "typeSplitHyperedge");
    requireOrdering(baseOrder, h.vertexCount(), "typeSplitHyperedge");
    requireOrdering(prec, h.vertexCount(), "typeSplitHyperedge");
    const int m = h.edgeCount();
    TypeSplitResult r;
    r.extrema = computeEdgeExtrema(h, baseOrder, prec);
    r.isTypeII.assign(static_cast<std::size_t>(m), 0);
    r.blockOfEdge.assign(static_cast<std::size_t>(m), 0);
    std::vector<int> typeI, typeII;
    for (int e = 0; e < m; ++e) {
        if (r.extrema.least[e] == r.extrema.precMax[e]) {
            r.isTypeII[e] = 1;
            typeII.push_back(e);
        } else {
            typeI.push_back(e);
        }
    }

    std::vector<int> gamma(static_cast<std::size_t>(m), 0);
    int next = 1;
    if (!typeI.empty()) {
        FiniteHypergraph hI;
        hI.k = h.k;
        hI.ids = h.ids;
        for (int e : typeI) hI.edges.push_back(h.edges[e]);
        auto ladder = ladderLabels(static_cast<int>(typeI.size()), sharedVertexAdjacency(hI), 0);
        std::vector<int> order(typeI.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return ladder.labels[a] < ladder.labels[b]; });
        for (int idx : order) {
            gamma[typeI[idx]] = next++;
            r.blockOfEdge[typeI[idx]] = ladder.block[idx];
        }
    }
    // psi: s(e) ascending in the base order, ell(e) descending in prec, id
    std::sort(typeII.begin(), typeII.end(), [&](int a, int b) {
        int sa = r.extrema.secondLeast[a], sb = r.extrema.secondLeast[b];
        if (sa != sb) return baseOrder.less(sa, sb);
        int la = r.extrema.least[a], lb = r.extrema.least[b];
        if (la != lb) return prec.less(lb, la);
        return a < b;  // unreachable for distinct edges of a simple hypergraph
    });
    for (int e : typeII) gamma[e] = next++;
    r.gamma = Labeling::natural(LabelTarget::Edges, gamma);
    return r;
}

Labeling chiStarLabeling(const FiniteHypergraph& g, const Partition& parts) {
    requireClean(g, false, "chiStarLabeling");
    auto bad = validatePartition(parts, g.vertexCount());
    if (!bad.empty()) throw std::domain_error("chiStarLabeling: " + bad.front());
    auto blockOf = parts.blockOf(g.vertexCount());
    for (const auto& e : g.edges)
        if (blockOf[e[0]] == blockOf[e[1]])
            throw std::domain_error("chiStarLabeling: block " + std::to_string(blockOf[e[0]] + 1) +
                                    " is not independent");
    std::vector<int> labels(static_cast<std::size_t>(g.vertexCount()), 0);
    int next = 1;
    for (const auto& blk : parts.blocks) {
        std::vector<int> vs(blk);
        std::sort(vs.begin(), vs.end());
        for (int v : vs) labels[v] = next++;
    }
    return Labeling::natural(LabelTarget::Vertices, labels);
}

namespace {

ZMatchingResult zMatchingCore(int m, const std::function<std::pair<int, int>(int)>& endpoints,
                              LabelTarget target) {
    ZMatchingResult r;
    std::set<int> saturated;
    for (int e = 0; e < m; ++e) {
        auto [a, b] = endpoints(e);
        if (saturated.count(a) || saturated.count(b)) continue;
        saturated.insert(a);
        saturated.insert(b);
        r.matching.push_back(e);
    }
    std::set<int> inM(r.matching.begin(), r.matching.end());
    std::vector<int> labels(static_cast<std::size_t>(m), 0);
    int negCount = m - static_cast<int>(r.matching.size());
    int nextNeg = -(negCount - 1);
    int nextPos = 1;
    for (int e = 0; e < m; ++e)
        labels[e] = inM.count(e) ? nextPos++ : nextNeg++;
    r.labels = Labeling::integers(target, labels);
    return r;
}

}  // namespace

ZMatchingResult zMatchingEdge(const FiniteHypergraph& g) {
    requireClean(g, false, "zMatchingEdge");
    if (g.edgeCount() == 0) throw std::domain_error("zMatchingEdge: graph has no edges");
    return zMatchingCore(
        g.edgeCount(), [&](int e) { return std::make_pair(g.edges[e][0], g.edges[e][1]); },
        LabelTarget::Edges);
}

ZMatchingResult zMatchingArc(const FiniteDigraph& d) {
    if (d.arcCount() == 0) throw std::domain_error("zMatchingArc: digraph has no arcs");
    return zMatchingCore(
        d.arcCount(), [&](int e) { return d.arcs[e]; }, LabelTarget::Edges);
}

BoundedOrder boundedIncreasingOrder(const FiniteHypergraph& g, const std::vector<int>& subset) {
    BoundedOrder out;
    if (subset.empty()) return out;
    Partition blocks = degeneracyColoring(g, subset);
    out.bound = blocks.blockCount();
    for (const auto& blk : blocks.blocks)
        for (int v : blk) out.ascending.push_back(v);
    return out;
}

BoundedOrder boundedIncreasingOrderD(const FiniteDigraph& dg, const std::vector<int>& subset,
                                     bool reverseSense) {
    BoundedOrder out;
    if (subset.empty()) return out;
    FiniteDigraph work = dg;
    if (reverseSense)
        for (auto& [u, v] : work.arcs) std::swap(u, v);
    AcyclicBlocks ab = acyclicBlockPartition(work, subset);
    out.bound = ab.blocks.blockCount();
    for (const auto& blk : ab.blocks.blocks) {
        std::vector<int> vs(blk);
        // within a block arcs run against the peel position, so ordering by it
        // leaves no increasing arc inside the block
        std::sort(vs.begin(), vs.end(), [&](int a, int b) {
            return reverseSense ? ab.peelPosition[a] > ab.peelPosition[b]
                                : ab.peelPosition[a] < ab.peelPosition[b];
        });
        for (int v : vs) out.ascending.push_back(v);
    }
    return out;
}

namespace {

std::vector<int> setMinus(const std::vector<int>& all, const std::vector<int>& sub) {
    std::set<int> s(sub.begin(), sub.end());
    std::vector<int> out;
    for (int v : all)
        if (!s.count(v)) out.push_back(v);
    return out;
}

Labeling assembleTwoSidedLabels(int n, const std::vector<int>& w1, const std::vector<int>& u1asc,
                                const std::vector<int>& w2, const std::vector<int>& u2asc) {
    // V2 fills -|V2|..-1 with U2 at the bottom; V1 fills 0..|V1|-1 with W1
    // low. Keeping every V2 label strictly negative makes the sign split
    // coincide with the partition, so the certificate bounds are exactly the
    // two-sided search thresholds.
    std::vector<int> labels(static_cast<std::size_t>(n), kNoLabel);
    int v2size = static_cast<int>(w2.size() + u2asc.size());
    int next = -v2size;
    for (int v : u2asc) labels[v] = next++;
    std::vector<int> w2sorted(w2);
    std::sort(w2sorted.begin(), w2sorted.end());
    for (int v : w2sorted) labels[v] = next++;
    next = 0;
    std::vector<int> w1sorted(w1);
    std::sort(w1sorted.begin(), w1sorted.end());
    for (int v : w1sorted) labels[v] = next++;
    for (int v : u1asc) labels[v] = next++;
    return Labeling::integers(LabelTarget::Vertices, labels);
}

}  // namespace

ZTwoSidedResult zTwoSidedVertex(const FiniteHypergraph& g, const Partition& parts, int d) {
    ZTwoSidedResult r;
    auto pcc = pairedCoreCheck(g, parts, d);
    if (pcc.found) {
        r.refused = true;
        r.crossing = pcc.crossingEdge;
        return r;
    }
    r.w1 = pcc.w1;
    r.w2 = pcc.w2;
    r.u1 = setMinus(parts.blocks[0], pcc.w1);
    r.u2 = setMinus(parts.blocks[1], pcc.w2);
    auto b1 = boundedIncreasingOrder(g, r.u1);
    auto b2 = boundedIncreasingOrder(g, r.u2);
    r.posBound = b1.bound;
    r.negBound = b2.bound;  // an undirected decreasing path is an increasing path reversed
    r.labels = assembleTwoSidedLabels(g.vertexCount(), r.w1, b1.ascending, r.w2, b2.ascending);
    return r;
}

ZTwoSidedResult zTwoSidedVertexD(const FiniteDigraph& dg, const Partition& parts, int d) {
    ZTwoSidedResult r;
    auto pcc = directedPairedCoreCheck(dg, parts, d);
    if (pcc.found) {
        r.refused = true;
        r.crossing = pcc.crossingEdge;
        return r;
    }
    r.w1 = pcc.w1;
    r.w2 = pcc.w2;
    r.u1 = setMinus(parts.blocks[0], pcc.w1);
    r.u2 = setMinus(parts.blocks[1], pcc.w2);
    auto b1 = boundedIncreasingOrderD(dg, r.u1, false);
    // the negative side of a two-sided path, read forward, is an increasing
    // directed path inside U2; U2 has an empty d-in-core, so the in-degree
    // peel (= out-peel of the reversed digraph) keeps the bound at most d
    auto b2 = boundedIncreasingOrderD(dg, r.u2, true);
    r.posBound = b1.bound;
    r.negBound = b2.bound;
    r.labels = assembleTwoSidedLabels(dg.vertexCount(), r.w1, b1.ascending, r.w2, b2.ascending);
    return r;
}

MergeState mergeOrdering(const Partition& blocks, const std::vector<Ordering>& perBlockOrder,
                         const FiniteDigraph& adjacency) {
    const int n = adjacency.vertexCount();
    auto bad = validatePartition(blocks, n);
    if (!bad.empty()) throw std::domain_error("mergeOrdering: " + bad.front());
    if (static_cast<int>(perBlockOrder.size()) != blocks.blockCount())
        throw std::domain_error("mergeOrdering: one ordering per block required");
    for (int j = 0; j < blocks.blockCount(); ++j)
        if (perBlockOrder[j].size() != static_cast<int>(blocks.blocks[j].size()))
            throw std::domain_error("mergeOrdering: block ordering size mismatch");

    MergeState st;
    st.blocks = blocks;
    auto blockOf0 = blocks.blockOf(n);
    std::vector<int> h(static_cast<std::size_t>(n));  // 1-based block index
    for (int v = 0; v < n; ++v) h[v] = blockOf0[v] + 1;
    std::vector<int> rankInBlock(static_cast<std::size_t>(n), 0);
    st.perBlockRank.resize(blocks.blocks.size());
    for (int j = 0; j < blocks.blockCount(); ++j) {
        st.perBlockRank[j] = perBlockOrder[j].rank;
        for (std::size_t i = 0; i < blocks.blocks[j].size(); ++i)
            rankInBlock[blocks.blocks[j][i]] = perBlockOrder[j].rank[i];
    }

    auto out = outLists(adjacency);
    using VSet = std::set<int>;
    auto rOp = [&](const VSet& m) {
        VSet res = m;
        for (int x : m)
            for (int y : out[x])
                if (h[x] < h[y]) res.insert(y);
        return res;
    };
    auto rRestrict = [&](const VSet& m, int k) {
        VSet res;
        for (int x : m)
            if (h[x] <= k) res.insert(x);
        return res;
    };
    auto uOp = [&](const VSet& m) {
        VSet res;
        for (int x : m)
            for (int y = 0; y < n; ++y)
                if (h[y] == h[x] && rankInBlock[y] <= rankInBlock[x]) res.insert(y);
        return res;
    };

    st.q.push_back({});
    st.p.push_back({});
    st.kSeq.push_back(0);
    VSet q;  // current Q_n
    for (int step = 1; step <= n; ++step) {
        VSet x(q);
        x.insert(step - 1);  // v_step
        VSet rx = rOp(x);
        int k = 0;
        for (int v : rx) k = std::max(k, h[v]);
        VSet p = x;
        for (int it = 0; it < k; ++it) p = uOp(rRestrict(rOp(p), k));
        q = uOp(rOp(p));
        st.kSeq.push_back(k);
        st.p.emplace_back(p.begin(), p.end());
        st.q.emplace_back(q.begin(), q.end());
    }

    std::vector<int> qidx(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < st.q.size(); ++i) {
            if (std::binary_search(st.q[i].begin(), st.q[i].end(), v)) {
                qidx[v] = static_cast<int>(i);
                break;
            }
        }
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (qidx[a] != qidx[b]) return qidx[a] < qidx[b];
        if (h[a] != h[b]) return h[a] > h[b];
        return rankInBlock[a] < rankInBlock[b];
    });
    st.result = Ordering::fromSequence(order);
    return st;
}

MergeState mergeOrderingUndirected(const Partition& blocks,
                                   const std::vector<Ordering>& perBlockOrder,
                                   const FiniteHypergraph& adjacency) {
    requireClean(adjacency, false, "mergeOrdering");
    FiniteDigraph d;
    d.ids = adjacency.ids;
    for (const auto& e : adjacency.edges) {
        d.arcs.emplace_back(e[0], e[1]);
        d.arcs.emplace_back(e[1], e[0]);
    }
    return mergeOrdering(blocks, perBlockOrder, d);
}

ArcSplitResult arcSplitLabeling(const FiniteDigraph& d, const Ordering& baseOrder,
                                     const Ordering& prec) {
    requireOrdering(baseOrder, d.vertexCount(), "arcSplitLabeling");
    requireOrdering(prec, d.vertexCount(), "arcSplitLabeling");
    const int m = d.arcCount();
    ArcSplitResult r;
    r.inL.assign(static_cast<std::size_t>(m), 0);
    r.blockOfL.assign(static_cast<std::size_t>(m), 0);
    r.kIndexOf.assign(static_cast<std::size_t>(m), -1);
    std::vector<int> lArcs, rest;
    for (int e = 0; e < m; ++e) {
        auto [u, v] = d.arcs[e];
        int lo = baseOrder.less(u, v) ? u : v;
        int hi = lo == u ? v : u;
        if (prec.less(lo, hi)) {
            r.inL[e] = 1;
            lArcs.push_back(e);
        } else {
            r.kIndexOf[e] = hi;
            rest.push_back(e);
        }
    }

    std::vector<int> gamma(static_cast<std::size_t>(m), 0);
    int next = 1;
    if (!lArcs.empty()) {
        // follow adjacency: one arc can continue the other
        std::vector<std::vector<int>> adj(lArcs.size());
        for (std::size_t i = 0; i < lArcs.size(); ++i)
            for (std::size_t j = 0; j < lArcs.size(); ++j) {
                if (i == j) continue;
                auto [ui, vi] = d.arcs[lArcs[i]];
                auto [uj, vj] = d.arcs[lArcs[j]];
                if (vi == uj || vj == ui) adj[i].push_back(static_cast<int>(j));
            }
        auto ladder = ladderLabels(static_cast<int>(lArcs.size()), adj, 0);
        std::vector<int> order(lArcs.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return ladder.labels[a] < ladder.labels[b]; });
        for (int idx : order) {
            gamma[lArcs[idx]] = next++;
            r.blockOfL[lArcs[idx]] = ladder.block[idx];
        }
    }
    // K blocks ascend with the base order of their index vertex; within one
    // block psi grows as ell falls in prec
    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
        int ia = r.kIndexOf[a], ib = r.kIndexOf[b];
        if (ia != ib) return baseOrder.less(ia, ib);
        auto ell = [&](int e) {
            auto [u, v] = d.arcs[e];
            return baseOrder.less(u, v) ? u : v;
        };
        int la = ell(a), lb = ell(b);
        if (la != lb) return prec.less(lb, la);
        return a < b;  // a 2-cycle pair shares ell; the tiebreak is harmless
    });
    for (int e : rest) gamma[e] = next++;
    r.gamma = Labeling::natural(LabelTarget::Edges, gamma);
    return r;
}

// ---------------------------------------------------------------------------
// audits

namespace {

struct MinMax {
    int mn = INT_MAX, mx = INT_MIN;
    void add(int x) {
        mn = std::min(mn, x);
        mx = std::max(mx, x);
    }
};

}  // namespace

std::vector<std::string> auditBlockAlternating(const FiniteHypergraph& h,
                                               const BlockAlternatingResult& r) {
    std::vector<std::string> out;
    const int m = h.edgeCount();
    auto adj = sharedVertexAdjacency(h);
    for (int e = 0; e < m; ++e)
        for (int f : adj[e]) {
            if (r.componentOfEdge[e] != r.componentOfEdge[f]) {
                out.push_back("incident edges in different components");
                continue;
            }
            if (std::abs(r.blockOfEdge[e] - r.blockOfEdge[f]) > 1)
                out.push_back("incident edges more than one block apart");
            // P1: after an even block the path cannot leave it
            if (r.blockOfEdge[e] % 2 == 0 && r.labels.at(f) > r.labels.at(e) &&
                r.blockOfEdge[f] != r.blockOfEdge[e])
                out.push_back("even-block absorption violated at edges " + std::to_string(e) + "," +
                              std::to_string(f));
        }
    // the two displayed label constraints, per component
    std::map<std::pair<int, int>, MinMax> byBlock;
    for (int e = 0; e < m; ++e) byBlock[{r.componentOfEdge[e], r.blockOfEdge[e]}].add(r.labels.at(e));
    for (const auto& [key, mm] : byBlock) {
        auto [comp, block] = key;
        if (block % 2 == 1) {
            auto above = byBlock.find({comp, block + 1});
            if (above != byBlock.end() && mm.mx >= above->second.mn)
                out.push_back("odd block not below its even successor");
            if (block >= 3) {
                auto below = byBlock.find({comp, block - 1});
                if (below != byBlock.end() && mm.mx >= below->second.mn)
                    out.push_back("odd block not below its even predecessor");
            }
        }
    }
    return out;
}

std::vector<std::string> auditTypeSplit(const FiniteHypergraph& h, const Ordering& baseOrder,
                                        const Ordering& prec, const TypeSplitResult& r) {
    std::vector<std::string> out;
    const int m = h.edgeCount();
    auto x = computeEdgeExtrema(h, baseOrder, prec);
    MinMax typeIRange, typeIIRange;
    for (int e = 0; e < m; ++e) {
        bool typeII = x.least[e] == x.precMax[e];
        if (typeII != static_cast<bool>(r.isTypeII[e]))
            out.push_back("edge " + std::to_string(e) + " misclassified");
        (typeII ? typeIIRange : typeIRange).add(r.gamma.at(e));
    }
    if (typeIRange.mx != INT_MIN && typeIIRange.mn != INT_MAX && typeIRange.mx >= typeIIRange.mn)
        out.push_back("some Type I label is not below all Type II labels");
    for (int e = 0; e < m; ++e) {
        if (!r.isTypeII[e]) continue;
        for (int f = 0; f < m; ++f) {
            if (!r.isTypeII[f] || e == f) continue;
            if (baseOrder.less(x.secondLeast[e], x.secondLeast[f]) &&
                r.gamma.at(e) >= r.gamma.at(f))
                out.push_back("psi rule (s ascending) violated");
            if (x.secondLeast[e] == x.secondLeast[f] && prec.less(x.least[e], x.least[f]) &&
                r.gamma.at(e) <= r.gamma.at(f))
                out.push_back("psi rule (ell descending) violated");
        }
    }
    // branch descent: consecutive Type II edges meeting in ell(e) or s(e)
    for (int e = 0; e < m; ++e) {
        if (!r.isTypeII[e]) continue;
        for (int f = 0; f < m; ++f) {
            if (!r.isTypeII[f] || e == f || r.gamma.at(f) <= r.gamma.at(e)) continue;
            std::vector<int> common;
            for (int v : h.edges[e])
                for (int u : h.edges[f])
                    if (u == v) common.push_back(v);
            if (common.size() != 1) continue;
            int v = common[0];
            if (v != x.least[e] && v != x.secondLeast[e]) continue;
            if (prec.less(x.least[e], x.least[f]))
                out.push_back("ell-descent violated between edges " + std::to_string(e) + "," +
                              std::to_string(f));
        }
    }
    return out;
}

namespace {

std::vector<std::string> auditZMatchingCore(int m,
                                            const std::function<std::pair<int, int>(int)>& endpoints,
                                            const ZMatchingResult& r) {
    std::vector<std::string> out;
    std::set<int> inM(r.matching.begin(), r.matching.end());
    for (int e = 0; e < m; ++e) {
        bool pos = r.labels.at(e) > 0;
        if (pos != (inM.count(e) > 0)) out.push_back("positive labels are not exactly the matching");
    }
    std::set<int> touched;
    for (int e : r.matching) {
        auto [a, b] = endpoints(e);
        if (touched.count(a) || touched.count(b)) out.push_back("matching edges are incident");
        touched.insert(a);
        touched.insert(b);
    }
    // maximality: every edge meets a saturated vertex
    for (int e = 0; e < m; ++e) {
        auto [a, b] = endpoints(e);
        if (!touched.count(a) && !touched.count(b))
            out.push_back("matching not maximal at edge " + std::to_string(e));
    }
    return out;
}

}  // namespace

std::vector<std::string> auditZMatching(const FiniteHypergraph& g, const ZMatchingResult& r) {
    return auditZMatchingCore(
        g.edgeCount(), [&](int e) { return std::make_pair(g.edges[e][0], g.edges[e][1]); }, r);
}

std::vector<std::string> auditZMatchingD(const FiniteDigraph& d, const ZMatchingResult& r) {
    return auditZMatchingCore(
        d.arcCount(), [&](int e) { return d.arcs[e]; }, r);
}

std::vector<std::string> auditMergeState(const FiniteDigraph& adjacency, const MergeState& st) {
    std::vector<std::string> out;
    const int n = adjacency.vertexCount();
    auto blockOf0 = st.blocks.blockOf(n);
    std::vector<int> h(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) h[v] = blockOf0[v] + 1;
    std::vector<int> rankInBlock(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < st.blocks.blockCount(); ++j)
        for (std::size_t i = 0; i < st.blocks.blocks[j].size(); ++i)
            rankInBlock[st.blocks.blocks[j][i]] = st.perBlockRank[j][i];

    auto inQ = [&](int step, int v) {
        return std::binary_search(st.q[step].begin(), st.q[step].end(), v);
    };
    auto inP = [&](int step, int v) {
        return std::binary_search(st.p[step].begin(), st.p[step].end(), v);
    };
    const int steps = static_cast<int>(st.q.size()) - 1;
    if (!st.q.empty() && !st.q[0].empty()) out.push_back("Q_0 must be empty");
    for (int i = 1; i <= steps; ++i) {
        if (st.kSeq[i] < st.kSeq[i - 1]) out.push_back("k sequence decreased");
        for (int v : st.q[i - 1])
            if (!inQ(i, v)) out.push_back("Q sets not increasing");
        // window membership: a Q member whose block height fits under k_i
        // must already sit in P_i
        for (int v : st.q[i])
            if (h[v] <= st.kSeq[i] && !inP(i, v))
                out.push_back("window membership fails at step " + std::to_string(i));
    }
    if (steps >= 1 && static_cast<int>(st.q[steps].size()) != n)
        out.push_back("final Q does not cover V");

    // arc window rule: an arc (x,y) with h(x) <= k_n < h(y) forces x after y
    for (const auto& [x, y] : adjacency.arcs)
        for (int i = 1; i <= steps; ++i)
            if (h[x] <= st.kSeq[i] && st.kSeq[i] < h[y] && !st.result.less(y, x))
                out.push_back("arc window rule fails at step " + std::to_string(i));

    // restriction of the merged order to each block is the block order
    for (int j = 0; j < st.blocks.blockCount(); ++j) {
        const auto& blk = st.blocks.blocks[j];
        for (std::size_t a = 0; a < blk.size(); ++a)
            for (std::size_t b = 0; b < blk.size(); ++b)
                if (rankInBlock[blk[a]] < rankInBlock[blk[b]] &&
                    !st.result.less(blk[a], blk[b]))
                    out.push_back("merged order does not restrict to the block order");
    }
    return out;
}

std::vector<std::string> auditArcSplit(const FiniteDigraph& d, const Ordering& baseOrder,
                                        const Ordering& prec, const ArcSplitResult& r) {
    std::vector<std::string> out;
    const int m = d.arcCount();
    auto ell = [&](int e) {
        auto [u, v] = d.arcs[e];
        return baseOrder.less(u, v) ? u : v;
    };
    MinMax lRange, restRange;
    for (int e = 0; e < m; ++e) {
        auto [u, v] = d.arcs[e];
        int lo = baseOrder.less(u, v) ? u : v;
        int hi = lo == u ? v : u;
        bool inL = prec.less(lo, hi);
        if (inL != static_cast<bool>(r.inL[e])) out.push_back("arc misclassified");
        (inL ? lRange : restRange).add(r.gamma.at(e));
    }
    if (lRange.mx != INT_MIN && restRange.mn != INT_MAX && lRange.mx >= restRange.mn)
        out.push_back("some L label is not below all E\\L labels");
    // K block order and the within-block psi rule
    for (int e = 0; e < m; ++e) {
        if (r.inL[e]) continue;
        for (int f = 0; f < m; ++f) {
            if (r.inL[f] || e == f) continue;
            if (r.kIndexOf[e] != r.kIndexOf[f]) {
                if (baseOrder.less(r.kIndexOf[e], r.kIndexOf[f]) && r.gamma.at(e) >= r.gamma.at(f))
                    out.push_back("K block order violated");
            } else if (ell(e) != ell(f)) {
                if (prec.less(ell(e), ell(f)) && r.gamma.at(e) <= r.gamma.at(f))
                    out.push_back("psi rule within a K block violated");
            }
        }
    }
    // consecutive-arc descent on gamma-increasing pairs in E\L, and no
    // return into L
    for (int e = 0; e < m; ++e) {
        for (int f = 0; f < m; ++f) {
            if (e == f) continue;
            auto [u, v] = d.arcs[e];
            auto [v2, w] = d.arcs[f];
            if (v != v2 || u == w) continue;
            if (r.gamma.at(f) <= r.gamma.at(e)) continue;
            if (!r.inL[e] && r.inL[f])
                out.push_back("increasing step returns from E\\L into L");
            if (!r.inL[e] && !r.inL[f] && prec.less(ell(e), ell(f)))
                out.push_back("consecutive-arc descent violated at arcs " + std::to_string(e) + "," +
                              std::to_string(f));
        }
    }
    return out;
}

}  // namespace incpath
