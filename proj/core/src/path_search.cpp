#include "incpath/path_search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "incpath/rng.hpp"

namespace incpath {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
    const SearchBudget& budget;
    Clock::time_point start = Clock::now();
    long nodes = 0;
    bool exhausted = false;

    bool tick() {
        if (exhausted) return false;
        ++nodes;
        if (nodes > budget.maxNodes) {
            exhausted = true;
            return false;
        }
        if ((nodes & 0x3ff) == 0) {
            double secs = std::chrono::duration<double>(Clock::now() - start).count();
            if (secs > budget.timeLimitSecs) {
                exhausted = true;
                return false;
            }
        }
        return true;
    }
};

void requireLabeling(const Labeling& l, LabelTarget target, int count, const char* who) {
    if (l.target != target) throw std::domain_error(std::string(who) + ": labeling has wrong target");
    auto bad = validateLabeling(l, count);
    if (!bad.empty()) throw std::domain_error(std::string(who) + ": " + bad.front());
}

std::vector<int> byLabelAscending(const Labeling& l, int count) {
    std::vector<int> order(static_cast<std::size_t>(count));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return l.at(a) < l.at(b); });
    return order;
}

}  // namespace

IncreasingWitness longestIncreasingVertexPath(const FiniteHypergraph& g, const Labeling& phi) {
    requireLabeling(phi, LabelTarget::Vertices, g.vertexCount(), "longestIncreasingVertexPath");
    const int n = g.vertexCount();
    auto adj = adjacencyLists(g);
    auto order = byLabelAscending(phi, n);
    std::vector<int> len(static_cast<std::size_t>(n), 0), parent(static_cast<std::size_t>(n), -1);
    int best = -1;
    for (int v : order) {
        len[v] = 1;
        for (int u : adj[v])
            if (phi.at(u) < phi.at(v) && len[u] + 1 > len[v]) {
                len[v] = len[u] + 1;
                parent[v] = u;
            }
        if (best == -1 || len[v] > len[best]) best = v;
    }
    IncreasingWitness w;
    w.kind = WitnessKind::VertexPath;
    if (best >= 0)
        for (int v = best; v != -1; v = parent[v]) w.vertexSeq.push_back(v);
    std::reverse(w.vertexSeq.begin(), w.vertexSeq.end());
    return w;
}

IncreasingWitness longestIncreasingVertexPathD(const FiniteDigraph& d, const Labeling& phi) {
    requireLabeling(phi, LabelTarget::Vertices, d.vertexCount(), "longestIncreasingVertexPathD");
    const int n = d.vertexCount();
    auto in = inLists(d);
    auto order = byLabelAscending(phi, n);
    std::vector<int> len(static_cast<std::size_t>(n), 0), parent(static_cast<std::size_t>(n), -1);
    int best = -1;
    for (int v : order) {
        len[v] = 1;
        for (int u : in[v])
            if (phi.at(u) < phi.at(v) && len[u] + 1 > len[v]) {
                len[v] = len[u] + 1;
                parent[v] = u;
            }
        if (best == -1 || len[v] > len[best]) best = v;
    }
    IncreasingWitness w;
    w.kind = WitnessKind::VertexPath;
    if (best >= 0)
        for (int v = best; v != -1; v = parent[v]) w.vertexSeq.push_back(v);
    std::reverse(w.vertexSeq.begin(), w.vertexSeq.end());
    return w;
}

int longestIncreasingEdgeTrail(const FiniteHypergraph& g, const Labeling& phi) {
    requireLabeling(phi, LabelTarget::Edges, g.edgeCount(), "longestIncreasingEdgeTrail");
    const int n = g.vertexCount();
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    auto order = byLabelAscending(phi, g.edgeCount());
    int best = 0;
    for (int e : order) {
        int u = g.edges[e][0], v = g.edges[e][1];
        int fu = f[u], fv = f[v];
        f[v] = std::max(f[v], fu + 1);
        f[u] = std::max(f[u], fv + 1);
        best = std::max({best, f[u], f[v]});
    }
    return best;
}

namespace {

// Longest increasing edge path by DFS over ascending extensions, with the
// trail relaxation as an admissible bound: suffix[r][v] = longest increasing
// trail starting at v that uses only edges of label rank > r. A branch whose
// current length plus that bound cannot beat the incumbent is cut.
struct EdgePathSearcher {
    const Labeling& phi;
    // (endpoint, label rank exclusive) -> list of (edge, nextVertex)
    std::function<void(int, int, std::vector<std::pair<int, int>>&)> extensions;
    BudgetState bud;
    std::vector<char> usedVertex;
    std::vector<int> rankOfEdge;                  // 0-based rank in ascending label order
    std::vector<std::vector<int>> suffixTrail;    // may be empty when too large to memoize
    std::vector<int> edgeSeq, vertexSeq;
    std::vector<int> bestEdges, bestVerts;

    void dfs(int endpoint, int lastRank) {
        if (edgeSeq.size() > bestEdges.size()) {
            bestEdges = edgeSeq;
            bestVerts = vertexSeq;
        }
        if (!bud.tick()) return;
        if (!suffixTrail.empty() &&
            edgeSeq.size() + static_cast<std::size_t>(suffixTrail[lastRank + 1][endpoint]) <=
                bestEdges.size())
            return;
        std::vector<std::pair<int, int>> exts;
        extensions(endpoint, lastRank, exts);
        for (auto [e, nxt] : exts) {
            if (usedVertex[nxt]) continue;
            usedVertex[nxt] = 1;
            edgeSeq.push_back(e);
            vertexSeq.push_back(nxt);
            dfs(nxt, rankOfEdge[e]);
            vertexSeq.pop_back();
            edgeSeq.pop_back();
            usedVertex[nxt] = 0;
        }
    }
};

// suffix[r][v] for an edge list given as (tail, head) steps; undirected edges
// contribute both directions. suffix[r][v] = longest trail from v using edges
// of rank >= r.
std::vector<std::vector<int>> buildSuffixTrail(int n, int m,
                                               const std::vector<std::vector<std::pair<int, int>>>& steps) {
    if (static_cast<long>(n) * (m + 2) > 4000000) return {};
    std::vector<std::vector<int>> suffix(static_cast<std::size_t>(m + 2),
                                         std::vector<int>(static_cast<std::size_t>(n), 0));
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    for (int r = m - 1; r >= 0; --r) {
        for (auto [from, to] : steps[r]) cur[from] = std::max(cur[from], suffix[r + 1][to] + 1);
        suffix[r] = cur;
    }
    suffix[m + 1] = std::vector<int>(static_cast<std::size_t>(n), 0);
    return suffix;
}

}  // namespace

SearchResult longestIncreasingEdgePath(const FiniteHypergraph& g, const Labeling& phi,
                                       const SearchBudget& budget) {
    requireLabeling(phi, LabelTarget::Edges, g.edgeCount(), "longestIncreasingEdgePath");
    const int n = g.vertexCount();
    const int m = g.edgeCount();
    auto order = byLabelAscending(phi, m);
    std::vector<int> rankOfEdge(static_cast<std::size_t>(m), 0);
    for (int r = 0; r < m; ++r) rankOfEdge[order[r]] = r;
    std::vector<std::vector<std::pair<int, int>>> inc(static_cast<std::size_t>(n));  // (edge, other)
    std::vector<std::vector<std::pair<int, int>>> steps(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        int a = g.edges[e][0], b = g.edges[e][1];
        inc[a].emplace_back(e, b);
        inc[b].emplace_back(e, a);
        steps[rankOfEdge[e]] = {{a, b}, {b, a}};
    }
    for (auto& v : inc)
        std::sort(v.begin(), v.end(),
                  [&](const auto& x, const auto& y) { return phi.at(x.first) < phi.at(y.first); });

    EdgePathSearcher s{phi,
                       {},
                       BudgetState{budget},
                       std::vector<char>(static_cast<std::size_t>(n), 0),
                       rankOfEdge,
                       buildSuffixTrail(n, m, steps),
                       {},
                       {},
                       {},
                       {}};
    s.extensions = [&](int endpoint, int lastRank, std::vector<std::pair<int, int>>& out) {
        for (auto [e, other] : inc[endpoint])
            if (rankOfEdge[e] > lastRank) out.emplace_back(e, other);
    };
    for (int e = 0; e < m; ++e) {
        for (int side = 0; side < 2; ++side) {
            int a = g.edges[e][side], b = g.edges[e][1 - side];
            s.usedVertex[a] = s.usedVertex[b] = 1;
            s.edgeSeq = {e};
            s.vertexSeq = {a, b};
            s.dfs(b, rankOfEdge[e]);
            s.usedVertex[a] = s.usedVertex[b] = 0;
        }
    }
    SearchResult res;
    res.nodesExpanded = s.bud.nodes;
    res.bestLength = static_cast<int>(s.bestEdges.size());
    if (!s.bestEdges.empty()) {
        IncreasingWitness w;
        w.kind = WitnessKind::EdgePath;
        w.edgeSeq = s.bestEdges;
        w.vertexSeq = s.bestVerts;
        res.witness = std::move(w);
    }
    res.status = s.bud.exhausted ? SearchStatus::BudgetExhausted : SearchStatus::Found;
    return res;
}

SearchResult longestIncreasingEdgePathD(const FiniteDigraph& d, const Labeling& phi,
                                        const SearchBudget& budget) {
    requireLabeling(phi, LabelTarget::Edges, d.arcCount(), "longestIncreasingEdgePathD");
    const int n = d.vertexCount();
    const int m = d.arcCount();
    auto order = byLabelAscending(phi, m);
    std::vector<int> rankOfEdge(static_cast<std::size_t>(m), 0);
    for (int r = 0; r < m; ++r) rankOfEdge[order[r]] = r;
    std::vector<std::vector<std::pair<int, int>>> out(static_cast<std::size_t>(n));
    std::vector<std::vector<std::pair<int, int>>> steps(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        out[d.arcs[e].first].emplace_back(e, d.arcs[e].second);
        steps[rankOfEdge[e]] = {{d.arcs[e].first, d.arcs[e].second}};
    }
    for (auto& v : out)
        std::sort(v.begin(), v.end(),
                  [&](const auto& x, const auto& y) { return phi.at(x.first) < phi.at(y.first); });

    EdgePathSearcher s{phi,
                       {},
                       BudgetState{budget},
                       std::vector<char>(static_cast<std::size_t>(n), 0),
                       rankOfEdge,
                       buildSuffixTrail(n, m, steps),
                       {},
                       {},
                       {},
                       {}};
    s.extensions = [&](int endpoint, int lastRank, std::vector<std::pair<int, int>>& res) {
        for (auto [e, head] : out[endpoint])
            if (rankOfEdge[e] > lastRank) res.emplace_back(e, head);
    };
    for (int e = 0; e < m; ++e) {
        auto [u, v] = d.arcs[e];
        if (u == v) continue;
        s.usedVertex[u] = s.usedVertex[v] = 1;
        s.edgeSeq = {e};
        s.vertexSeq = {u, v};
        s.dfs(v, rankOfEdge[e]);
        s.usedVertex[u] = s.usedVertex[v] = 0;
    }
    SearchResult res;
    res.nodesExpanded = s.bud.nodes;
    res.bestLength = static_cast<int>(s.bestEdges.size());
    if (!s.bestEdges.empty()) {
        IncreasingWitness w;
        w.kind = WitnessKind::EdgePath;
        w.edgeSeq = s.bestEdges;
        w.vertexSeq = s.bestVerts;
        res.witness = std::move(w);
    }
    res.status = s.bud.exhausted ? SearchStatus::BudgetExhausted : SearchStatus::Found;
    return res;
}

namespace {

struct LoosePathSearcher {
    const FiniteHypergraph& h;
    const Labeling& phi;
    int targetLen;
    BudgetState bud;
    const std::vector<std::vector<int>>& inc;
    std::vector<char> used;
    std::vector<int> edgeSeq, vertexSeq;
    std::optional<IncreasingWitness> found;

    bool dfs(int lastVertex) {
        if (static_cast<int>(edgeSeq.size()) >= targetLen) {
            IncreasingWitness w;
            w.kind = WitnessKind::LoosePath;
            w.edgeSeq = edgeSeq;
            w.vertexSeq = vertexSeq;
            found = std::move(w);
            return true;
        }
        if (!bud.tick()) return false;
        for (int e : inc[lastVertex]) {
            bool ok = true;
            for (int v : h.edges[e])
                if (v != lastVertex && (used[v] || phi.at(v) < phi.at(lastVertex))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::vector<int> fresh;
            for (int v : h.edges[e])
                if (v != lastVertex) fresh.push_back(v);
            std::sort(fresh.begin(), fresh.end(), [&](int a, int b) { return phi.at(a) < phi.at(b); });
            for (int v : fresh) {
                used[v] = 1;
                vertexSeq.push_back(v);
            }
            edgeSeq.push_back(e);
            if (dfs(fresh.back())) return true;
            edgeSeq.pop_back();
            for (int v : fresh) {
                used[v] = 0;
                vertexSeq.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

SearchResult loosePathSearch(const FiniteHypergraph& h, const Labeling& phi, int targetLen,
                             const SearchBudget& budget) {
    requireLabeling(phi, LabelTarget::Vertices, h.vertexCount(), "loosePathSearch");
    if (targetLen < 1) throw std::invalid_argument("loosePathSearch: targetLen must be >= 1");
    auto inc = buildIncidence(h);
    LoosePathSearcher s{h,  phi, targetLen, BudgetState{budget}, inc,
                        std::vector<char>(static_cast<std::size_t>(h.vertexCount()), 0), {}, {}, {}};
    SearchResult res;
    for (int e = 0; e < h.edgeCount(); ++e) {
        std::vector<int> window(h.edges[e]);
        std::sort(window.begin(), window.end(), [&](int a, int b) { return phi.at(a) < phi.at(b); });
        for (int v : window) s.used[v] = 1;
        s.edgeSeq = {e};
        s.vertexSeq = window;
        bool ok = s.dfs(window.back());
        for (int v : window) s.used[v] = 0;
        if (ok) {
            res.status = SearchStatus::Found;
            res.witness = s.found;
            res.bestLength = targetLen;
            res.nodesExpanded = s.bud.nodes;
            return res;
        }
    }
    res.nodesExpanded = s.bud.nodes;
    res.status = s.bud.exhausted ? SearchStatus::BudgetExhausted : SearchStatus::NoneExhaustive;
    return res;
}

namespace {

struct SkipSearcher {
    const FiniteHypergraph& h;
    const Labeling& phi;
    int targetLen;
    BudgetState bud;
    const std::vector<std::vector<int>>& inc;
    std::vector<char> used;
    std::vector<int> edgeSeq, pivots;
    std::optional<IncreasingWitness> found;

    // pivot = exit vertex of the last edge; the next edge must meet the used
    // set exactly in it.
    bool dfs(int pivot) {
        if (static_cast<int>(edgeSeq.size()) >= targetLen) {
            IncreasingWitness w;
            w.kind = WitnessKind::SkipIncreasingPath;
            w.edgeSeq = edgeSeq;
            w.pivots = pivots;
            std::set<int> vs;
            for (int e : edgeSeq) vs.insert(h.edges[e].begin(), h.edges[e].end());
            w.vertexSeq.assign(vs.begin(), vs.end());
            found = std::move(w);
            return true;
        }
        if (!bud.tick()) return false;
        for (int e : inc[pivot]) {
            bool ok = true;
            for (int v : h.edges[e])
                if (v != pivot && used[v]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int v : h.edges[e])
                if (v != pivot) used[v] = 1;
            edgeSeq.push_back(e);
            for (int next : h.edges[e]) {
                if (phi.at(next) <= phi.at(pivot)) continue;
                pivots.push_back(next);
                if (dfs(next)) return true;
                pivots.pop_back();
            }
            edgeSeq.pop_back();
            for (int v : h.edges[e])
                if (v != pivot) used[v] = 0;
        }
        return false;
    }
};

}  // namespace

SearchResult skipIncreasingSearch(const FiniteHypergraph& h, const Labeling& phi, int targetLen,
                                  const SearchBudget& budget) {
    requireLabeling(phi, LabelTarget::Vertices, h.vertexCount(), "skipIncreasingSearch");
    if (targetLen < 1) throw std::invalid_argument("skipIncreasingSearch: targetLen must be >= 1");
    auto inc = buildIncidence(h);
    SkipSearcher s{h,  phi, targetLen, BudgetState{budget}, inc,
                   std::vector<char>(static_cast<std::size_t>(h.vertexCount()), 0), {}, {}, {}};
    SearchResult res;
    for (int e = 0; e < h.edgeCount(); ++e) {
        for (int v0 : h.edges[e]) {
            for (int v1 : h.edges[e]) {
                if (phi.at(v1) <= phi.at(v0)) continue;
                for (int v : h.edges[e]) s.used[v] = 1;
                s.edgeSeq = {e};
                s.pivots = {v0, v1};
                bool ok = s.dfs(v1);
                for (int v : h.edges[e]) s.used[v] = 0;
                if (ok) {
                    res.status = SearchStatus::Found;
                    res.witness = s.found;
                    res.bestLength = targetLen;
                    res.nodesExpanded = s.bud.nodes;
                    return res;
                }
            }
        }
    }
    res.nodesExpanded = s.bud.nodes;
    res.status = s.bud.exhausted ? SearchStatus::BudgetExhausted : SearchStatus::NoneExhaustive;
    return res;
}

namespace {

struct TreeSearcher {
    const FiniteHypergraph& h;
    const Labeling& lab;
    int depth;
    BudgetState bud;
    const std::vector<std::vector<int>>& inc;
    const std::function<bool(const IncreasingWitness&)>& cb;
    bool stopped = false;

    std::vector<char> usedVertex;
    std::vector<char> usedEdge;
    std::vector<int> edgeSeq, edgeLevel;
    std::vector<int> vertexSeq, vertexLevel;

    bool vertexLabeled() const { return lab.target == LabelTarget::Vertices; }

    // Extends frontier[idx..] at `level`; levelFloor is the max vertex label of
    // the previous level (vertex-labeled) or the max edge label (edge-labeled).
    void extendLevel(const std::vector<int>& frontier, std::size_t idx, int level, int levelFloor,
                     int builtMax, std::vector<int>& newFrontier) {
        if (stopped || !bud.tick()) return;
        if (idx == frontier.size()) {
            if (level == depth) return emit();
            std::vector<int> deeper;
            extendLevel(newFrontier, 0, level + 1, builtMax, builtMax, deeper);
            return;
        }
        int v = frontier[idx];
        for (int e : inc[v]) {
            if (usedEdge[e]) continue;
            bool ok = true;
            for (int u : h.edges[e])
                if (u != v && (usedVertex[u] || (vertexLabeled() && lab.at(u) <= levelFloor))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (!vertexLabeled() && lab.at(e) <= levelFloor) continue;
            usedEdge[e] = 1;
            edgeSeq.push_back(e);
            edgeLevel.push_back(level);
            int newMax = builtMax;
            if (!vertexLabeled()) newMax = std::max(newMax, lab.at(e));
            std::size_t addedVerts = 0;
            for (int u : h.edges[e])
                if (u != v) {
                    usedVertex[u] = 1;
                    vertexSeq.push_back(u);
                    vertexLevel.push_back(level);
                    newFrontier.push_back(u);
                    ++addedVerts;
                    if (vertexLabeled()) newMax = std::max(newMax, lab.at(u));
                }
            extendLevel(frontier, idx + 1, level, levelFloor, newMax, newFrontier);
            for (std::size_t i = 0; i < addedVerts; ++i) {
                usedVertex[vertexSeq.back()] = 0;
                vertexSeq.pop_back();
                vertexLevel.pop_back();
                newFrontier.pop_back();
            }
            edgeSeq.pop_back();
            edgeLevel.pop_back();
            usedEdge[e] = 0;
            if (stopped) return;
        }
    }

    void emit() {
        if (static_cast<int>(*std::max_element(edgeLevel.begin(), edgeLevel.end())) != depth) return;
        IncreasingWitness w;
        w.kind = WitnessKind::BranchingTree;
        w.edgeSeq = edgeSeq;
        w.edgeLevel = edgeLevel;
        w.vertexSeq = vertexSeq;
        w.vertexLevel = vertexLevel;
        if (!cb(w)) stopped = true;
    }

    void run() {
        for (int e = 0; e < h.edgeCount() && !stopped; ++e) {
            std::vector<int> roots;
            if (vertexLabeled()) {
                // the root must carry the minimum label of its edge
                int mn = h.edges[e][0];
                for (int u : h.edges[e])
                    if (lab.at(u) < lab.at(mn)) mn = u;
                roots = {mn};
            } else {
                roots = h.edges[e];
            }
            for (int root : roots) {
                usedEdge[e] = 1;
                edgeSeq = {e};
                edgeLevel = {1};
                vertexSeq.clear();
                vertexLevel.clear();
                std::vector<int> frontier;
                int floorAfter = vertexLabeled() ? INT_MIN : lab.at(e);
                for (int u : h.edges[e]) {
                    usedVertex[u] = 1;
                    vertexSeq.push_back(u);
                    vertexLevel.push_back(u == root ? 0 : 1);
                    if (u != root) {
                        frontier.push_back(u);
                        if (vertexLabeled()) floorAfter = std::max(floorAfter, lab.at(u));
                    }
                }
                if (depth == 1) {
                    emit();
                } else {
                    std::vector<int> newFrontier;
                    extendLevel(frontier, 0, 2, floorAfter, floorAfter, newFrontier);
                }
                for (int u : h.edges[e]) usedVertex[u] = 0;
                usedEdge[e] = 0;
                if (stopped) break;
            }
        }
    }
};

}  // namespace

bool enumerateBranchingTrees(const FiniteHypergraph& h, const Labeling& lab, int depth,
                             const SearchBudget& budget,
                             const std::function<bool(const IncreasingWitness&)>& cb) {
    if (lab.target == LabelTarget::Vertices)
        requireLabeling(lab, LabelTarget::Vertices, h.vertexCount(), "branchingTreeSearch");
    else
        requireLabeling(lab, LabelTarget::Edges, h.edgeCount(), "branchingTreeSearch");
    if (depth < 1) throw std::invalid_argument("branchingTreeSearch: depth must be >= 1");
    auto inc = buildIncidence(h);
    TreeSearcher s{h,
                   lab,
                   depth,
                   BudgetState{budget},
                   inc,
                   cb,
                   false,
                   std::vector<char>(static_cast<std::size_t>(h.vertexCount()), 0),
                   std::vector<char>(static_cast<std::size_t>(h.edgeCount()), 0),
                   {},
                   {},
                   {},
                   {}};
    s.run();
    return !s.bud.exhausted;
}

SearchResult branchingTreeSearch(const FiniteHypergraph& h, const Labeling& lab, int depth,
                                 const SearchBudget& budget) {
    SearchResult res;
    std::optional<IncreasingWitness> found;
    bool complete = enumerateBranchingTrees(h, lab, depth, budget, [&](const IncreasingWitness& w) {
        found = w;
        return false;
    });
    if (found) {
        res.status = SearchStatus::Found;
        res.witness = std::move(found);
        res.bestLength = depth;
    } else {
        res.status = complete ? SearchStatus::NoneExhaustive : SearchStatus::BudgetExhausted;
    }
    return res;
}

namespace {

std::optional<IncreasingWitness> twoSidedCombine(int n, const Labeling& phi,
                                                 const std::vector<std::vector<int>>& negPrev,
                                                 const std::vector<std::vector<int>>& posNext,
                                                 const std::vector<std::pair<int, int>>& crossings,
                                                 int minNeg, int minPos) {
    // negPrev[u]: neighbors usable one step deeper into the negatives from u;
    // posNext[v]: neighbors usable one step higher inside the non-negatives.
    std::vector<int> negLen(static_cast<std::size_t>(n), 0), negPar(static_cast<std::size_t>(n), -1);
    std::vector<int> posLen(static_cast<std::size_t>(n), 0), posPar(static_cast<std::size_t>(n), -1);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return phi.at(a) < phi.at(b); });
    for (int v : order) {
        if (phi.at(v) >= 0) continue;
        negLen[v] = 1;
        for (int u : negPrev[v])
            if (phi.at(u) < phi.at(v) && negLen[u] + 1 > negLen[v]) {
                negLen[v] = negLen[u] + 1;
                negPar[v] = u;
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (phi.at(v) < 0) continue;
        posLen[v] = 1;
        for (int u : posNext[v])
            if (phi.at(u) > phi.at(v) && posLen[u] + 1 > posLen[v]) {
                posLen[v] = posLen[u] + 1;
                posPar[v] = u;
            }
    }
    int bestScore = -1;
    std::pair<int, int> bestCross{-1, -1};
    for (auto [u, v] : crossings) {
        if (negLen[u] < minNeg || posLen[v] < minPos) continue;
        int score = negLen[u] + posLen[v];
        if (score > bestScore) {
            bestScore = score;
            bestCross = {u, v};
        }
    }
    if (bestScore < 0) return std::nullopt;
    IncreasingWitness w;
    w.kind = WitnessKind::TwoSidedPath;
    std::vector<int> neg;
    for (int x = bestCross.first; x != -1; x = negPar[x]) neg.push_back(x);
    w.vertexSeq.assign(neg.rbegin(), neg.rend());
    for (int x = bestCross.second; x != -1; x = posPar[x]) w.vertexSeq.push_back(x);
    return w;
}

}  // namespace

std::optional<IncreasingWitness> twoSidedSearch(const FiniteHypergraph& g, const Labeling& phi,
                                                int minNeg, int minPos) {
    requireLabeling(phi, LabelTarget::Vertices, g.vertexCount(), "twoSidedSearch");
    if (!phi.integerKind) throw std::domain_error("twoSidedSearch: integer labeling required");
    if (minNeg < 1 || minPos < 1)
        throw std::invalid_argument("twoSidedSearch: thresholds must be >= 1");
    const int n = g.vertexCount();
    auto adj = adjacencyLists(g);
    std::vector<std::pair<int, int>> crossings;
    for (const auto& e : g.edges) {
        int a = e[0], b = e[1];
        if (phi.at(a) < 0 && phi.at(b) >= 0) crossings.emplace_back(a, b);
        if (phi.at(b) < 0 && phi.at(a) >= 0) crossings.emplace_back(b, a);
    }
    return twoSidedCombine(n, phi, adj, adj, crossings, minNeg, minPos);
}

std::optional<IncreasingWitness> twoSidedSearchD(const FiniteDigraph& d, const Labeling& phi,
                                                 int minNeg, int minPos) {
    requireLabeling(phi, LabelTarget::Vertices, d.vertexCount(), "twoSidedSearchD");
    if (!phi.integerKind) throw std::domain_error("twoSidedSearchD: integer labeling required");
    if (minNeg < 1 || minPos < 1)
        throw std::invalid_argument("twoSidedSearchD: thresholds must be >= 1");
    const int n = d.vertexCount();
    auto in = inLists(d);
    auto out = outLists(d);
    std::vector<std::pair<int, int>> crossings;
    for (const auto& [u, v] : d.arcs)
        if (phi.at(u) < 0 && phi.at(v) >= 0) crossings.emplace_back(u, v);
    // deeper into the negatives = walking arcs backwards
    return twoSidedCombine(n, phi, in, out, crossings, minNeg, minPos);
}

namespace {

// Vertex orbits of the automorphism group, by complete backtracking over
// adjacency-preserving bijections. Sizes here are <= 9.
std::vector<int> vertexOrbits(int n, const std::vector<std::vector<char>>& adjU,
                              const std::vector<std::vector<char>>& adjD, bool directed) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            for (int i = 0; i < n; ++i) {
                int a = find(i), b = find(image[i]);
                if (a != b) parent[a] = b;
            }
            return;
        }
        for (int img = 0; img < n; ++img) {
            if (taken[img]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (adjU[v][u] != adjU[img][image[u]]) ok = false;
                if (directed && adjD[v][u] != adjD[img][image[u]]) ok = false;
                if (directed && adjD[u][v] != adjD[image[u]][img]) ok = false;
            }
            if (!ok) continue;
            image[v] = img;
            taken[img] = 1;
            rec(v + 1);
            taken[img] = 0;
            image[v] = -1;
        }
    };
    rec(0);
    std::vector<int> orbit(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) orbit[i] = find(i);
    return orbit;
}

}  // namespace

namespace {

struct AdversarialEval {
    std::function<int(const std::vector<int>&)> value;  // labels by object index -> structure length
    int objects;
};

AdversarialResult adversarialCore(const AdversarialEval& eval, LabelTarget target,
                                  const std::vector<int>& orbitReps, AdversarialMode mode,
                                  const SearchBudget& budget, std::uint64_t seed) {
    const int n = eval.objects;
    AdversarialResult res;
    res.statesExamined = 0;
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<int> bestLabels;
    int best = INT_MAX;

    if (mode == AdversarialMode::Exact) {
        // place label 1 on an orbit representative, then all orders of the rest
        for (int rep : orbitReps) {
            std::vector<int> rest;
            for (int i = 0; i < n; ++i)
                if (i != rep) rest.push_back(i);
            std::sort(rest.begin(), rest.end());
            do {
                labels[rep] = 1;
                for (int i = 0; i < static_cast<int>(rest.size()); ++i) labels[rest[i]] = i + 2;
                ++res.statesExamined;
                int v = eval.value(labels);
                if (v < best) {
                    best = v;
                    bestLabels = labels;
                }
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        res.exact = true;
    } else {
        Rng rng(seed);
        long evals = 0;
        while (evals < budget.maxNodes) {
            std::vector<int> perm = rng.permutation(n);
            for (int i = 0; i < n; ++i) labels[perm[i]] = i + 1;
            int cur = eval.value(labels);
            ++evals;
            int stale = 0;
            while (stale < 4 * n && evals < budget.maxNodes) {
                int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                if (a == b) continue;
                std::swap(labels[a], labels[b]);
                int v = eval.value(labels);
                ++evals;
                if (v < cur) {
                    cur = v;
                    stale = 0;
                } else {
                    std::swap(labels[a], labels[b]);
                    ++stale;
                }
            }
            if (cur < best) {
                best = cur;
                bestLabels = labels;
            }
        }
        res.statesExamined = evals;
        res.exact = false;
    }
    res.value = best;
    res.argmin = Labeling::natural(target, bestLabels);
    return res;
}

}  // namespace

AdversarialResult adversarialMin(const FiniteHypergraph& g, StructureKind kind, AdversarialMode mode,
                                 const SearchBudget& budget, std::uint64_t seed) {
    const int n = g.vertexCount();
    if (kind == StructureKind::VertexPath) {
        if (mode == AdversarialMode::Exact && n > 9)
            throw std::invalid_argument("adversarialMin: exact vertex mode capped at |V| <= 9");
        std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                           std::vector<char>(static_cast<std::size_t>(n), 0));
        for (const auto& e : g.edges) adj[e[0]][e[1]] = adj[e[1]][e[0]] = 1;
        std::vector<int> reps;
        if (mode == AdversarialMode::Exact) {
            auto orbit = vertexOrbits(n, adj, adj, false);
            std::set<int> seen;
            for (int i = 0; i < n; ++i)
                if (seen.insert(orbit[i]).second) reps.push_back(i);
        }
        AdversarialEval eval{[&](const std::vector<int>& labels) {
                                 Labeling phi;
                                 phi.target = LabelTarget::Vertices;
                                 phi.labels = labels;
                                 return longestIncreasingVertexPath(g, phi).length();
                             },
                             n};
        return adversarialCore(eval, LabelTarget::Vertices, reps, mode, budget, seed);
    }
    const int m = g.edgeCount();
    if (m == 0) throw std::invalid_argument("adversarialMin: graph has no edges");
    if (mode == AdversarialMode::Exact && m > 8)
        throw std::invalid_argument("adversarialMin: exact edge mode capped at |E| <= 8");
    SearchBudget inner;  // instances at the exact cap are tiny
    AdversarialEval eval{[&](const std::vector<int>& labels) {
                             Labeling phi;
                             phi.target = LabelTarget::Edges;
                             phi.labels = labels;
                             return longestIncreasingEdgePath(g, phi, inner).bestLength;
                         },
                         m};
    // edge orbits are not exploited: label 1 may sit on any edge
    std::vector<int> reps;
    if (mode == AdversarialMode::Exact)
        for (int i = 0; i < m; ++i) reps.push_back(i);
    return adversarialCore(eval, LabelTarget::Edges, reps, mode, budget, seed);
}

AdversarialResult adversarialMinD(const FiniteDigraph& d, StructureKind kind, AdversarialMode mode,
                                  const SearchBudget& budget, std::uint64_t seed) {
    const int n = d.vertexCount();
    if (kind == StructureKind::VertexPath) {
        if (mode == AdversarialMode::Exact && n > 9)
            throw std::invalid_argument("adversarialMinD: exact vertex mode capped at |V| <= 9");
        std::vector<std::vector<char>> arc(static_cast<std::size_t>(n),
                                           std::vector<char>(static_cast<std::size_t>(n), 0));
        for (const auto& [u, v] : d.arcs) arc[u][v] = 1;
        std::vector<int> reps;
        if (mode == AdversarialMode::Exact) {
            auto orbit = vertexOrbits(n, arc, arc, true);
            std::set<int> seen;
            for (int i = 0; i < n; ++i)
                if (seen.insert(orbit[i]).second) reps.push_back(i);
        }
        AdversarialEval eval{[&](const std::vector<int>& labels) {
                                 Labeling phi;
                                 phi.target = LabelTarget::Vertices;
                                 phi.labels = labels;
                                 return longestIncreasingVertexPathD(d, phi).length();
                             },
                             n};
        return adversarialCore(eval, LabelTarget::Vertices, reps, mode, budget, seed);
    }
    const int m = d.arcCount();
    if (mode == AdversarialMode::Exact && m > 8)
        throw std::invalid_argument("adversarialMinD: exact edge mode capped at |E| <= 8");
    if (m == 0) throw std::invalid_argument("adversarialMinD: digraph has no arcs");
    SearchBudget inner;
    std::vector<int> reps;
    if (mode == AdversarialMode::Exact)
        for (int i = 0; i < m; ++i) reps.push_back(i);
    AdversarialEval eval{[&](const std::vector<int>& labels) {
                             Labeling phi;
                             phi.target = LabelTarget::Edges;
                             phi.labels = labels;
                             return longestIncreasingEdgePathD(d, phi, inner).bestLength;
                         },
                         m};
    return adversarialCore(eval, LabelTarget::Edges, reps, mode, budget, seed);
}

SearchResult greedyTreeExtend(const FiniteHypergraph& h, const Labeling& phi,
                              const std::vector<int>& coreSet, int depth) {
    requireLabeling(phi, LabelTarget::Vertices, h.vertexCount(), "greedyTreeExtend");
    if (depth < 1) throw std::invalid_argument("greedyTreeExtend: depth must be >= 1");
    SearchResult res;
    std::vector<char> inCore(static_cast<std::size_t>(h.vertexCount()), 0);
    for (int v : coreSet) inCore[v] = 1;

    auto sortedLabels = [&](const std::vector<int>& verts) {
        std::vector<int> ls;
        for (int v : verts) ls.push_back(phi.at(v));
        std::sort(ls.begin(), ls.end());
        return ls;
    };

    // root edge: fully inside the core, minimal sorted label vector
    int rootEdge = -1;
    std::vector<int> rootKey;
    for (int e = 0; e < h.edgeCount(); ++e) {
        bool ok = true;
        for (int v : h.edges[e])
            if (!inCore[v]) ok = false;
        if (!ok) continue;
        auto key = sortedLabels(h.edges[e]);
        if (rootEdge == -1 || key < rootKey) {
            rootEdge = e;
            rootKey = key;
        }
    }
    if (rootEdge == -1) {
        res.status = SearchStatus::NoneExhaustive;
        return res;
    }

    auto inc = buildIncidence(h);
    std::vector<char> usedVertex(static_cast<std::size_t>(h.vertexCount()), 0);
    std::vector<char> usedEdge(static_cast<std::size_t>(h.edgeCount()), 0);
    IncreasingWitness w;
    w.kind = WitnessKind::BranchingTree;

    int root = h.edges[rootEdge][0];
    for (int v : h.edges[rootEdge])
        if (phi.at(v) < phi.at(root)) root = v;
    usedEdge[rootEdge] = 1;
    w.edgeSeq = {rootEdge};
    w.edgeLevel = {1};
    int levelMax = INT_MIN;
    std::vector<int> frontier;
    for (int v : h.edges[rootEdge]) {
        usedVertex[v] = 1;
        w.vertexSeq.push_back(v);
        w.vertexLevel.push_back(v == root ? 0 : 1);
        levelMax = std::max(levelMax, phi.at(v));
        if (v != root) frontier.push_back(v);
    }
    std::sort(frontier.begin(), frontier.end(), [&](int a, int b) { return phi.at(a) < phi.at(b); });

    for (int level = 2; level <= depth; ++level) {
        std::vector<int> nextFrontier;
        int nextMax = levelMax;
        for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
            int v = frontier[fi];
            int bestEdge = -1;
            std::vector<int> bestKey;
            for (int e : inc[v]) {
                if (usedEdge[e]) continue;
                bool ok = true;
                std::vector<int> fresh;
                for (int u : h.edges[e]) {
                    if (u == v) continue;
                    if (usedVertex[u] || !inCore[u] || phi.at(u) <= levelMax) {
                        ok = false;
                        break;
                    }
                    fresh.push_back(u);
                }
                if (!ok) continue;
                auto key = sortedLabels(fresh);
                if (bestEdge == -1 || key < bestKey) {
                    bestEdge = e;
                    bestKey = key;
                }
            }
            if (bestEdge == -1) {
                res.status = SearchStatus::NoneExhaustive;
                res.stuckFrontier.assign(frontier.begin() + static_cast<std::ptrdiff_t>(fi),
                                         frontier.end());
                return res;
            }
            usedEdge[bestEdge] = 1;
            w.edgeSeq.push_back(bestEdge);
            w.edgeLevel.push_back(level);
            for (int u : h.edges[bestEdge])
                if (u != v) {
                    usedVertex[u] = 1;
                    w.vertexSeq.push_back(u);
                    w.vertexLevel.push_back(level);
                    nextFrontier.push_back(u);
                    nextMax = std::max(nextMax, phi.at(u));
                }
        }
        levelMax = nextMax;
        frontier = std::move(nextFrontier);
        std::sort(frontier.begin(), frontier.end(), [&](int a, int b) { return phi.at(a) < phi.at(b); });
    }
    res.status = SearchStatus::Found;
    res.bestLength = depth;
    res.witness = std::move(w);
    return res;
}

namespace {

std::optional<IncreasingWitness> twoSidedBuild(const Labeling& phi, const std::vector<int>& w1,
                                               const std::vector<int>& w2, std::pair<int, int> crossing,
                                               const std::function<const std::vector<int>&(int)>& upNbrs,
                                               const std::function<const std::vector<int>&(int)>& dnNbrs) {
    std::set<int> s1(w1.begin(), w1.end()), s2(w2.begin(), w2.end());
    if (!s1.count(crossing.first) || !s2.count(crossing.second)) return std::nullopt;
    std::vector<int> pos{crossing.first};
    while (true) {
        int cur = pos.back();
        int next = -1;
        for (int u : upNbrs(cur))
            if (s1.count(u) && phi.at(u) > phi.at(cur) && (next == -1 || phi.at(u) < phi.at(next)))
                next = u;
        if (next == -1) break;
        pos.push_back(next);
    }
    std::vector<int> neg{crossing.second};
    while (true) {
        int cur = neg.back();
        int next = -1;
        for (int u : dnNbrs(cur))
            if (s2.count(u) && phi.at(u) < phi.at(cur) && (next == -1 || phi.at(u) > phi.at(next)))
                next = u;
        if (next == -1) break;
        neg.push_back(next);
    }
    IncreasingWitness w;
    w.kind = WitnessKind::TwoSidedPath;
    w.vertexSeq.assign(neg.rbegin(), neg.rend());
    w.vertexSeq.insert(w.vertexSeq.end(), pos.begin(), pos.end());
    return w;
}

}  // namespace

std::optional<IncreasingWitness> buildTwoSidedViaCores(const FiniteHypergraph& g, const Labeling& phi,
                                                       const std::vector<int>& w1,
                                                       const std::vector<int>& w2,
                                                       std::pair<int, int> crossing) {
    requireLabeling(phi, LabelTarget::Vertices, g.vertexCount(), "buildTwoSidedViaCores");
    auto adj = adjacencyLists(g);
    auto nbrs = [&](int v) -> const std::vector<int>& { return adj[v]; };
    return twoSidedBuild(phi, w1, w2, crossing, nbrs, nbrs);
}

std::optional<IncreasingWitness> buildTwoSidedViaCoresD(const FiniteDigraph& d, const Labeling& phi,
                                                        const std::vector<int>& w1,
                                                        const std::vector<int>& w2,
                                                        std::pair<int, int> crossing) {
    requireLabeling(phi, LabelTarget::Vertices, d.vertexCount(), "buildTwoSidedViaCoresD");
    auto out = outLists(d);
    auto in = inLists(d);
    auto up = [&](int v) -> const std::vector<int>& { return out[v]; };
    auto dn = [&](int v) -> const std::vector<int>& { return in[v]; };
    return twoSidedBuild(phi, w1, w2, crossing, up, dn);
}

void enumerateIncreasingEdgePaths(
    const FiniteHypergraph& g, const Labeling& phi,
    const std::function<bool(const std::vector<int>& edges, const std::vector<int>& verts)>& cb) {
    requireLabeling(phi, LabelTarget::Edges, g.edgeCount(), "enumerateIncreasingEdgePaths");
    const int n = g.vertexCount();
    std::vector<std::vector<std::pair<int, int>>> inc(static_cast<std::size_t>(n));
    for (int e = 0; e < g.edgeCount(); ++e) {
        inc[g.edges[e][0]].emplace_back(e, g.edges[e][1]);
        inc[g.edges[e][1]].emplace_back(e, g.edges[e][0]);
    }
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<int> edges, verts;
    bool stop = false;
    // emitSelf: single-edge paths are reported once, not once per orientation
    std::function<void(int, int, bool)> dfs = [&](int endpoint, int lastLabel, bool emitSelf) {
        if (stop) return;
        if (emitSelf && !cb(edges, verts)) {
            stop = true;
            return;
        }
        for (auto [e, other] : inc[endpoint]) {
            if (stop) return;
            if (phi.at(e) <= lastLabel || used[other]) continue;
            used[other] = 1;
            edges.push_back(e);
            verts.push_back(other);
            dfs(other, phi.at(e), true);
            verts.pop_back();
            edges.pop_back();
            used[other] = 0;
        }
    };
    for (int e = 0; e < g.edgeCount() && !stop; ++e)
        for (int side = 0; side < 2 && !stop; ++side) {
            int a = g.edges[e][side], b = g.edges[e][1 - side];
            used[a] = used[b] = 1;
            edges = {e};
            verts = {a, b};
            dfs(b, phi.at(e), side == 0);
            used[a] = used[b] = 0;
        }
}

void enumerateIncreasingLoosePaths(const FiniteHypergraph& h, const Labeling& phiEdges,
                                   const std::function<bool(const std::vector<int>& edges)>& cb) {
    requireLabeling(phiEdges, LabelTarget::Edges, h.edgeCount(), "enumerateIncreasingLoosePaths");
    auto inc = buildIncidence(h);
    std::vector<char> used(static_cast<std::size_t>(h.vertexCount()), 0);
    std::vector<int> seq;
    bool stop = false;
    // prevShared: the connector into lastEdge; reusing it would intersect an
    // earlier edge, which a loose path forbids.
    std::function<void(int, int)> dfs = [&](int lastEdge, int prevShared) {
        if (stop) return;
        if (!cb(seq)) {
            stop = true;
            return;
        }
        for (int shared : h.edges[lastEdge]) {
            if (shared == prevShared) continue;
            for (int f : inc[shared]) {
                if (stop) return;
                if (phiEdges.at(f) <= phiEdges.at(lastEdge)) continue;
                int overlap = 0;
                bool freshOk = true;
                for (int v : h.edges[f]) {
                    if (v == shared) continue;
                    if (used[v]) {
                        freshOk = false;
                        break;
                    }
                }
                for (int v : h.edges[lastEdge])
                    for (int u : h.edges[f])
                        if (u == v) ++overlap;
                if (!freshOk || overlap != 1) continue;
                for (int v : h.edges[f])
                    if (v != shared) used[v] = 1;
                seq.push_back(f);
                dfs(f, shared);
                seq.pop_back();
                for (int v : h.edges[f])
                    if (v != shared) used[v] = 0;
            }
        }
    };
    for (int e = 0; e < h.edgeCount() && !stop; ++e) {
        for (int v : h.edges[e]) used[v] = 1;
        seq = {e};
        dfs(e, -1);
        for (int v : h.edges[e]) used[v] = 0;
    }
}

}  // namespace incpath
