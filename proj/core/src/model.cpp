#include "incpath/model.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace incpath {

namespace {

std::string idStr(const std::vector<ExternalId>& ids, int pos) {
    return std::to_string(ids[static_cast<std::size_t>(pos)]);
}

std::unordered_map<ExternalId, int> indexMap(const std::vector<ExternalId>& ids) {
    std::unordered_map<ExternalId, int> m;
    m.reserve(ids.size());
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) m.emplace(ids[i], i);
    return m;
}

}  // namespace

FiniteHypergraph FiniteHypergraph::dense(int k, int n, std::vector<std::vector<int>> edges) {
    FiniteHypergraph h;
    h.k = k;
    h.ids.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) h.ids[i] = i;
    h.edges = std::move(edges);
    return h;
}

FiniteHypergraph FiniteHypergraph::fromExternal(int k, std::vector<ExternalId> ids,
                                                const std::vector<std::vector<ExternalId>>& rawEdges) {
    FiniteHypergraph h;
    h.k = k;
    h.ids = std::move(ids);
    auto index = indexMap(h.ids);
    if (index.size() != h.ids.size()) throw std::domain_error("duplicate vertex id in vertex list");
    h.edges.reserve(rawEdges.size());
    for (const auto& e : rawEdges) {
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (ExternalId v : e) {
            auto it = index.find(v);
            if (it == index.end())
                throw std::domain_error("edge references unknown vertex id " + std::to_string(v));
            mapped.push_back(it->second);
        }
        h.edges.push_back(std::move(mapped));
    }
    return h;
}

int FiniteHypergraph::indexOf(ExternalId id) const {
    for (int i = 0; i < vertexCount(); ++i)
        if (ids[i] == id) return i;
    return -1;
}

FiniteDigraph FiniteDigraph::dense(int n, std::vector<std::pair<int, int>> arcs) {
    FiniteDigraph d;
    d.ids.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d.ids[i] = i;
    d.arcs = std::move(arcs);
    return d;
}

FiniteDigraph FiniteDigraph::fromExternal(std::vector<ExternalId> ids,
                                          const std::vector<std::pair<ExternalId, ExternalId>>& rawArcs) {
    FiniteDigraph d;
    d.ids = std::move(ids);
    auto index = indexMap(d.ids);
    if (index.size() != d.ids.size()) throw std::domain_error("duplicate vertex id in vertex list");
    d.arcs.reserve(rawArcs.size());
    for (const auto& [u, v] : rawArcs) {
        auto iu = index.find(u);
        auto iv = index.find(v);
        if (iu == index.end() || iv == index.end())
            throw std::domain_error("arc references unknown vertex id");
        d.arcs.emplace_back(iu->second, iv->second);
    }
    return d;
}

int FiniteDigraph::indexOf(ExternalId id) const {
    for (int i = 0; i < vertexCount(); ++i)
        if (ids[i] == id) return i;
    return -1;
}

std::vector<std::string> validate(const FiniteHypergraph& h, bool requireSimple,
                                  std::optional<int> maxCoDegree) {
    std::vector<std::string> out;
    const int n = h.vertexCount();
    std::vector<std::vector<int>> sorted;
    sorted.reserve(h.edges.size());
    for (int e = 0; e < h.edgeCount(); ++e) {
        const auto& edge = h.edges[e];
        if (static_cast<int>(edge.size()) != h.k)
            out.push_back("edge " + std::to_string(e) + ": has " + std::to_string(edge.size()) +
                          " vertices, expected k=" + std::to_string(h.k));
        std::vector<int> s;
        for (int v : edge) {
            if (v < 0 || v >= n) {
                out.push_back("edge " + std::to_string(e) + ": vertex position out of range");
                continue;
            }
            s.push_back(v);
        }
        std::sort(s.begin(), s.end());
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i] == s[i - 1])
                out.push_back("edge " + std::to_string(e) + ": repeated vertex " + idStr(h.ids, s[i]));
        sorted.push_back(std::move(s));
    }
    // duplicates via canonical keys
    std::vector<int> byKey(static_cast<std::size_t>(h.edgeCount()));
    for (int e = 0; e < h.edgeCount(); ++e) byKey[e] = e;
    std::sort(byKey.begin(), byKey.end(), [&](int a, int b) {
        return sorted[a] != sorted[b] ? sorted[a] < sorted[b] : a < b;
    });
    for (std::size_t i = 1; i < byKey.size(); ++i)
        if (!sorted[byKey[i]].empty() && sorted[byKey[i]] == sorted[byKey[i - 1]])
            out.push_back("edges " + std::to_string(byKey[i - 1]) + ", " + std::to_string(byKey[i]) +
                          ": duplicate");
    if (requireSimple || maxCoDegree) {
        // first edge seen per vertex pair, and the pair's co-degree
        std::map<std::pair<int, int>, std::pair<int, int>> pairInfo;  // pair -> (firstEdge, count)
        for (int e = 0; e < h.edgeCount(); ++e) {
            const auto& s = sorted[e];
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    if (s[i] == s[j]) continue;
                    auto [it, fresh] = pairInfo.try_emplace({s[i], s[j]}, e, 1);
                    if (!fresh) {
                        if (requireSimple && sorted[it->second.first] != sorted[e])
                            out.push_back("edges " + std::to_string(it->second.first) + ", " +
                                          std::to_string(e) + ": share {" + idStr(h.ids, s[i]) +
                                          ", " + idStr(h.ids, s[j]) + "}");
                        ++it->second.second;
                    }
                }
        }
        if (maxCoDegree)
            for (const auto& [pr, info] : pairInfo)
                if (info.second > *maxCoDegree)
                    out.push_back("vertices " + idStr(h.ids, pr.first) + ", " +
                                  idStr(h.ids, pr.second) + ": co-degree " +
                                  std::to_string(info.second) + " exceeds bound " +
                                  std::to_string(*maxCoDegree));
    }
    return out;
}

std::vector<std::string> validateDigraph(const FiniteDigraph& d) {
    std::vector<std::string> out;
    const int n = d.vertexCount();
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < d.arcCount(); ++i) {
        auto [u, v] = d.arcs[i];
        if (u < 0 || u >= n || v < 0 || v >= n) {
            out.push_back("arc " + std::to_string(i) + ": endpoint out of range");
            continue;
        }
        if (u == v) out.push_back("arc " + std::to_string(i) + ": self-loop at " + idStr(d.ids, u));
        if (!seen.insert({u, v}).second)
            out.push_back("arc " + std::to_string(i) + ": duplicate (" + idStr(d.ids, u) + ", " +
                          idStr(d.ids, v) + ")");
    }
    return out;
}

std::vector<std::vector<int>> buildIncidence(const FiniteHypergraph& h) {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(h.vertexCount()));
    for (int e = 0; e < h.edgeCount(); ++e)
        for (int v : h.edges[e]) inc[v].push_back(e);
    return inc;
}

std::vector<std::vector<int>> adjacencyLists(const FiniteHypergraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertexCount()));
    for (const auto& e : g.edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    return adj;
}

std::vector<std::vector<int>> outLists(const FiniteDigraph& d) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(d.vertexCount()));
    for (const auto& [u, v] : d.arcs) out[u].push_back(v);
    return out;
}

std::vector<std::vector<int>> inLists(const FiniteDigraph& d) {
    std::vector<std::vector<int>> in(static_cast<std::size_t>(d.vertexCount()));
    for (const auto& [u, v] : d.arcs) in[v].push_back(u);
    return in;
}

int Labeling::domainSize() const {
    int c = 0;
    for (int x : labels)
        if (x != kNoLabel) ++c;
    return c;
}

int Labeling::lo() const {
    int m = INT_MAX;
    for (int x : labels)
        if (x != kNoLabel) m = std::min(m, x);
    return m;
}

int Labeling::hi() const {
    int m = INT_MIN;
    for (int x : labels)
        if (x != kNoLabel) m = std::max(m, x);
    return m;
}

namespace {

std::vector<std::string> checkLabelShape(const Labeling& l) {
    std::vector<std::string> out;
    std::vector<int> present;
    for (int x : l.labels)
        if (x != kNoLabel) present.push_back(x);
    std::sort(present.begin(), present.end());
    for (std::size_t i = 1; i < present.size(); ++i)
        if (present[i] == present[i - 1]) {
            out.push_back("label " + std::to_string(present[i]) + " used twice");
            return out;
        }
    if (present.empty()) return out;
    if (!l.integerKind) {
        if (present.front() != 1 ||
            present.back() != static_cast<int>(present.size()))
            out.push_back("natural labeling is not a bijection onto 1..m");
        return out;
    }
    // Integer kind: negatives (if any) run contiguously up to -1, and
    // non-negatives (if any) run contiguously from 0 or 1. Restriction of an
    // interval keeps the sign classes, so a gap may exist only at 0.
    std::vector<int> neg, nonneg;
    for (int x : present) (x < 0 ? neg : nonneg).push_back(x);
    if (!neg.empty() && (neg.back() != -1 || neg.front() != -static_cast<int>(neg.size())))
        out.push_back("negative labels are not a contiguous run ending at -1");
    if (!nonneg.empty()) {
        int start = nonneg.front();
        if (start != 0 && start != 1)
            out.push_back("non-negative labels do not start at 0 or 1");
        else if (nonneg.back() != start + static_cast<int>(nonneg.size()) - 1)
            out.push_back("non-negative labels are not contiguous");
    }
    return out;
}

}  // namespace

Labeling Labeling::natural(LabelTarget t, std::vector<int> labels) {
    Labeling l;
    l.target = t;
    l.integerKind = false;
    l.labels = std::move(labels);
    auto bad = checkLabelShape(l);
    if (!bad.empty()) throw std::invalid_argument("bad natural labeling: " + bad.front());
    return l;
}

Labeling Labeling::integers(LabelTarget t, std::vector<int> labels) {
    Labeling l;
    l.target = t;
    l.integerKind = true;
    l.labels = std::move(labels);
    auto bad = checkLabelShape(l);
    if (!bad.empty()) throw std::invalid_argument("bad integer labeling: " + bad.front());
    return l;
}

std::vector<std::string> validateLabeling(const Labeling& l, int objectCount) {
    std::vector<std::string> out;
    if (static_cast<int>(l.labels.size()) != objectCount)
        out.push_back("labeling covers " + std::to_string(l.labels.size()) + " objects, host has " +
                      std::to_string(objectCount));
    auto shape = checkLabelShape(l);
    out.insert(out.end(), shape.begin(), shape.end());
    return out;
}

Labeling restrictLabeling(const Labeling& l, const std::vector<int>& subset) {
    for (int obj : subset)
        if (obj < 0 || obj >= static_cast<int>(l.labels.size()) || !l.has(obj))
            throw std::domain_error("restrictLabeling: object outside labeling domain");
    std::vector<int> ordered(subset);
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
    std::sort(ordered.begin(), ordered.end(), [&](int a, int b) { return l.at(a) < l.at(b); });

    Labeling r;
    r.target = l.target;
    r.integerKind = l.integerKind;
    r.labels.assign(l.labels.size(), kNoLabel);
    if (!l.integerKind) {
        int next = 1;
        for (int obj : ordered) r.labels[obj] = next++;
        return r;
    }
    int negCount = 0;
    for (int obj : ordered)
        if (l.at(obj) < 0) ++negCount;
    int nextNeg = -negCount;
    int nextPos = 1;
    for (int obj : ordered) {
        int old = l.at(obj);
        if (old < 0)
            r.labels[obj] = nextNeg++;
        else if (old == 0)
            r.labels[obj] = 0;
        else
            r.labels[obj] = nextPos++;
    }
    return r;
}

Ordering Ordering::identity(int n) {
    Ordering o;
    o.rank.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) o.rank[i] = i + 1;
    return o;
}

Ordering Ordering::fromSequence(const std::vector<int>& ascending) {
    Ordering o;
    o.rank.assign(ascending.size(), 0);
    for (int i = 0; i < static_cast<int>(ascending.size()); ++i) o.rank[ascending[i]] = i + 1;
    for (int r : o.rank)
        if (r == 0) throw std::invalid_argument("ordering sequence does not cover every object");
    return o;
}

std::vector<int> Ordering::ascendingSequence() const {
    std::vector<int> seq(rank.size());
    for (int i = 0; i < size(); ++i) seq[rank[i] - 1] = i;
    return seq;
}

Ordering Ordering::reversed() const {
    Ordering o;
    const int m = size();
    o.rank.resize(rank.size());
    for (int i = 0; i < m; ++i) o.rank[i] = m + 1 - rank[i];
    return o;
}

std::vector<int> Partition::blockOf(int n) const {
    std::vector<int> b(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < blockCount(); ++j)
        for (int v : blocks[j]) b[v] = j;
    return b;
}

std::vector<std::string> validatePartition(const Partition& p, int n) {
    std::vector<std::string> out;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (const auto& blk : p.blocks)
        for (int v : blk) {
            if (v < 0 || v >= n) {
                out.push_back("partition: vertex position out of range");
                return out;
            }
            ++count[v];
        }
    for (int v = 0; v < n; ++v) {
        if (count[v] == 0) out.push_back("partition: vertex " + std::to_string(v) + " uncovered");
        if (count[v] > 1) out.push_back("partition: vertex " + std::to_string(v) + " in two blocks");
    }
    return out;
}

const char* witnessKindName(WitnessKind k) {
    switch (k) {
        case WitnessKind::VertexPath: return "vertex-path";
        case WitnessKind::EdgePath: return "edge-path";
        case WitnessKind::LoosePath: return "loose-path";
        case WitnessKind::SkipIncreasingPath: return "skip-increasing-path";
        case WitnessKind::TwoSidedPath: return "two-sided-path";
        case WitnessKind::BranchingTree: return "branching-tree";
    }
    return "unknown";
}

int IncreasingWitness::length() const {
    switch (kind) {
        case WitnessKind::VertexPath:
        case WitnessKind::TwoSidedPath:
            return static_cast<int>(vertexSeq.size());
        default:
            return static_cast<int>(edgeSeq.size());
    }
}

namespace {

bool allDistinct(const std::vector<int>& v) {
    std::set<int> s(v.begin(), v.end());
    return s.size() == v.size();
}

bool adjacentIn(const FiniteHypergraph& g, int a, int b) {
    for (const auto& e : g.edges)
        if (e.size() == 2 && ((e[0] == a && e[1] == b) || (e[0] == b && e[1] == a))) return true;
    return false;
}

void checkIncreasingVertexLabels(const IncreasingWitness& w, const Labeling& l,
                                 std::vector<std::string>& out) {
    for (std::size_t i = 1; i < w.vertexSeq.size(); ++i)
        if (l.at(w.vertexSeq[i - 1]) >= l.at(w.vertexSeq[i]))
            out.push_back("labels not strictly increasing at step " + std::to_string(i));
}

std::vector<std::string> validateBranchingTree(const IncreasingWitness& w, const FiniteHypergraph& h,
                                               const Labeling& l) {
    std::vector<std::string> out;
    const int t = static_cast<int>(w.edgeSeq.size());
    if (t == 0) return {"branching tree: empty"};
    if (w.edgeLevel.size() != w.edgeSeq.size() || w.vertexLevel.size() != w.vertexSeq.size())
        return {"branching tree: level maps missing"};
    if (!allDistinct(w.edgeSeq)) out.push_back("branching tree: repeated edge");
    if (!allDistinct(w.vertexSeq)) out.push_back("branching tree: repeated vertex");

    int depth = 0;
    for (int lv : w.edgeLevel) depth = std::max(depth, lv);
    std::map<int, int> vertexLevel;
    for (std::size_t i = 0; i < w.vertexSeq.size(); ++i) vertexLevel[w.vertexSeq[i]] = w.vertexLevel[i];

    int roots = 0;
    for (auto [v, lv] : vertexLevel)
        if (lv == 0) ++roots;
    if (roots != 1) out.push_back("branching tree: expected exactly one root vertex");

    // degree within the tree, and level consistency edge-by-edge
    std::map<int, int> degree;
    std::vector<int> levelEdgeCount(static_cast<std::size_t>(depth) + 1, 0);
    for (int i = 0; i < t; ++i) {
        int e = w.edgeSeq[i];
        int lv = w.edgeLevel[i];
        if (lv < 1 || lv > depth) {
            out.push_back("branching tree: bad edge level");
            continue;
        }
        ++levelEdgeCount[lv];
        int older = 0, newer = 0;
        for (int v : h.edges[e]) {
            ++degree[v];
            auto it = vertexLevel.find(v);
            if (it == vertexLevel.end()) {
                out.push_back("branching tree: edge uses vertex outside the witness");
                continue;
            }
            if (it->second == lv - 1)
                ++older;
            else if (it->second == lv)
                ++newer;
            else
                out.push_back("branching tree: vertex level inconsistent with edge level");
        }
        if (older != 1 || newer != h.k - 1)
            out.push_back("branching tree: edge at level " + std::to_string(lv) +
                          " must contain one level-" + std::to_string(lv - 1) + " vertex and k-1 new");
    }
    if (levelEdgeCount[1] != 1) out.push_back("branching tree: exactly one root edge required");
    for (int lv = 1; lv < depth; ++lv) {
        // full branching: every non-root vertex at level < depth extends
        long expected = 1;
        for (int i = 1; i <= lv; ++i) expected *= (h.k - 1);
        if (levelEdgeCount[lv + 1] != expected)
            out.push_back("branching tree: level " + std::to_string(lv + 1) + " is not fully branched");
    }
    for (auto [v, lv] : vertexLevel) {
        int d = degree[v];
        bool leaf = (lv == depth) || (lv == 0);
        if (leaf && d != 1) out.push_back("branching tree: root/leaf vertex with degree != 1");
        if (!leaf && d != 2) out.push_back("branching tree: internal vertex with degree != 2");
    }

    // level monotonicity of labels
    if (l.target == LabelTarget::Vertices) {
        std::map<int, std::pair<int, int>> mm;  // level -> (min,max)
        for (auto [v, lv] : vertexLevel) {
            auto it = mm.find(lv);
            if (it == mm.end())
                mm[lv] = {l.at(v), l.at(v)};
            else {
                it->second.first = std::min(it->second.first, l.at(v));
                it->second.second = std::max(it->second.second, l.at(v));
            }
        }
        for (auto it = mm.begin(); it != mm.end(); ++it) {
            auto nx = std::next(it);
            if (nx != mm.end() && it->second.second >= nx->second.first)
                out.push_back("branching tree: vertex labels not level-monotone between levels " +
                              std::to_string(it->first) + " and " + std::to_string(nx->first));
        }
    } else {
        std::map<int, std::pair<int, int>> mm;
        for (int i = 0; i < t; ++i) {
            int lv = w.edgeLevel[i];
            int lab = l.at(w.edgeSeq[i]);
            auto it = mm.find(lv);
            if (it == mm.end())
                mm[lv] = {lab, lab};
            else {
                it->second.first = std::min(it->second.first, lab);
                it->second.second = std::max(it->second.second, lab);
            }
        }
        for (auto it = mm.begin(); it != mm.end(); ++it) {
            auto nx = std::next(it);
            if (nx != mm.end() && it->second.second >= nx->second.first)
                out.push_back("branching tree: edge labels not level-monotone");
        }
    }
    return out;
}

std::vector<std::string> validateLoose(const IncreasingWitness& w, const FiniteHypergraph& h,
                                       const Labeling& l, bool skipVariant) {
    std::vector<std::string> out;
    const int t = static_cast<int>(w.edgeSeq.size());
    if (t == 0) return {"loose path: empty"};
    std::vector<std::set<int>> sets;
    for (int e : w.edgeSeq) {
        if (e < 0 || e >= h.edgeCount()) return {"loose path: edge index out of range"};
        sets.emplace_back(h.edges[e].begin(), h.edges[e].end());
    }
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            std::vector<int> common;
            std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                                  std::back_inserter(common));
            std::size_t want = (j == i + 1) ? 1 : 0;
            if (common.size() != want)
                out.push_back("loose path: edges " + std::to_string(i) + "," + std::to_string(j) +
                              " overlap in " + std::to_string(common.size()) + " vertices");
        }
    if (skipVariant) {
        if (static_cast<int>(w.pivots.size()) != t + 1) return {"skip path: expected t+1 pivots"};
        for (int i = 0; i < t; ++i) {
            if (!sets[i].count(w.pivots[i]) || !sets[i].count(w.pivots[i + 1]))
                out.push_back("skip path: pivot pair not inside edge " + std::to_string(i));
            if (l.at(w.pivots[i]) >= l.at(w.pivots[i + 1]))
                out.push_back("skip path: pivot labels not increasing at " + std::to_string(i));
        }
        return out;
    }
    // Full loose path: vertexSeq is the global window sequence.
    if (static_cast<int>(w.vertexSeq.size()) != (h.k - 1) * t + 1)
        out.push_back("loose path: vertex sequence has wrong length");
    else {
        if (!allDistinct(w.vertexSeq)) out.push_back("loose path: repeated vertex");
        for (int i = 0; i < t; ++i) {
            std::set<int> window(w.vertexSeq.begin() + static_cast<std::ptrdiff_t>(i) * (h.k - 1),
                                 w.vertexSeq.begin() + static_cast<std::ptrdiff_t>(i) * (h.k - 1) + h.k);
            if (window != sets[i])
                out.push_back("loose path: window " + std::to_string(i) + " does not match its edge");
        }
        if (l.target == LabelTarget::Vertices) checkIncreasingVertexLabels(w, l, out);
    }
    if (l.target == LabelTarget::Edges) {
        for (int i = 1; i < t; ++i)
            if (l.at(w.edgeSeq[i - 1]) >= l.at(w.edgeSeq[i]))
                out.push_back("loose path: edge labels not increasing at " + std::to_string(i));
    }
    return out;
}

}  // namespace

std::vector<std::string> validateWitness(const IncreasingWitness& w, const FiniteHypergraph& h,
                                         const Labeling& l) {
    std::vector<std::string> out;
    for (int v : w.vertexSeq)
        if (v < 0 || v >= h.vertexCount()) return {"witness: vertex position out of range"};
    for (int e : w.edgeSeq)
        if (e < 0 || e >= h.edgeCount()) return {"witness: edge index out of range"};

    switch (w.kind) {
        case WitnessKind::VertexPath: {
            if (w.vertexSeq.empty()) return {"vertex path: empty"};
            if (!allDistinct(w.vertexSeq)) out.push_back("vertex path: repeated vertex");
            for (std::size_t i = 1; i < w.vertexSeq.size(); ++i)
                if (!adjacentIn(h, w.vertexSeq[i - 1], w.vertexSeq[i]))
                    out.push_back("vertex path: step " + std::to_string(i) + " not an edge");
            checkIncreasingVertexLabels(w, l, out);
            break;
        }
        case WitnessKind::TwoSidedPath: {
            if (!l.integerKind) return {"two-sided path: labeling is not an integer labeling"};
            if (!allDistinct(w.vertexSeq)) out.push_back("two-sided path: repeated vertex");
            for (std::size_t i = 1; i < w.vertexSeq.size(); ++i)
                if (!adjacentIn(h, w.vertexSeq[i - 1], w.vertexSeq[i]))
                    out.push_back("two-sided path: step " + std::to_string(i) + " not an edge");
            checkIncreasingVertexLabels(w, l, out);
            int neg = 0, nonneg = 0;
            for (int v : w.vertexSeq) (l.at(v) < 0 ? neg : nonneg)++;
            if (neg == 0 || nonneg == 0)
                out.push_back("two-sided path: must contain a negative and a non-negative label");
            break;
        }
        case WitnessKind::EdgePath: {
            const int t = static_cast<int>(w.edgeSeq.size());
            if (t == 0) return {"edge path: empty"};
            if (static_cast<int>(w.vertexSeq.size()) != t + 1)
                return {"edge path: vertex sequence has wrong length"};
            if (!allDistinct(w.vertexSeq)) out.push_back("edge path: repeated vertex");
            for (int i = 0; i < t; ++i) {
                const auto& e = h.edges[w.edgeSeq[i]];
                std::set<int> want{w.vertexSeq[i], w.vertexSeq[i + 1]};
                if (std::set<int>(e.begin(), e.end()) != want)
                    out.push_back("edge path: edge " + std::to_string(i) + " does not join its vertices");
            }
            for (int i = 1; i < t; ++i)
                if (l.at(w.edgeSeq[i - 1]) >= l.at(w.edgeSeq[i]))
                    out.push_back("edge path: labels not increasing at step " + std::to_string(i));
            break;
        }
        case WitnessKind::LoosePath:
            return validateLoose(w, h, l, false);
        case WitnessKind::SkipIncreasingPath:
            return validateLoose(w, h, l, true);
        case WitnessKind::BranchingTree:
            return validateBranchingTree(w, h, l);
    }
    return out;
}

std::vector<std::string> validateWitnessDigraph(const IncreasingWitness& w, const FiniteDigraph& d,
                                                const Labeling& l) {
    std::vector<std::string> out;
    auto hasArc = [&](int u, int v) {
        for (const auto& [a, b] : d.arcs)
            if (a == u && b == v) return true;
        return false;
    };
    switch (w.kind) {
        case WitnessKind::VertexPath:
        case WitnessKind::TwoSidedPath: {
            if (w.vertexSeq.empty()) return {"directed path: empty"};
            if (!allDistinct(w.vertexSeq)) out.push_back("directed path: repeated vertex");
            for (std::size_t i = 1; i < w.vertexSeq.size(); ++i)
                if (!hasArc(w.vertexSeq[i - 1], w.vertexSeq[i]))
                    out.push_back("directed path: step " + std::to_string(i) + " not an arc");
            checkIncreasingVertexLabels(w, l, out);
            if (w.kind == WitnessKind::TwoSidedPath) {
                int neg = 0, nonneg = 0;
                for (int v : w.vertexSeq) (l.at(v) < 0 ? neg : nonneg)++;
                if (neg == 0 || nonneg == 0)
                    out.push_back("two-sided path: must contain a negative and a non-negative label");
            }
            break;
        }
        case WitnessKind::EdgePath: {
            const int t = static_cast<int>(w.edgeSeq.size());
            if (t == 0) return {"directed edge path: empty"};
            if (static_cast<int>(w.vertexSeq.size()) != t + 1)
                return {"directed edge path: vertex sequence has wrong length"};
            if (!allDistinct(w.vertexSeq)) out.push_back("directed edge path: repeated vertex");
            for (int i = 0; i < t; ++i) {
                auto [u, v] = d.arcs[w.edgeSeq[i]];
                if (u != w.vertexSeq[i] || v != w.vertexSeq[i + 1])
                    out.push_back("directed edge path: arc " + std::to_string(i) + " mismatched");
            }
            for (int i = 1; i < t; ++i)
                if (l.at(w.edgeSeq[i - 1]) >= l.at(w.edgeSeq[i]))
                    out.push_back("directed edge path: labels not increasing at " + std::to_string(i));
            break;
        }
        default:
            return {"witness kind not defined on digraphs"};
    }
    return out;
}

}  // namespace incpath
