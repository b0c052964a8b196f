#include "incpath/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace incpath {

namespace {

bool colorable(const std::vector<std::vector<int>>& adj, int k, std::vector<int>& color, int v) {
    const int n = static_cast<int>(adj.size());
    if (v == n) return true;
    int maxUsed = 0;
    for (int u = 0; u < v; ++u) maxUsed = std::max(maxUsed, color[u]);
    for (int c = 1; c <= std::min(k, maxUsed + 1); ++c) {
        bool ok = true;
        for (int u : adj[v])
            if (u < v && color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (colorable(adj, k, color, v + 1)) return true;
        color[v] = 0;
    }
    return false;
}

}  // namespace

int chromaticNumber(const FiniteHypergraph& g) {
    const int n = g.vertexCount();
    if (n == 0) return 0;
    auto adj = adjacencyLists(g);
    for (int k = 1; k <= n; ++k) {
        std::vector<int> color(static_cast<std::size_t>(n), 0);
        if (colorable(adj, k, color, 0)) return k;
    }
    return n;
}

namespace {

bool blockAcyclic(const std::vector<std::vector<int>>& out, const std::vector<int>& color, int c) {
    const int n = static_cast<int>(color.size());
    std::vector<int> state(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> dfs = [&](int v) {
        state[v] = 1;
        for (int u : out[v]) {
            if (color[u] != c) continue;
            if (state[u] == 1) return false;
            if (state[u] == 0 && !dfs(u)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (int v = 0; v < n; ++v)
        if (color[v] == c && state[v] == 0 && !dfs(v)) return false;
    return true;
}

bool acyclicPartition(const std::vector<std::vector<int>>& out, int k, std::vector<int>& color,
                      int v) {
    const int n = static_cast<int>(out.size());
    if (v == n) return true;
    int maxUsed = 0;
    for (int u = 0; u < v; ++u) maxUsed = std::max(maxUsed, color[u]);
    for (int c = 1; c <= std::min(k, maxUsed + 1); ++c) {
        color[v] = c;
        if (blockAcyclic(out, color, c) && acyclicPartition(out, k, color, v + 1)) return true;
        color[v] = 0;
    }
    return false;
}

}  // namespace

int dichromaticNumber(const FiniteDigraph& d) {
    const int n = d.vertexCount();
    if (n == 0) return 0;
    auto out = outLists(d);
    for (int k = 1; k <= n; ++k) {
        std::vector<int> color(static_cast<std::size_t>(n), 0);
        if (acyclicPartition(out, k, color, 0)) return k;
    }
    return n;
}

namespace {

std::vector<std::pair<int, int>> pairTable(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    return pairs;
}

bool maskConnected(int n, const std::vector<std::pair<int, int>>& pairs, std::uint32_t mask) {
    if (n == 1) return true;
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) {
            nbr[pairs[i].first] |= 1u << pairs[i].second;
            nbr[pairs[i].second] |= 1u << pairs[i].first;
        }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1) next |= nbr[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

void permutations(int n, std::vector<std::vector<int>>& out) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

std::vector<FiniteHypergraph> connectedGraphCatalogue(int maxN) {
    std::vector<FiniteHypergraph> out;
    for (int n = 1; n <= maxN; ++n) {
        auto pairs = pairTable(n);
        const int bits = static_cast<int>(pairs.size());
        std::vector<std::vector<int>> perms;
        permutations(n, perms);
        // per permutation, where each pair-bit goes
        std::vector<std::vector<int>> bitMap(perms.size(), std::vector<int>(pairs.size()));
        std::vector<std::vector<int>> pidx(static_cast<std::size_t>(n),
                                           std::vector<int>(static_cast<std::size_t>(n), -1));
        for (int i = 0; i < bits; ++i)
            pidx[pairs[i].first][pairs[i].second] = pidx[pairs[i].second][pairs[i].first] = i;
        for (std::size_t pi = 0; pi < perms.size(); ++pi)
            for (int i = 0; i < bits; ++i)
                bitMap[pi][i] = pidx[perms[pi][pairs[i].first]][perms[pi][pairs[i].second]];

        for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
            if (!maskConnected(n, pairs, mask)) continue;
            std::uint32_t canon = mask;
            for (const auto& bm : bitMap) {
                std::uint32_t mapped = 0;
                for (int i = 0; i < bits; ++i)
                    if (mask >> i & 1) mapped |= 1u << bm[i];
                canon = std::min(canon, mapped);
            }
            if (canon != mask) continue;
            std::vector<std::vector<int>> edges;
            for (int i = 0; i < bits; ++i)
                if (mask >> i & 1) edges.push_back({pairs[i].first, pairs[i].second});
            out.push_back(FiniteHypergraph::dense(2, n, std::move(edges)));
        }
    }
    return out;
}

std::vector<FiniteHypergraph> rootedTreeCatalogue(int maxN) {
    std::vector<FiniteHypergraph> out;
    for (int n = 1; n <= maxN; ++n) {
        std::vector<int> seq(static_cast<std::size_t>(n));
        std::iota(seq.begin(), seq.end(), 1);  // the path 1,2,...,n
        while (true) {
            std::vector<std::vector<int>> edges;
            for (int i = 1; i < n; ++i) {
                int parent = -1;
                for (int j = i - 1; j >= 0; --j)
                    if (seq[j] == seq[i] - 1) {
                        parent = j;
                        break;
                    }
                edges.push_back({parent, i});
            }
            out.push_back(FiniteHypergraph::dense(2, n, std::move(edges)));
            // successor: shrink at the last entry above level 2
            int p = -1;
            for (int i = n - 1; i >= 0; --i)
                if (seq[i] > 2) {
                    p = i;
                    break;
                }
            if (p < 0) break;
            int q = -1;
            for (int i = p - 1; i >= 0; --i)
                if (seq[i] == seq[p] - 1) {
                    q = i;
                    break;
                }
            for (int i = p; i < n; ++i) seq[i] = seq[i - (p - q)];
        }
    }
    return out;
}

std::vector<FiniteDigraph> digraphCatalogue(int maxN) {
    std::vector<FiniteDigraph> out;
    for (int n = 1; n <= maxN; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b) slots.emplace_back(a, b);
        const int bits = static_cast<int>(slots.size());
        if (bits > 20) throw std::invalid_argument("digraphCatalogue: maxN too large");
        std::vector<std::vector<int>> perms;
        permutations(n, perms);
        std::vector<std::vector<int>> sidx(static_cast<std::size_t>(n),
                                           std::vector<int>(static_cast<std::size_t>(n), -1));
        for (int i = 0; i < bits; ++i) sidx[slots[i].first][slots[i].second] = i;
        std::vector<std::vector<int>> bitMap(perms.size(), std::vector<int>(slots.size()));
        for (std::size_t pi = 0; pi < perms.size(); ++pi)
            for (int i = 0; i < bits; ++i)
                bitMap[pi][i] = sidx[perms[pi][slots[i].first]][perms[pi][slots[i].second]];

        for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
            std::uint32_t canon = mask;
            for (const auto& bm : bitMap) {
                std::uint32_t mapped = 0;
                for (int i = 0; i < bits; ++i)
                    if (mask >> i & 1) mapped |= 1u << bm[i];
                canon = std::min(canon, mapped);
            }
            if (canon != mask) continue;
            std::vector<std::pair<int, int>> arcs;
            for (int i = 0; i < bits; ++i)
                if (mask >> i & 1) arcs.push_back(slots[i]);
            out.push_back(FiniteDigraph::dense(n, std::move(arcs)));
        }
    }
    return out;
}

namespace {

std::vector<std::uint32_t> adjacencyMasks(const FiniteHypergraph& g) {
    if (g.vertexCount() > 26) throw std::invalid_argument("bitmask oracle needs |V| <= 26");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertexCount()), 0);
    for (const auto& e : g.edges) {
        adj[e[0]] |= 1u << e[1];
        adj[e[1]] |= 1u << e[0];
    }
    return adj;
}

bool maskHasMinDegree(const std::vector<std::uint32_t>& adj, std::uint32_t mask, int d) {
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        if (mask >> v & 1)
            if (__builtin_popcount(adj[v] & mask) < d) return false;
    return true;
}

}  // namespace

bool hasMinDegreeSubset(const FiniteHypergraph& g, int d) {
    auto adj = adjacencyMasks(g);
    const int n = g.vertexCount();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
        if (maskHasMinDegree(adj, mask, d)) return true;
    return false;
}

std::vector<int> dCoreBrute(const FiniteHypergraph& g, int d) {
    auto adj = adjacencyMasks(g);
    const int n = g.vertexCount();
    std::uint32_t uni = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
        if (maskHasMinDegree(adj, mask, d)) uni |= mask;
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (uni >> v & 1) out.push_back(v);
    return out;
}

std::vector<int> lCoreBrute(const FiniteHypergraph& h, int l, int d) {
    const int n = h.vertexCount();
    if (n > 26) throw std::invalid_argument("lCoreBrute needs |V| <= 26");
    auto inc = buildIncidence(h);
    std::uint32_t uni = 0;
    std::vector<std::uint32_t> edgeMask(static_cast<std::size_t>(h.edgeCount()), 0);
    for (int e = 0; e < h.edgeCount(); ++e)
        for (int v : h.edges[e]) edgeMask[e] |= 1u << v;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (!(mask >> v & 1)) continue;
            int count = 0;
            for (int e : inc[v])
                if (__builtin_popcountll(edgeMask[e] & mask) >= l) ++count;
            if (count < d) ok = false;
        }
        if (ok) uni |= static_cast<std::uint32_t>(mask);
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (uni >> v & 1) out.push_back(v);
    return out;
}

std::vector<int> directedCoreBrute(const FiniteDigraph& dg, int thr, bool useOut) {
    const int n = dg.vertexCount();
    if (n > 26) throw std::invalid_argument("directedCoreBrute needs |V| <= 26");
    std::vector<std::uint32_t> fwd(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : dg.arcs) {
        if (useOut)
            fwd[u] |= 1u << v;
        else
            fwd[v] |= 1u << u;
    }
    std::uint32_t uni = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (mask >> v & 1)
                if (__builtin_popcount(fwd[v] & mask) < thr) ok = false;
        if (ok) uni |= mask;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (uni >> v & 1) out.push_back(v);
    return out;
}

namespace {

std::uint32_t maskOf(const std::vector<int>& vs) {
    std::uint32_t m = 0;
    for (int v : vs) m |= 1u << v;
    return m;
}

std::uint32_t maximalQualifying(const std::vector<std::uint32_t>& adj, std::uint32_t scope, int d) {
    // union of all qualifying subsets inside scope (closed under union)
    std::uint32_t uni = 0;
    const int n = static_cast<int>(adj.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if ((mask & scope) != mask) continue;
        if (maskHasMinDegree(adj, mask, d)) uni |= mask;
    }
    return uni;
}

}  // namespace

bool pairedCoreBrute(const FiniteHypergraph& g, const Partition& parts, int d) {
    auto adj = adjacencyMasks(g);
    std::uint32_t w1 = maximalQualifying(adj, maskOf(parts.blocks[0]), d);
    std::uint32_t w2 = maximalQualifying(adj, maskOf(parts.blocks[1]), d);
    for (const auto& e : g.edges) {
        std::uint32_t m = (1u << e[0]) | (1u << e[1]);
        if ((m & w1) && (m & w2)) return true;
    }
    return false;
}

bool directedPairedCoreBrute(const FiniteDigraph& dg, const Partition& parts, int d) {
    const int n = dg.vertexCount();
    if (n > 26) throw std::invalid_argument("directedPairedCoreBrute needs |V| <= 26");
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0), in(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : dg.arcs) {
        out[u] |= 1u << v;
        in[v] |= 1u << u;
    }
    auto qualifying = [&](const std::vector<std::uint32_t>& fwd, std::uint32_t scope) {
        std::uint32_t uni = 0;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if ((mask & scope) != mask) continue;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v)
                if (mask >> v & 1)
                    if (__builtin_popcount(fwd[v] & mask) < d) ok = false;
            if (ok) uni |= mask;
        }
        return uni;
    };
    std::uint32_t w1 = qualifying(out, maskOf(parts.blocks[0]));
    std::uint32_t w2 = qualifying(in, maskOf(parts.blocks[1]));
    for (const auto& [u, v] : dg.arcs)
        if ((w2 >> u & 1) && (w1 >> v & 1)) return true;
    return false;
}

namespace {

int longestIncreasingBrute(int n, const std::vector<std::vector<int>>& next, const Labeling& phi) {
    int best = 0;
    std::function<int(int)> dfs = [&](int v) {
        int len = 1;
        for (int u : next[v])
            if (phi.at(u) > phi.at(v)) len = std::max(len, 1 + dfs(u));
        return len;
    };
    for (int v = 0; v < n; ++v) best = std::max(best, dfs(v));
    return best;
}

}  // namespace

int longestIncreasingVertexPathBrute(const FiniteHypergraph& g, const Labeling& phi) {
    return longestIncreasingBrute(g.vertexCount(), adjacencyLists(g), phi);
}

int longestIncreasingVertexPathBruteD(const FiniteDigraph& d, const Labeling& phi) {
    return longestIncreasingBrute(d.vertexCount(), outLists(d), phi);
}

namespace {

bool twoSidedExistsOver(int n, const std::vector<std::vector<int>>& next, const Labeling& phi,
                        int minNeg, int minPos) {
    bool found = false;
    // grow increasing paths from every start; count signs along the way
    std::function<void(int, int, int)> dfs = [&](int v, int neg, int pos) {
        if (found) return;
        if (neg >= minNeg && pos >= minPos) {
            found = true;
            return;
        }
        for (int u : next[v])
            if (phi.at(u) > phi.at(v)) dfs(u, neg + (phi.at(u) < 0 ? 1 : 0), pos + (phi.at(u) >= 0 ? 1 : 0));
    };
    for (int v = 0; v < n && !found; ++v) dfs(v, phi.at(v) < 0 ? 1 : 0, phi.at(v) >= 0 ? 1 : 0);
    return found;
}

}  // namespace

bool twoSidedExistsBrute(const FiniteHypergraph& g, const Labeling& phi, int minNeg, int minPos) {
    return twoSidedExistsOver(g.vertexCount(), adjacencyLists(g), phi, minNeg, minPos);
}

bool twoSidedExistsBruteD(const FiniteDigraph& d, const Labeling& phi, int minNeg, int minPos) {
    return twoSidedExistsOver(d.vertexCount(), outLists(d), phi, minNeg, minPos);
}

}  // namespace incpath
