#include "incpath/families.hpp"

#include <stdexcept>

namespace incpath {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// All k-subsets of 0..n-1 in colex order, so the edge list of a larger
// truncation extends the smaller one.
void colexSubsets(int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int m = k - 1; m < n; ++m) {
        std::vector<int> inner(cur);
        std::vector<std::vector<int>> sub;
        colexSubsets(m, k - 1, inner, sub);
        for (auto& s : sub) {
            s.push_back(m);
            for (int tail : cur) s.push_back(tail);
            out.push_back(std::move(s));
        }
    }
}

std::vector<std::vector<int>> colexSubsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    colexSubsets(n, k, cur, out);
    return out;
}

}  // namespace

int FamilySpec::param(const std::string& key, int fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

const std::vector<std::string>& familyNames() {
    static const std::vector<std::string> names = {
        "half-graph", "dyadic-h", "extended-clique", "branching-tree",
        "tk-tree",    "complete", "cl-separation",
    };
    return names;
}

FiniteHypergraph expandFamily(const FamilySpec& spec) {
    const auto& f = spec.name;
    if (f == "half-graph") return halfGraph(spec.param("n", 4));
    if (f == "dyadic-h") return dyadicBipartiteH(spec.param("n", 8));
    if (f == "extended-clique") return extendedClique(spec.param("k", 3), spec.param("n", 4));
    if (f == "branching-tree")
        return infiniteBranchingTreeTrunc(spec.param("k", 3), spec.param("depth", 2));
    if (f == "tk-tree") return tkTree(spec.param("height", 2), spec.param("branching", 3));
    if (f == "complete") return completeHypergraph(spec.param("k", 2), spec.param("n", 4));
    if (f == "cl-separation")
        return cLseparationExample(spec.param("k", 3), spec.param("l", 3), spec.param("n", 4));
    throw std::invalid_argument("unknown family: " + f);
}

FiniteHypergraph halfGraph(int n) {
    require(n >= 1, "halfGraph: n must be >= 1");
    FiniteHypergraph h;
    h.k = 2;
    h.ids.resize(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) h.ids[i] = i;  // i_x = 2(x-1), f_y = 2(y-1)+1
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x <= y; ++x) h.edges.push_back({2 * (x - 1), 2 * (y - 1) + 1});
    return h;
}

std::vector<int> dyadicIndexSet(int i, int n) {
    require(i >= 1, "dyadicIndexSet: i must be >= 1");
    require(n >= 1, "dyadicIndexSet: n must be >= 1");
    std::vector<int> out;
    long long base = 1LL << (i - 1);
    for (long long j = 1; base * (2 * j - 1) <= n; ++j) out.push_back(static_cast<int>(base * (2 * j - 1)));
    return out;
}

FiniteHypergraph dyadicBipartiteH(int n) {
    require(n >= 2, "dyadicBipartiteH: n must be >= 2");
    FiniteHypergraph h;
    h.k = 2;
    h.ids.resize(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) h.ids[i] = i;  // L value v = 2(v-1), R value v = 2(v-1)+1
    auto posL = [](int value) { return 2 * (value - 1); };
    auto posR = [](int value) { return 2 * (value - 1) + 1; };

    std::vector<std::vector<int>> classes;  // classes[i-1] = dyadic values of index i, ascending
    for (int i = 1; (1 << (i - 1)) <= n; ++i) classes.push_back(dyadicIndexSet(i, n));
    const int classCount = static_cast<int>(classes.size());

    // E(H1): for i < j a half-graph copy between R_j (unbounded side) and L_i,
    // joining position p of R_j to position q of L_i whenever p <= q.
    for (int i = 1; i <= classCount; ++i)
        for (int j = i + 1; j <= classCount; ++j) {
            const auto& fin = classes[i - 1];
            const auto& inf = classes[j - 1];
            for (std::size_t p = 0; p < inf.size(); ++p)
                for (std::size_t q = p; q < fin.size(); ++q)
                    h.edges.push_back({posR(inf[p]), posL(fin[q])});
        }
    // E(H2): roles of L and R swapped.
    for (int i = 1; i <= classCount; ++i)
        for (int j = i + 1; j <= classCount; ++j) {
            const auto& fin = classes[i - 1];
            const auto& inf = classes[j - 1];
            for (std::size_t p = 0; p < inf.size(); ++p)
                for (std::size_t q = p; q < fin.size(); ++q)
                    h.edges.push_back({posL(inf[p]), posR(fin[q])});
        }
    return h;
}

namespace {

// Shared sweep for extendedClique and cLseparationExample. Base vertices and
// their pendant groups are emitted in an n-independent order: base j first,
// then for every new base subset with maximum j its pendant tuple and edge.
FiniteHypergraph pendantExtension(int k, int baseArity, int pendants, int n,
                                  std::vector<int>* basePositions) {
    FiniteHypergraph h;
    h.k = k;
    int next = 0;
    for (int j = 0; j < n; ++j) {
        if (basePositions) basePositions->push_back(next);
        int baseJ = next++;
        (void)baseJ;
        if (j + 1 < baseArity) continue;
        for (auto& s : colexSubsets(j, baseArity - 1)) {
            std::vector<int> edge;
            for (int b : s) edge.push_back(basePositions ? (*basePositions)[b] : b);
            edge.push_back(baseJ);
            for (int p = 0; p < pendants; ++p) edge.push_back(next++);
            h.edges.push_back(std::move(edge));
        }
    }
    h.ids.resize(static_cast<std::size_t>(next));
    for (int i = 0; i < next; ++i) h.ids[i] = i;
    return h;
}

}  // namespace

FiniteHypergraph extendedClique(int k, int n) {
    require(k >= 3, "extendedClique: k must be >= 3");
    require(n >= 2, "extendedClique: n must be >= 2");
    std::vector<int> base;
    return pendantExtension(k, 2, k - 2, n, &base);
}

std::vector<int> extendedCliqueBase(int k, int n) {
    std::vector<int> base;
    pendantExtension(k, 2, k - 2, n, &base);
    return base;
}

FiniteHypergraph infiniteBranchingTreeTrunc(int k, int depth) {
    require(k >= 2, "branching tree: k must be >= 2");
    require(depth >= 1, "branching tree: depth must be >= 1");
    FiniteHypergraph h;
    h.k = k;
    int next = 0;
    int root = next++;
    std::vector<int> frontier;
    std::vector<int> rootEdge{root};
    for (int i = 1; i < k; ++i) {
        rootEdge.push_back(next);
        frontier.push_back(next++);
    }
    h.edges.push_back(rootEdge);
    for (int level = 2; level <= depth; ++level) {
        std::vector<int> nextFrontier;
        for (int v : frontier) {
            std::vector<int> edge{v};
            for (int i = 1; i < k; ++i) {
                edge.push_back(next);
                nextFrontier.push_back(next++);
            }
            h.edges.push_back(std::move(edge));
        }
        frontier = std::move(nextFrontier);
    }
    h.ids.resize(static_cast<std::size_t>(next));
    for (int i = 0; i < next; ++i) h.ids[i] = i;
    return h;
}

FiniteHypergraph tkTree(int height, int b) {
    require(height >= 1, "tkTree: height must be >= 1");
    require(b >= 1, "tkTree: branching must be >= 1");
    FiniteHypergraph h;
    h.k = 2;
    int next = 0;
    std::vector<int> frontier{next++};
    for (int level = 1; level <= height; ++level) {
        std::vector<int> nextFrontier;
        for (int v : frontier)
            for (int c = 0; c < b; ++c) {
                h.edges.push_back({v, next});
                nextFrontier.push_back(next++);
            }
        frontier = std::move(nextFrontier);
    }
    h.ids.resize(static_cast<std::size_t>(next));
    for (int i = 0; i < next; ++i) h.ids[i] = i;
    return h;
}

FiniteHypergraph completeHypergraph(int k, int n) {
    require(k >= 2, "completeHypergraph: k must be >= 2");
    require(k <= n, "completeHypergraph: k must be <= n");
    FiniteHypergraph h;
    h.k = k;
    h.ids.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) h.ids[i] = i;
    h.edges = colexSubsets(n, k);
    return h;
}

FiniteHypergraph cLseparationExample(int k, int l, int n) {
    require(l >= 2, "cLseparationExample: l must be >= 2");
    require(l <= k, "cLseparationExample: l must be <= k");
    require(n >= l - 1, "cLseparationExample: n must be >= l-1");
    std::vector<int> base;
    return pendantExtension(k, l - 1, k - l + 1, n, &base);
}

std::vector<int> cLseparationBase(int k, int l, int n) {
    std::vector<int> base;
    pendantExtension(k, l - 1, k - l + 1, n, &base);
    return base;
}

}  // namespace incpath
