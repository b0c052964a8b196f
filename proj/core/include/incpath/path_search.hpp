#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "incpath/model.hpp"

namespace incpath {

struct SearchBudget {
    long maxNodes = 50000000;
    double timeLimitSecs = 600.0;
    bool exact = true;
};

enum class SearchStatus {
    Found,
    NoneExhaustive,    // search completed; no structure of the requested size
    BudgetExhausted,   // incomplete; never reported as a definite answer
};

struct SearchResult {
    SearchStatus status = SearchStatus::NoneExhaustive;
    std::optional<IncreasingWitness> witness;
    long nodesExpanded = 0;
    int bestLength = 0;
    std::vector<int> stuckFrontier;  // greedyTreeExtend: vertices that could not extend
};

// Exact maximum-length increasing vertex path: orient every edge from smaller
// to larger label (acyclic) and take a longest path in label order.
IncreasingWitness longestIncreasingVertexPath(const FiniteHypergraph& g, const Labeling& phi);
IncreasingWitness longestIncreasingVertexPathD(const FiniteDigraph& d, const Labeling& phi);

// Single pass over edges in label order keeping the best trail length per
// vertex. Vertices may repeat in the underlying walk, so this upper-bounds the
// longest increasing edge path and serves as the pruning oracle.
int longestIncreasingEdgeTrail(const FiniteHypergraph& g, const Labeling& phi);

// Exact longest increasing edge path with distinct vertices; DFS over
// label-ascending extensions pruned by the trail bound.
SearchResult longestIncreasingEdgePath(const FiniteHypergraph& g, const Labeling& phi,
                                       const SearchBudget& budget);
SearchResult longestIncreasingEdgePathD(const FiniteDigraph& d, const Labeling& phi,
                                        const SearchBudget& budget);

// Increasing loose path with at least targetLen edges under a vertex labeling:
// every new edge continues the strictly increasing global vertex sequence.
SearchResult loosePathSearch(const FiniteHypergraph& h, const Labeling& phi, int targetLen,
                             const SearchBudget& budget);

// Loose path with strictly increasing pivot vertices, consecutive pivots
// sharing an edge.
SearchResult skipIncreasingSearch(const FiniteHypergraph& h, const Labeling& phi, int targetLen,
                                  const SearchBudget& budget);

// Increasing (k-1)-branching tree of the given depth, level-monotone in the
// labeling (vertex or edge target). Exact within budget.
SearchResult branchingTreeSearch(const FiniteHypergraph& h, const Labeling& lab, int depth,
                                 const SearchBudget& budget);

// Invokes cb on every depth-`depth` increasing branching tree; cb returning
// false stops the enumeration. Returns false when the budget ran out.
bool enumerateBranchingTrees(const FiniteHypergraph& h, const Labeling& lab, int depth,
                             const SearchBudget& budget,
                             const std::function<bool(const IncreasingWitness&)>& cb);

// Exact: for each edge crossing zero, combines the longest label-decreasing
// continuation inside the negatives with the longest increasing one inside the
// non-negatives by dynamic programming.
std::optional<IncreasingWitness> twoSidedSearch(const FiniteHypergraph& g, const Labeling& phi,
                                                int minNeg, int minPos);
std::optional<IncreasingWitness> twoSidedSearchD(const FiniteDigraph& d, const Labeling& phi,
                                                 int minNeg, int minPos);

enum class StructureKind { VertexPath, EdgePath };
enum class AdversarialMode { Exact, Anneal };

struct AdversarialResult {
    int value = 0;
    Labeling argmin;
    bool exact = false;      // anneal results are an upper bound, flagged heuristic
    long statesExamined = 0;
};

// Minimum over all labelings of the maximum increasing structure length.
// Exact mode enumerates all bijections, pruning by vertex orbits of the
// automorphism group; refused beyond |V| <= 9 (vertex) / |E| <= 8 (edge).
AdversarialResult adversarialMin(const FiniteHypergraph& g, StructureKind kind, AdversarialMode mode,
                                 const SearchBudget& budget, std::uint64_t seed = 1);
AdversarialResult adversarialMinD(const FiniteDigraph& d, StructureKind kind, AdversarialMode mode,
                                  const SearchBudget& budget, std::uint64_t seed = 1);

// Constructive greedy for the core => tree direction: root edge inside the
// core with minimal labels, then every frontier vertex extends through an
// unused edge whose fresh vertices sit in the core above the level window.
SearchResult greedyTreeExtend(const FiniteHypergraph& h, const Labeling& phi,
                              const std::vector<int>& coreSet, int depth);

// Constructive side of the paired-core check: walk upward from the crossing
// edge inside W1 and downward inside W2, always through the smallest usable
// label. crossing = (w1 vertex, w2 vertex).
std::optional<IncreasingWitness> buildTwoSidedViaCores(const FiniteHypergraph& g, const Labeling& phi,
                                                       const std::vector<int>& w1,
                                                       const std::vector<int>& w2,
                                                       std::pair<int, int> crossing);
std::optional<IncreasingWitness> buildTwoSidedViaCoresD(const FiniteDigraph& d, const Labeling& phi,
                                                        const std::vector<int>& w1,
                                                        const std::vector<int>& w2,
                                                        std::pair<int, int> crossing);

// Audit / oracle enumerators. Each increasing path is reported exactly once;
// cb returning false stops early. Both are exhaustive (no budget) and meant
// for the small instances the certificates run on.
void enumerateIncreasingEdgePaths(
    const FiniteHypergraph& g, const Labeling& phi,
    const std::function<bool(const std::vector<int>& edges, const std::vector<int>& verts)>& cb);

// Loose paths under an edge labeling: consecutive edges share exactly one
// vertex, non-consecutive edges are disjoint, labels strictly increase.
void enumerateIncreasingLoosePaths(const FiniteHypergraph& h, const Labeling& phiEdges,
                                   const std::function<bool(const std::vector<int>& edges)>& cb);

}  // namespace incpath
