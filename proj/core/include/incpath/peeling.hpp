#pragma once

#include <optional>
#include <vector>

#include "incpath/model.hpp"

namespace incpath {

// One peeled vertex: the round in which it became deficient and the count
// (degree or qualifying-edge count) it had at removal time. The elimination
// order is the certificate that the core is empty / maximal: replaying it must
// show every recorded count below the threshold.
struct PeelStep {
    int vertex;
    int round;
    int countAtPeel;
};

struct CoreResult {
    std::vector<int> core;  // ascending vertex positions; empty allowed
    std::vector<PeelStep> eliminationOrder;
};

// Unique maximal vertex set with minimum degree >= d in the induced subgraph.
// 2-uniform input. Ties peel lowest position first within a round.
CoreResult dCore(const FiniteHypergraph& g, int d);

// Finite shadow of property C_l: the unique maximal V' such that every v in V'
// lies in at least d edges e with |V' cap e| >= l. 2 <= l <= k.
CoreResult lCore(const FiniteHypergraph& h, int l, int d);

CoreResult outCore(const FiniteDigraph& d, int thr);
CoreResult inCore(const FiniteDigraph& d, int thr);

struct PairedCoreResult {
    bool found = false;
    std::vector<int> w1, w2;
    std::optional<std::pair<int, int>> crossingEdge;  // (w1 vertex, w2 vertex)
};

// found iff some edge joins dCore(g[V1],d) to dCore(g[V2],d). Maximality of
// the cores makes this complete: any witnessing pair (W1,W2) embeds in them.
PairedCoreResult pairedCoreCheck(const FiniteHypergraph& g, const Partition& parts, int d);

// Directed variant: outCore on V1, inCore on V2, crossing arc from W2 to W1.
PairedCoreResult directedPairedCoreCheck(const FiniteDigraph& dg, const Partition& parts, int d);

// Rounds of repeated maximal-vertex extraction under a vertex labeling:
// blocks[0] = V_k (vertices with no larger-labeled neighbor), blocks[1] =
// V_{k-1}, ... The number of rounds equals the longest increasing vertex path.
struct ChiStarResult {
    Partition rounds;
    int k = 0;
};

ChiStarResult maximalPeel(const FiniteHypergraph& g, const Labeling& phi);

// A partition into at most k independent blocks, or nullopt if none found
// within budget. Exact (backtracking) for |V| <= exactLimit; greedy peel-order
// coloring plus restarts beyond. backDegreeCap, when set, additionally
// requires every vertex to have at most that many neighbors in earlier
// blocks (the finite trace of the chi-star condition).
std::optional<Partition> chiStarUpperBoundSearch(const FiniteHypergraph& g, int k,
                                                 long budgetNodes = 2000000,
                                                 std::optional<int> backDegreeCap = std::nullopt,
                                                 int exactLimit = 12);

// Same vertex set; u ~ v iff u and v have at least t common neighbors.
FiniteHypergraph twoDistanceGraph(const FiniteHypergraph& g, int t);

// Greedy independent blocks from the peel elimination order. When the d-core
// of the induced subgraph is empty the subgraph is (d-1)-degenerate and this
// uses at most d blocks. Blocks come back in labeling order (block 0 first).
Partition degeneracyColoring(const FiniteHypergraph& g, const std::vector<int>& subset);

// Directed analogue: blocks each inducing an acyclic subdigraph, greedily from
// the out-degree peel order. Empty d-out-core gives at most d blocks. Within
// each block the reverse peel order is a topological order, which callers use
// to label blocks internally descending.
struct AcyclicBlocks {
    Partition blocks;
    std::vector<int> peelPosition;  // by vertex; later peel position = earlier topological
};

AcyclicBlocks acyclicBlockPartition(const FiniteDigraph& dg, const std::vector<int>& subset);

}  // namespace incpath
