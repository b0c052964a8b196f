#pragma once

#include <optional>
#include <string>
#include <vector>

#include "incpath/model.hpp"

namespace incpath {

// Per-edge extrema: least and second-least vertex under the base order, and
// the maximum vertex under prec. All three are members of the edge.
struct EdgeExtrema {
    std::vector<int> least, secondLeast, precMax;
};

EdgeExtrema computeEdgeExtrema(const FiniteHypergraph& h, const Ordering& baseOrder,
                               const Ordering& prec);

// Edges split into BFS-distance blocks E_1, E_2, ... from the seed edge, then
// labeled along the total order E_1 < E_3 < E_2 < E_5 < E_4 < ... (every odd
// block below its even neighbors; within a block by edge id). Components not
// containing the seed get their own ladders, placed below all seed-component
// labels. Certificate: an increasing edge path that uses an even-block edge
// stays in that block forever.
struct BlockAlternatingResult {
    Labeling labels;                    // natural edge labeling
    std::vector<int> blockOfEdge;       // 1-based distance block within component
    std::vector<int> componentOfEdge;   // 0 = seed component
    int maxBlock = 0;
};

BlockAlternatingResult blockAlternating(const FiniteHypergraph& h, int seedEdge);

// Replaces every hyperedge by the star from its prec-minimal vertex; parallel
// edges collapse. k = 2 is the identity on edges.
FiniteHypergraph starReduction(const FiniteHypergraph& h, const Ordering& prec);

// Type split of a simple hypergraph: E_I = edges whose base-least vertex is
// not the prec-maximum of the edge, E_II the rest. gamma realizes
// blockAlternating on E_I, the (s asc, ell prec-desc) order on E_II, and puts
// every E_I label below every E_II label.
struct TypeSplitResult {
    Labeling gamma;
    std::vector<char> isTypeII;
    std::vector<int> blockOfEdge;  // ladder block for E_I edges, 0 for E_II
    EdgeExtrema extrema;
};

TypeSplitResult typeSplitHyperedge(const FiniteHypergraph& h, const Ordering& baseOrder,
                                   const Ordering& prec);

// Labels independent blocks bottom-up so every vertex sits above all of its
// earlier-block neighbors; the longest increasing path is then at most the
// number of blocks.
Labeling chiStarLabeling(const FiniteHypergraph& g, const Partition& parts);

// Greedy lowest-id maximal matching carries the positive labels; everything
// else fills the run down from 0. In any increasing edge path at most one
// edge is positive and only in final position.
struct ZMatchingResult {
    Labeling labels;  // integer kind
    std::vector<int> matching;
};

ZMatchingResult zMatchingEdge(const FiniteHypergraph& g);
ZMatchingResult zMatchingArc(const FiniteDigraph& d);

// Adversarial labeling for partitions without a core-to-core crossing edge.
// Requires pairedCoreCheck to have found nothing; otherwise refuses and
// surfaces the crossing edge. posBound /
// negBound are the audited path bounds inside U1 / U2 carried by the
// certificate: no two-sided increasing path can exceed both sides at once.
struct ZTwoSidedResult {
    bool refused = false;
    std::optional<std::pair<int, int>> crossing;  // the counterexample on refusal
    Labeling labels;                              // integer vertex labeling
    int posBound = 0;
    int negBound = 0;
    std::vector<int> w1, u1, w2, u2;
};

ZTwoSidedResult zTwoSidedVertex(const FiniteHypergraph& g, const Partition& parts, int d);
ZTwoSidedResult zTwoSidedVertexD(const FiniteDigraph& dg, const Partition& parts, int d);

// Full state of the inductive merge of per-block orders along a digraph
// (undirected graphs enter as their symmetric orientation). q[i], p[i], kSeq[i]
// are Q_i, P_i, k_i; q[0] is empty. result is the merged ordering.
struct MergeState {
    Partition blocks;
    std::vector<std::vector<int>> perBlockRank;  // rank within block, aligned with blocks
    std::vector<std::vector<int>> q;
    std::vector<std::vector<int>> p;             // p[0] unused
    std::vector<int> kSeq;                       // kSeq[0] unused
    Ordering result;
};

MergeState mergeOrdering(const Partition& blocks, const std::vector<Ordering>& perBlockOrder,
                         const FiniteDigraph& adjacency);
MergeState mergeOrderingUndirected(const Partition& blocks,
                                   const std::vector<Ordering>& perBlockOrder,
                                   const FiniteHypergraph& adjacency);

// Arc labeling that forbids long increasing directed paths when every vertex
// sends only finitely many arcs upward in prec: L = arcs where base order and
// prec agree gets the alternating ladder, E \ L gets the K_i construction,
// and all L labels sit below all E \ L labels.
struct ArcSplitResult {
    Labeling gamma;             // natural arc labeling
    std::vector<char> inL;
    std::vector<int> blockOfL;  // ladder block for L arcs, 0 otherwise
    std::vector<int> kIndexOf;  // index vertex of the K block for E \ L arcs, -1 otherwise
};

ArcSplitResult arcSplitLabeling(const FiniteDigraph& d, const Ordering& baseOrder,
                                     const Ordering& prec);

// Helper shared by the two-sided constructions: an ordering of `subset`
// under which every increasing directed path inside the induced subdigraph
// has at most `bound` vertices. reverseSense bounds the backward walks
// (decreasing anti-directed chains) instead.
struct BoundedOrder {
    std::vector<int> ascending;  // subset vertices, smallest label first
    int bound = 0;
};

BoundedOrder boundedIncreasingOrder(const FiniteHypergraph& g, const std::vector<int>& subset);
BoundedOrder boundedIncreasingOrderD(const FiniteDigraph& dg, const std::vector<int>& subset,
                                     bool reverseSense);

// Certificate audits; empty result = certificate holds.
std::vector<std::string> auditBlockAlternating(const FiniteHypergraph& h,
                                               const BlockAlternatingResult& r);
std::vector<std::string> auditTypeSplit(const FiniteHypergraph& h, const Ordering& baseOrder,
                                        const Ordering& prec, const TypeSplitResult& r);
std::vector<std::string> auditZMatching(const FiniteHypergraph& g, const ZMatchingResult& r);
std::vector<std::string> auditZMatchingD(const FiniteDigraph& d, const ZMatchingResult& r);
std::vector<std::string> auditMergeState(const FiniteDigraph& adjacency, const MergeState& st);
std::vector<std::string> auditArcSplit(const FiniteDigraph& d, const Ordering& baseOrder,
                                        const Ordering& prec, const ArcSplitResult& r);

}  // namespace incpath
