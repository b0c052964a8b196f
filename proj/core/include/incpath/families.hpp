#pragma once

#include <map>
#include <string>
#include <vector>

#include "incpath/model.hpp"

namespace incpath {

// Named generated family plus truncation parameters. Expansion at size n is an
// induced substructure of expansion at size n+1 under the identity embedding
// of ids: every generator assigns ids in an n-independent order, so larger
// truncations only append vertices and edges.
struct FamilySpec {
    std::string name;                 // see familyNames()
    std::map<std::string, int> params;

    int param(const std::string& key, int fallback) const;
};

const std::vector<std::string>& familyNames();
FiniteHypergraph expandFamily(const FamilySpec& spec);

// Bipartite half-graph truncated to n vertices per side: i_x ~ f_y iff x <= y
// (1-based side positions). Ids interleave sides: i_x = 2(x-1), f_y = 2(y-1)+1.
FiniteHypergraph halfGraph(int n);

// {m <= n : m = 2^(i-1)(2j-1), j >= 1}; over i these sets partition 1..n.
std::vector<int> dyadicIndexSet(int i, int n);

// The FIN separation graph H on two sides L, R of size n. Each dyadic class
// pair (L_i, R_j), i < j, carries a half-graph copy with R_j as the
// unbounded-degree side; membership uses positions within the class
// subsequences, with the order inherited from 1..n. E(H1) and E(H2) are
// disjoint by the class-index comparison. Ids: L value v = 2(v-1), R value
// v = 2(v-1)+1.
FiniteHypergraph dyadicBipartiteH(int n);

// Complete graph on n base vertices, every pair-edge completed to uniformity k
// by k-2 fresh degree-1 vertices.
FiniteHypergraph extendedClique(int k, int n);

// Depth-d truncation of the (k-1)-branching tree: the root edge sits at level
// 1 and every non-root vertex of a level-t edge (t < d) carries one level-t+1
// edge. Ids in breadth-first order.
FiniteHypergraph infiniteBranchingTreeTrunc(int k, int depth);

// Truncation of T_height: rooted tree (2-uniform) where every non-leaf has b
// children and all leaves sit at depth `height`.
FiniteHypergraph tkTree(int height, int b);

// All C(n,k) edges, in colex order. Not simple for k >= 3, n > k.
FiniteHypergraph completeHypergraph(int k, int n);

// Complete (l-1)-uniform hypergraph on n base vertices, every edge extended by
// k-l+1 fresh pendant vertices to uniformity k. The l = k case coincides with
// extendedClique.
FiniteHypergraph cLseparationExample(int k, int l, int n);

// Base vertex positions of extendedClique/cLseparationExample expansions
// (pendants are everything else).
std::vector<int> extendedCliqueBase(int k, int n);
std::vector<int> cLseparationBase(int k, int l, int n);

}  // namespace incpath
