#pragma once

#include <vector>

#include "incpath/model.hpp"

namespace incpath {

// Small brute-force references. These are the independent side of every
// oracle comparison, so none of them may call the algorithms they check:
// they enumerate colorings, subsets, permutations or paths directly.

int chromaticNumber(const FiniteHypergraph& g);

// Minimum number of blocks each inducing an acyclic subdigraph.
int dichromaticNumber(const FiniteDigraph& d);

// Connected graphs on 1..maxN vertices, one representative per isomorphism
// class (canonical form = lexicographically least permuted edge mask).
std::vector<FiniteHypergraph> connectedGraphCatalogue(int maxN);

// All rooted trees on 1..maxN vertices via level-sequence successor
// enumeration. Every free tree appears at least once, so isomorphism-invariant
// properties tested over this catalogue cover all trees.
std::vector<FiniteHypergraph> rootedTreeCatalogue(int maxN);

// Loop-free digraphs on 1..maxN vertices up to isomorphism.
std::vector<FiniteDigraph> digraphCatalogue(int maxN);

// Bitmask scan over all vertex subsets (requires |V| <= 26).
bool hasMinDegreeSubset(const FiniteHypergraph& g, int d);
std::vector<int> dCoreBrute(const FiniteHypergraph& g, int d);
std::vector<int> lCoreBrute(const FiniteHypergraph& h, int l, int d);
std::vector<int> directedCoreBrute(const FiniteDigraph& dg, int thr, bool useOut);

// Enumerates (W1, W2) pairs by maximality: the unions of all qualifying
// subsets on each side, then looks for a crossing edge / arc from W2 to W1.
bool pairedCoreBrute(const FiniteHypergraph& g, const Partition& parts, int d);
bool directedPairedCoreBrute(const FiniteDigraph& dg, const Partition& parts, int d);

// DFS over all increasing sequences; oracle for the label-order DP.
int longestIncreasingVertexPathBrute(const FiniteHypergraph& g, const Labeling& phi);
int longestIncreasingVertexPathBruteD(const FiniteDigraph& d, const Labeling& phi);

// DFS over all increasing two-sided paths (oracle for the crossing-edge DP):
// longest (neg, pos) counts over paths meeting the thresholds, or (0,0).
bool twoSidedExistsBrute(const FiniteHypergraph& g, const Labeling& phi, int minNeg, int minPos);
bool twoSidedExistsBruteD(const FiniteDigraph& d, const Labeling& phi, int minNeg, int minPos);

}  // namespace incpath
