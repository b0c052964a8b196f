#pragma once

#include "incpath/model.hpp"
#include "incpath/rng.hpp"

namespace incpath {

// Seeded instance generators for experiments and property tests.

// Connected graph: random attachment tree plus extra random edges, at most
// maxEdges edges total.
FiniteHypergraph randomConnectedGraph(Rng& rng, int minVertices, int maxVertices, int maxEdges);

// Plain random graph (possibly disconnected), no duplicate edges.
FiniteHypergraph randomGraph(Rng& rng, int minVertices, int maxVertices, int maxEdges);

// Simple (linear) 3-uniform hypergraph: rejection-sampled triples never
// sharing two vertices with an accepted edge.
FiniteHypergraph randomSimple3Uniform(Rng& rng, int minVertices, int maxVertices, int maxEdges);

FiniteDigraph randomDigraph(Rng& rng, int minVertices, int maxVertices, int maxArcs);

Labeling randomVertexLabeling(const FiniteHypergraph& g, Rng& rng);
Labeling randomEdgeLabeling(const FiniteHypergraph& g, Rng& rng);
Labeling randomVertexLabelingD(const FiniteDigraph& d, Rng& rng);
Labeling randomArcLabeling(const FiniteDigraph& d, Rng& rng);
Ordering randomOrdering(int n, Rng& rng);

// Random partition into at most maxBlocks nonempty blocks.
Partition randomPartition(int n, int maxBlocks, Rng& rng);

}  // namespace incpath
