#pragma once

#include <string>
#include <vector>

#include "incpath/model.hpp"

namespace incpath {

// Canonical JSON formats, the contract for every CLI command:
//   hypergraph {"k": int, "vertices": [ids], "edges": [[ids]]}
//   digraph    {"vertices": [ids], "arcs": [[u,v]]}
//   labeling   {"target": "vertices"|"edges", "kind": "nat"|"int", "map": {id: label}}
//   ordering   {"target": ..., "order": [ids, smallest first]}
//   partition  {"blocks": [[ids], ...]}
// Vertex labelings/orderings key objects by vertex id; edge labelings key them
// by the 0-based index of the edge in the graph file.

std::string hypergraphToJson(const FiniteHypergraph& h);
std::string digraphToJson(const FiniteDigraph& d);
FiniteHypergraph hypergraphFromJson(const std::string& text);
FiniteDigraph digraphFromJson(const std::string& text);
bool looksLikeDigraph(const std::string& text);

std::string labelingToJson(const Labeling& l, const std::vector<ExternalId>& objectIds);
Labeling labelingFromJson(const std::string& text, const std::vector<ExternalId>& objectIds);

std::string orderingToJson(const Ordering& o, LabelTarget target,
                           const std::vector<ExternalId>& objectIds);
Ordering orderingFromJson(const std::string& text, const std::vector<ExternalId>& objectIds);

std::string partitionToJson(const Partition& p, const std::vector<ExternalId>& vertexIds);
Partition partitionFromJson(const std::string& text, const std::vector<ExternalId>& vertexIds);

std::string witnessToJson(const IncreasingWitness& w, const std::vector<ExternalId>& vertexIds);
std::string noneWitnessJson(bool exhaustive);

// 0..m-1 as external ids, for edge-labeling io.
std::vector<ExternalId> edgeObjectIds(int edgeCount);

// Plain text edge list: one `u v` line per edge, one `u` line per isolated
// vertex declaration; vertex order is first appearance. Lossless against the
// canonical format for 2-uniform graphs.
std::string toEdgeListText(const FiniteHypergraph& g);
FiniteHypergraph fromEdgeListText(const std::string& text);

// Graphviz export (2-uniform graphs and digraphs). Optional labeling renders
// as `id:label` node captions; witness edges are drawn bold.
std::string toDot(const FiniteHypergraph& g, const Labeling* vertexLabels = nullptr,
                  const IncreasingWitness* highlight = nullptr);
std::string toDotDigraph(const FiniteDigraph& d, const Labeling* vertexLabels = nullptr);

// FNV-1a content hash used by experiment reports.
std::string contentHash(const std::string& payload);

}  // namespace incpath
