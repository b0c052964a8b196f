#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace incpath {

// Vertex/edge ids visible in files and on the CLI. Internally every structure
// is indexed by dense positions 0..n-1 (position of the id in the vertex
// list), so order queries and labelings are flat array lookups.
using ExternalId = std::int64_t;

struct FiniteHypergraph {
    int k = 2;
    std::vector<ExternalId> ids;           // external ids; position = dense index
    std::vector<std::vector<int>> edges;   // vertex positions, construction order

    int vertexCount() const { return static_cast<int>(ids.size()); }
    int edgeCount() const { return static_cast<int>(edges.size()); }

    // Dense construction: ids are 0..n-1.
    static FiniteHypergraph dense(int k, int n, std::vector<std::vector<int>> edges);
    // Maps external edge endpoints to positions; throws std::domain_error on
    // an endpoint that is not in the vertex list. Malformed edges (wrong
    // arity, repeated vertices, duplicates) are kept for validate() to report.
    static FiniteHypergraph fromExternal(int k, std::vector<ExternalId> ids,
                                         const std::vector<std::vector<ExternalId>>& rawEdges);

    int indexOf(ExternalId id) const;  // -1 when absent
};

struct FiniteDigraph {
    std::vector<ExternalId> ids;
    std::vector<std::pair<int, int>> arcs;  // (tail, head) positions

    int vertexCount() const { return static_cast<int>(ids.size()); }
    int arcCount() const { return static_cast<int>(arcs.size()); }

    static FiniteDigraph dense(int n, std::vector<std::pair<int, int>> arcs);
    static FiniteDigraph fromExternal(std::vector<ExternalId> ids,
                                      const std::vector<std::pair<ExternalId, ExternalId>>& rawArcs);

    int indexOf(ExternalId id) const;
};

// Violation lists name the offending object; empty list == all invariants hold.
// Validation never aborts. maxCoDegree is the finite stand-in for the
// "finite co-degree" relaxation: when set, any vertex pair sharing more than
// maxCoDegree edges is reported (requireSimple is the maxCoDegree=1 case).
std::vector<std::string> validate(const FiniteHypergraph& h, bool requireSimple,
                                  std::optional<int> maxCoDegree = std::nullopt);
std::vector<std::string> validateDigraph(const FiniteDigraph& d);

// Edge indices incident to each vertex.
std::vector<std::vector<int>> buildIncidence(const FiniteHypergraph& h);
// Neighbor positions per vertex; requires a validated 2-uniform graph.
std::vector<std::vector<int>> adjacencyLists(const FiniteHypergraph& g);
std::vector<std::vector<int>> outLists(const FiniteDigraph& d);
std::vector<std::vector<int>> inLists(const FiniteDigraph& d);

enum class LabelTarget { Vertices, Edges };

// Sentinel for objects outside a restricted labeling's domain.
constexpr int kNoLabel = INT_MIN;

// A bijection from the labeled objects onto a contiguous integer interval.
// kind "nat" = 1..m, kind "int" = lo..hi with lo <= 0 allowed and 0 usable.
struct Labeling {
    LabelTarget target = LabelTarget::Vertices;
    bool integerKind = false;
    std::vector<int> labels;  // by dense object index; kNoLabel = not in domain

    int domainSize() const;
    int lo() const;
    int hi() const;
    bool has(int obj) const { return labels[static_cast<std::size_t>(obj)] != kNoLabel; }
    int at(int obj) const { return labels[static_cast<std::size_t>(obj)]; }
    bool less(int a, int b) const { return labels[a] < labels[b]; }

    static Labeling natural(LabelTarget t, std::vector<int> labels);
    static Labeling integers(LabelTarget t, std::vector<int> labels);
};

std::vector<std::string> validateLabeling(const Labeling& l, int objectCount);

// Induced order on `subset`, recompressed to a contiguous interval of the same
// kind. Natural labelings compress to 1..|subset|; integer labelings keep the
// sign class of every label (negatives end at -1, zero stays zero, positives
// start at 1), so the zero split point survives restriction.
Labeling restrictLabeling(const Labeling& l, const std::vector<int>& subset);

// Total order over dense positions; stands in for both the labeling order <
// and the well-ordering prec at finite scale. rank is a bijection onto 1..m.
struct Ordering {
    std::vector<int> rank;

    int size() const { return static_cast<int>(rank.size()); }
    bool less(int a, int b) const { return rank[a] < rank[b]; }

    static Ordering identity(int n);
    // positions listed from smallest to largest
    static Ordering fromSequence(const std::vector<int>& ascending);
    std::vector<int> ascendingSequence() const;
    Ordering reversed() const;
};

struct Partition {
    std::vector<std::vector<int>> blocks;  // block j (0-based) = class V_{j+1}

    int blockCount() const { return static_cast<int>(blocks.size()); }
    // blockOf[v] = 0-based block index, -1 if uncovered
    std::vector<int> blockOf(int n) const;
};

std::vector<std::string> validatePartition(const Partition& p, int n);

enum class WitnessKind {
    VertexPath,
    EdgePath,
    LoosePath,
    SkipIncreasingPath,
    TwoSidedPath,
    BranchingTree,
};

const char* witnessKindName(WitnessKind k);

// A found increasing structure together with everything needed to re-check it
// against its host graph and labeling. Witnesses are certificates: every
// searcher output must pass validateWitness.
struct IncreasingWitness {
    WitnessKind kind = WitnessKind::VertexPath;
    std::vector<int> vertexSeq;    // vertex positions in path order
    std::vector<int> edgeSeq;      // edge indices in path order
    std::vector<int> vertexLevel;  // BranchingTree: t(v), parallel to vertexSeq
    std::vector<int> edgeLevel;    // BranchingTree: t(e), parallel to edgeSeq
    std::vector<int> pivots;       // SkipIncreasingPath: v_0, v_1, ...

    // Edge-shaped witnesses report edge counts, vertex-shaped ones vertices.
    int length() const;
};

std::vector<std::string> validateWitness(const IncreasingWitness& w, const FiniteHypergraph& h,
                                         const Labeling& l);
std::vector<std::string> validateWitnessDigraph(const IncreasingWitness& w, const FiniteDigraph& d,
                                                const Labeling& l);

}  // namespace incpath
