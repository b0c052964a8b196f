#include <doctest.h>

#include <stdexcept>

#include "incpath/instance_gen.hpp"
#include "incpath/model.hpp"
#include "incpath/rng.hpp"

using namespace incpath;

namespace {

FiniteHypergraph triangle() { return FiniteHypergraph::dense(2, 3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("validate flags edges sharing two vertices under the simplicity flag") {
    auto h = FiniteHypergraph::dense(3, 4, {{0, 1, 2}, {0, 1, 3}});
    CHECK(validate(h, false).empty());
    auto bad = validate(h, true);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].find("share") != std::string::npos);
}

TEST_CASE("validate accepts a triangle and reports repeated vertices") {
    CHECK(validate(triangle(), true).empty());
    auto h = FiniteHypergraph::dense(3, 3, {{1, 2, 2}});
    auto bad = validate(h, false);
    REQUIRE(!bad.empty());
    CHECK(bad[0].find("repeated") != std::string::npos);
}

TEST_CASE("validate reports duplicates, arity and unknown-endpoint construction") {
    auto dup = FiniteHypergraph::dense(2, 3, {{0, 1}, {1, 0}});
    auto bad = validate(dup, false);
    REQUIRE(!bad.empty());
    CHECK(bad[0].find("duplicate") != std::string::npos);

    auto arity = FiniteHypergraph::dense(3, 4, {{0, 1}});
    CHECK(!validate(arity, false).empty());

    CHECK_THROWS_AS(FiniteHypergraph::fromExternal(2, {0, 1}, {{0, 7}}), std::domain_error);
}

TEST_CASE("co-degree validation mode") {
    // three edges through the same pair: co-degree 3
    auto h = FiniteHypergraph::dense(3, 5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    CHECK(validate(h, false).empty());
    CHECK(validate(h, false, 3).empty());
    CHECK(!validate(h, false, 2).empty());
}

TEST_CASE("digraph validation") {
    auto d = FiniteDigraph::dense(3, {{0, 1}, {0, 1}, {2, 2}});
    auto bad = validateDigraph(d);
    CHECK(bad.size() == 2);
}

TEST_CASE("restrictLabeling compresses natural labelings") {
    Labeling l = Labeling::natural(LabelTarget::Vertices, {1, 2, 3});
    auto r = restrictLabeling(l, {0, 2});
    CHECK(r.at(0) == 1);
    CHECK(r.at(2) == 2);
    CHECK(!r.has(1));
}

TEST_CASE("restrictLabeling keeps the zero split point of integer labelings") {
    Labeling l = Labeling::integers(LabelTarget::Vertices, {-1, 0, 1});
    auto full = restrictLabeling(l, {0, 1, 2});
    CHECK(full.at(0) == -1);
    CHECK(full.at(1) == 0);
    CHECK(full.at(2) == 1);

    // drop the zero: the negative stays at -1 and the positive recompresses to 1
    auto r = restrictLabeling(l, {0, 2});
    CHECK(r.at(0) == -1);
    CHECK(r.at(2) == 1);
    CHECK(!r.has(1));

    CHECK_THROWS_AS(restrictLabeling(r, {1}), std::domain_error);  // 1 left the domain
}

TEST_CASE("restrictLabeling is order-preserving on random subsets") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        int n = rng.intIn(2, 12);
        auto perm = rng.permutation(n);
        std::vector<int> labels(n);
        int lo = rng.intIn(-n, 0);
        for (int i = 0; i < n; ++i) labels[perm[i]] = lo + i;
        Labeling l = Labeling::integers(LabelTarget::Vertices, labels);
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if (rng.below(2)) subset.push_back(v);
        if (subset.empty()) continue;
        auto r = restrictLabeling(l, subset);
        for (int a : subset)
            for (int b : subset) {
                if (a == b) continue;
                CHECK((l.at(a) < l.at(b)) == (r.at(a) < r.at(b)));
                CHECK((l.at(a) < 0) == (r.at(a) < 0));
            }
    }
}

TEST_CASE("labeling factories reject malformed shapes") {
    CHECK_THROWS_AS(Labeling::natural(LabelTarget::Vertices, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Labeling::natural(LabelTarget::Vertices, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Labeling::integers(LabelTarget::Vertices, {-2, 1}), std::invalid_argument);
    CHECK_NOTHROW(Labeling::integers(LabelTarget::Vertices, {-1, 0, 1}));
}

TEST_CASE("ordering sequence round trip and reversal") {
    auto o = Ordering::fromSequence({2, 0, 1});
    CHECK(o.less(2, 0));
    CHECK(o.less(0, 1));
    auto rev = o.reversed();
    CHECK(rev.less(1, 0));
    CHECK(o.ascendingSequence() == std::vector<int>{2, 0, 1});
}

TEST_CASE("partition validation") {
    Partition p{{{0, 1}, {2}}};
    CHECK(validatePartition(p, 3).empty());
    Partition missing{{{0, 1}}};
    CHECK(!validatePartition(missing, 3).empty());
    Partition doubled{{{0, 1}, {1, 2}}};
    CHECK(!validatePartition(doubled, 3).empty());
}

TEST_CASE("vertex path witnesses recheck against host and labeling") {
    auto g = triangle();
    Labeling phi = Labeling::natural(LabelTarget::Vertices, {1, 2, 3});
    IncreasingWitness w;
    w.kind = WitnessKind::VertexPath;
    w.vertexSeq = {0, 1, 2};
    CHECK(validateWitness(w, g, phi).empty());
    w.vertexSeq = {0, 2, 1};  // labels 1,3,2: not increasing
    CHECK(!validateWitness(w, g, phi).empty());
    w.vertexSeq = {0, 0, 1};
    CHECK(!validateWitness(w, g, phi).empty());
}

TEST_CASE("two-sided witnesses need both sign classes") {
    auto g = FiniteHypergraph::dense(2, 4, {{0, 1}, {1, 2}, {2, 3}});
    Labeling phi = Labeling::integers(LabelTarget::Vertices, {-2, -1, 0, 1});
    IncreasingWitness w;
    w.kind = WitnessKind::TwoSidedPath;
    w.vertexSeq = {0, 1, 2, 3};
    CHECK(validateWitness(w, g, phi).empty());
    w.vertexSeq = {2, 3};
    CHECK(!validateWitness(w, g, phi).empty());
}

TEST_CASE("branching tree witness validation") {
    // 3-uniform, depth 2: root edge {0,1,2} rooted at 0, children for 1 and 2
    auto h = FiniteHypergraph::dense(3, 7, {{0, 1, 2}, {1, 3, 4}, {2, 5, 6}});
    Labeling phi = Labeling::natural(LabelTarget::Vertices, {1, 2, 3, 4, 5, 6, 7});
    IncreasingWitness w;
    w.kind = WitnessKind::BranchingTree;
    w.edgeSeq = {0, 1, 2};
    w.edgeLevel = {1, 2, 2};
    w.vertexSeq = {0, 1, 2, 3, 4, 5, 6};
    w.vertexLevel = {0, 1, 1, 2, 2, 2, 2};
    CHECK(validateWitness(w, h, phi).empty());

    // break level monotonicity: a level-2 label below a level-1 label
    Labeling bad = Labeling::natural(LabelTarget::Vertices, {1, 2, 7, 4, 5, 6, 3});
    CHECK(!validateWitness(w, h, bad).empty());

    // missing a child: not fully branched
    IncreasingWitness partial = w;
    partial.edgeSeq = {0, 1};
    partial.edgeLevel = {1, 2};
    partial.vertexSeq = {0, 1, 2, 3, 4};
    partial.vertexLevel = {0, 1, 1, 2, 2};
    CHECK(!validateWitness(partial, h, phi).empty());
}

TEST_CASE("loose path witness validation") {
    auto h = FiniteHypergraph::dense(3, 5, {{0, 1, 2}, {2, 3, 4}});
    Labeling phi = Labeling::natural(LabelTarget::Vertices, {1, 2, 3, 4, 5});
    IncreasingWitness w;
    w.kind = WitnessKind::LoosePath;
    w.edgeSeq = {0, 1};
    w.vertexSeq = {0, 1, 2, 3, 4};
    CHECK(validateWitness(w, h, phi).empty());
    w.edgeSeq = {0, 0};
    CHECK(!validateWitness(w, h, phi).empty());
}

TEST_CASE("directed witness validation follows arcs") {
    auto d = FiniteDigraph::dense(3, {{0, 1}, {1, 2}});
    Labeling phi = Labeling::natural(LabelTarget::Vertices, {1, 2, 3});
    IncreasingWitness w;
    w.kind = WitnessKind::VertexPath;
    w.vertexSeq = {0, 1, 2};
    CHECK(validateWitnessDigraph(w, d, phi).empty());
    w.vertexSeq = {2, 1};
    CHECK(!validateWitnessDigraph(w, d, phi).empty());
}
