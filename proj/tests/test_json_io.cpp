#include <doctest.h>

#include <stdexcept>

#include "incpath/families.hpp"
#include "incpath/json_io.hpp"
#include "incpath/model.hpp"

using namespace incpath;

TEST_CASE("hypergraph JSON round trip") {
    auto h = halfGraph(3);
    auto back = hypergraphFromJson(hypergraphToJson(h));
    CHECK(back.k == h.k);
    CHECK(back.ids == h.ids);
    CHECK(back.edges == h.edges);
}

TEST_CASE("digraph JSON round trip and detection") {
    auto d = FiniteDigraph::dense(3, {{0, 1}, {1, 2}});
    auto text = digraphToJson(d);
    CHECK(looksLikeDigraph(text));
    CHECK_FALSE(looksLikeDigraph(hypergraphToJson(halfGraph(2))));
    auto back = digraphFromJson(text);
    CHECK(back.arcs == d.arcs);
}

TEST_CASE("labeling JSON round trip, both kinds") {
    auto h = halfGraph(2);
    auto nat = Labeling::natural(LabelTarget::Vertices, {2, 1, 4, 3});
    auto back = labelingFromJson(labelingToJson(nat, h.ids), h.ids);
    CHECK(back.labels == nat.labels);
    CHECK_FALSE(back.integerKind);

    auto intl = Labeling::integers(LabelTarget::Edges, {-1, 0, 1});
    auto eids = edgeObjectIds(3);
    auto back2 = labelingFromJson(labelingToJson(intl, eids), eids);
    CHECK(back2.labels == intl.labels);
    CHECK(back2.integerKind);

    CHECK_THROWS(labelingFromJson(R"({"target":"vertices","kind":"nat","map":{"99":1}})", h.ids));
    CHECK_THROWS(labelingFromJson(R"({"target":"vertices","kind":"nat","map":{"0":1,"1":1,"2":2,"3":3}})",
                                  h.ids));
}

TEST_CASE("ordering and partition JSON round trip") {
    auto h = halfGraph(2);
    auto o = Ordering::fromSequence({3, 1, 0, 2});
    auto back = orderingFromJson(orderingToJson(o, LabelTarget::Vertices, h.ids), h.ids);
    CHECK(back.rank == o.rank);

    Partition p{{{0, 2}, {1, 3}}};
    auto backP = partitionFromJson(partitionToJson(p, h.ids), h.ids);
    CHECK(backP.blocks == p.blocks);
}

TEST_CASE("edge list text round trip keeps ids, including isolated vertices") {
    auto simple = fromEdgeListText("1 2\n2 3\n");
    CHECK(simple.k == 2);
    CHECK(simple.edgeCount() == 2);
    CHECK(simple.ids == std::vector<ExternalId>{1, 2, 3});

    FiniteHypergraph g = FiniteHypergraph::fromExternal(2, {5, 9, 7, 3}, {{9, 5}, {9, 7}});
    auto back = fromEdgeListText(toEdgeListText(g));
    CHECK(back.ids == g.ids);
    CHECK(back.edges == g.edges);

    CHECK_THROWS_WITH_AS(fromEdgeListText("1 x\n"), doctest::Contains("line 1"), std::runtime_error);
    CHECK_THROWS_WITH_AS(fromEdgeListText("1 2 3\n"), doctest::Contains("line 1"), std::runtime_error);
}

TEST_CASE("canonical to edge-list and back is the identity on 2-uniform graphs") {
    for (int n : {1, 3, 5}) {
        auto g = halfGraph(n);
        auto back = fromEdgeListText(toEdgeListText(g));
        CHECK(back.ids == g.ids);
        CHECK(back.edges == g.edges);
    }
}

TEST_CASE("DOT export") {
    auto k3 = FiniteHypergraph::dense(2, 3, {{0, 1}, {1, 2}, {0, 2}});
    auto dot = toDot(k3);
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    auto d = FiniteDigraph::dense(2, {{0, 1}});
    CHECK(toDotDigraph(d).find("0 -> 1") != std::string::npos);
    auto three = FiniteHypergraph::dense(3, 3, {{0, 1, 2}});
    CHECK_THROWS(toDot(three));
}

TEST_CASE("witness JSON carries kind and length") {
    auto h = halfGraph(2);
    IncreasingWitness w;
    w.kind = WitnessKind::VertexPath;
    w.vertexSeq = {0, 1};
    auto js = witnessToJson(w, h.ids);
    CHECK(js.find("vertex-path") != std::string::npos);
    CHECK(js.find("\"length\": 2") != std::string::npos);
    CHECK(noneWitnessJson(true).find("none") != std::string::npos);
}

TEST_CASE("malformed JSON reports a parse error") {
    CHECK_THROWS_WITH_AS(hypergraphFromJson("{nope"), doctest::Contains("parse error"),
                         std::runtime_error);
}

TEST_CASE("content hash is stable") {
    CHECK(contentHash("abc") == contentHash("abc"));
    CHECK(contentHash("abc") != contentHash("abd"));
}
