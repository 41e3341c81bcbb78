#include <string>

#include "doctest.h"
#include "rtdg/errors.hpp"
#include "rtdg/expr.hpp"
#include "rtdg/graph.hpp"
#include "rtdg/graph_io.hpp"

using namespace rtdg;

TEST_CASE("json round-trip preserves the document") {
    DistanceGraph dg = build_distance_graph(SpaceSpec::zq(2, 2), DistanceSet::parse("2"));
    GraphDocument doc = GraphDocument::from_distance_graph(dg);
    doc.expr = expr_to_string(expr_for_space(dg.space, dg.distances));

    std::string text = document_to_json(doc, /*pretty=*/true);
    GraphDocument back = document_from_json(text);

    REQUIRE(back.space.has_value());
    CHECK(*back.space == dg.space);
    CHECK(back.distances.values() == dg.distances.values());
    CHECK(back.labels == doc.labels);
    CHECK(back.expr == doc.expr);
    CHECK(back.graph.vertex_count() == dg.graph.vertex_count());
    CHECK(back.graph.edges() == dg.graph.edges());

    // Serialization is a fixed point after one round-trip.
    CHECK(document_to_json(back, true) == text);
    CHECK(document_to_json(back, false) == document_to_json(doc, false));
}

TEST_CASE("json field layout is stable") {
    DistanceGraph dg = build_distance_graph(SpaceSpec::sn(3), DistanceSet::parse("2,3"));
    std::string text = document_to_json(GraphDocument::from_distance_graph(dg), false);
    // Keys appear in insertion order: identity before bulk data.
    auto pos = [&](const std::string& key) { return text.find("\"" + key + "\""); };
    CHECK(pos("space") != std::string::npos);
    CHECK(pos("space") < pos("distances"));
    CHECK(pos("distances") < pos("vertex_count"));
    CHECK(pos("vertex_count") < pos("labels"));
    CHECK(pos("labels") < pos("edges"));
    CHECK(text.find("\"sn:n=3\"") != std::string::npos);
}

TEST_CASE("labels carry point text") {
    DistanceGraph dg = build_distance_graph(SpaceSpec::zq(2, 2), DistanceSet::parse("1"));
    GraphDocument doc = GraphDocument::from_distance_graph(dg);
    REQUIRE(doc.labels.size() == 4);
    CHECK(doc.labels[0].to_string() == "0,0");
    CHECK(doc.labels[1].to_string() == "1,0");
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(document_from_json("not json"), ParseError);
    CHECK_THROWS_AS(document_from_json("{}"), ParseError);
    CHECK_THROWS_AS(document_from_json(R"({"vertex_count": 2, "edges": [[0, 5]]})"), Error);
    CHECK_THROWS_AS(
        document_from_json(
            R"({"space": "zq:q=2,n=2", "vertex_count": 4, "labels": [[0, 0]], "edges": []})"),
        ParseError);
    CHECK_THROWS_AS(
        document_from_json(R"({"vertex_count": 2, "labels": [[0], [1]], "edges": []})"),
        ParseError);
}

TEST_CASE("dot export names vertices by their labels") {
    DistanceGraph dg = build_distance_graph(SpaceSpec::zq(2, 2), DistanceSet::parse("2"));
    std::string dot = document_to_dot(GraphDocument::from_distance_graph(dg));
    CHECK(dot.find("graph distance_graph {") != std::string::npos);
    CHECK(dot.find("label=\"0,0\"") != std::string::npos);
    CHECK(dot.find("0 -- 2;") != std::string::npos);
    CHECK(dot.rfind("}\n") == dot.size() - 2);
}

TEST_CASE("documents without a space still serialize") {
    GraphDocument doc;
    doc.graph = Graph(3, {{0, 1}});
    std::string text = document_to_json(doc, false);
    GraphDocument back = document_from_json(text);
    CHECK(!back.space.has_value());
    CHECK(back.graph.vertex_count() == 3);
    CHECK(back.graph.edge_count() == 1);
}
