#include <algorithm>
#include <set>

#include "doctest.h"
#include "rtdg/errors.hpp"
#include "rtdg/graph.hpp"

using namespace rtdg;

TEST_CASE("graph construction normalizes and validates edges") {
    Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);  // duplicate collapsed
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});

    CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);   // self-loop
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);   // out of range
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), Error);
}

TEST_CASE("sparse adjacency beyond the dense cutoff behaves identically") {
    int n = Graph::kDenseVertexLimit + 10;
    Graph g(n, {{0, 1}, {n - 2, n - 1}, {0, n - 1}});
    CHECK(g.has_edge(n - 1, n - 2));
    CHECK(g.has_edge(0, n - 1));
    CHECK(!g.has_edge(1, 2));
    CHECK(g.degree(n - 1) == 2);
}

TEST_CASE("distance graph on words differing at the top position is complete bipartite") {
    DistanceGraph dg = build_distance_graph(SpaceSpec::zq(2, 2), DistanceSet::parse("2"));
    // Enumeration: (0,0) (1,0) (0,1) (1,1); edges join distinct position-2 values.
    CHECK(dg.graph.vertex_count() == 4);
    CHECK(dg.graph.edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(dg.labels[3].coords() == std::vector<int>{1, 1});
}

TEST_CASE("frozen vertex, edge and degree counts") {
    DistanceGraph a = build_distance_graph(SpaceSpec::zq(2, 3), DistanceSet::parse("1,3"));
    CHECK(a.graph.vertex_count() == 8);
    CHECK(a.graph.edge_count() == 20);
    CHECK(is_regular(a.graph) == 5);

    DistanceGraph b = build_distance_graph(SpaceSpec::zq(3, 2), DistanceSet::parse("1,2"));
    CHECK(b.graph.vertex_count() == 9);
    CHECK(b.graph.edge_count() == 36);  // complete graph on the whole space
    CHECK(is_regular(b.graph) == 8);

    DistanceGraph c = build_distance_graph(SpaceSpec::sn(4), DistanceSet::parse("2,4"));
    CHECK(c.graph.vertex_count() == 24);
    CHECK(c.graph.edge_count() == 228);
    CHECK(is_regular(c.graph) == 19);

    DistanceGraph d = build_distance_graph(SpaceSpec::sn(3), DistanceSet::parse("3"));
    CHECK(d.graph.vertex_count() == 6);
    CHECK(d.graph.edge_count() == 12);
    CHECK(is_regular(d.graph) == 4);

    DistanceGraph e = build_distance_graph(SpaceSpec::product({2, 3, 2}), DistanceSet::parse("1,3"));
    CHECK(e.graph.vertex_count() == 12);
    CHECK(is_regular(e.graph) == 7);  // (2-1)·1 + (2-1)·6
}

TEST_CASE("empty distance set gives the edgeless graph") {
    DistanceGraph dg = build_distance_graph(SpaceSpec::zq(2, 3), DistanceSet());
    CHECK(dg.graph.vertex_count() == 8);
    CHECK(dg.graph.edge_count() == 0);
    CHECK(connected_components(dg.graph).component_count == 8);
    CHECK(is_regular(dg.graph) == 0);
}

TEST_CASE("component structure of word distance graphs") {
    DistanceGraph dg = build_distance_graph(SpaceSpec::zq(2, 3), DistanceSet::parse("1"));
    ComponentPartition parts = connected_components(dg.graph);
    CHECK(parts.component_count == 4);
    CHECK(parts.component_sizes == std::vector<int>{2, 2, 2, 2});
    // Pairs within a component differ only at position 1.
    CHECK(parts.component_id[0] == parts.component_id[1]);

    DistanceGraph top = build_distance_graph(SpaceSpec::zq(2, 3), DistanceSet::parse("3"));
    CHECK(connected_components(top.graph).component_count == 1);
}

TEST_CASE("distance graphs decompose as edge-disjoint unions over the distance set") {
    SpaceSpec spec = SpaceSpec::zq(2, 3);
    auto all = build_distance_graph(spec, DistanceSet::parse("1,3")).graph.edges();
    auto d1 = build_distance_graph(spec, DistanceSet::parse("1")).graph.edges();
    auto d3 = build_distance_graph(spec, DistanceSet::parse("3")).graph.edges();

    std::set<std::pair<int, int>> u(d1.begin(), d1.end());
    for (const auto& e : d3) CHECK(u.insert(e).second);  // disjoint
    CHECK(u.size() == all.size());
    CHECK(std::set<std::pair<int, int>>(all.begin(), all.end()) == u);
}

TEST_CASE("degree sequence and regularity detection") {
    Graph path(3, {{0, 1}, {1, 2}});
    CHECK(degree_sequence(path) == std::vector<int>{1, 2, 1});
    CHECK(!is_regular(path).has_value());

    Graph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(is_regular(cycle) == 2);
}

TEST_CASE("induced subgraph keeps exactly the inner edges") {
    DistanceGraph dg = build_distance_graph(SpaceSpec::zq(2, 3), DistanceSet::parse("1"));
    ComponentPartition parts = connected_components(dg.graph);
    std::vector<int> keep;
    for (int v = 0; v < dg.graph.vertex_count(); ++v) {
        if (parts.component_id[static_cast<std::size_t>(v)] == 0) keep.push_back(v);
    }
    Graph comp = induced_subgraph(dg.graph, keep);
    CHECK(comp.vertex_count() == 2);
    CHECK(comp.edge_count() == 1);
    CHECK(comp.has_edge(0, 1));

    Graph sub = induced_subgraph(dg.graph, {0, 2, 4});  // pairwise distance 2 or 3: no edges
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 0);
}

TEST_CASE("build refuses oversized spaces") {
    CHECK_THROWS_AS(build_distance_graph(SpaceSpec::zq(10, 6), DistanceSet::parse("1")),
                    SizeLimitError);
    CHECK_THROWS_AS(build_distance_graph(SpaceSpec::zq(2, 5), DistanceSet::parse("1"), 10),
                    SizeLimitError);
}
