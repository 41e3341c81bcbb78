#include "doctest.h"
#include "rtdg/coloring.hpp"
#include "rtdg/graph.hpp"

using namespace rtdg;

namespace {

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

} // namespace

TEST_CASE("exact chromatic numbers of standard graphs") {
    for (int n : {2, 4, 6}) {
        ChromaticResult res = chromatic_number_exact(complete(n));
        CHECK(res.exact);
        CHECK(res.lower == n);
        CHECK(res.upper == n);
        CHECK(is_proper_coloring(complete(n), res.witness));
        CHECK(res.witness.color_count == n);
    }

    Graph two_edges(4, {{0, 1}, {2, 3}});
    ChromaticResult res = chromatic_number_exact(two_edges);
    CHECK(res.exact);
    CHECK(res.upper == 2);

    ChromaticResult c4 = chromatic_number_exact(cycle(4));
    CHECK(c4.exact);
    CHECK(c4.upper == 2);

    ChromaticResult empty = chromatic_number_exact(Graph(3));
    CHECK(empty.exact);
    CHECK(empty.upper == 1);
}

TEST_CASE("odd cycles need branch and bound to close the clique gap") {
    // Greedy clique gives 2, DSATUR gives 3; exactness requires proving no
    // 2-coloring exists.
    for (int n : {5, 7, 9}) {
        ChromaticResult res = chromatic_number_exact(cycle(n));
        CHECK(res.exact);
        CHECK(res.upper == 3);
        CHECK(is_proper_coloring(cycle(n), res.witness));
        CHECK(res.nodes > 0);
    }
}

TEST_CASE("clique and DSATUR bounds are sound") {
    CHECK(greedy_clique_lower_bound(complete(5)) == 5);
    CHECK(greedy_clique_lower_bound(cycle(6)) == 2);
    CHECK(greedy_clique_lower_bound(Graph(3)) == 1);

    Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    Coloring c = dsatur_coloring(k33);
    CHECK(is_proper_coloring(k33, c));
    CHECK(c.color_count == 2);
}

TEST_CASE("budget exhaustion yields honest bounds instead of answers") {
    ColoringLimits tiny;
    tiny.max_component_vertices = 3;
    ChromaticResult res = chromatic_number_exact(cycle(5), tiny);
    CHECK(!res.exact);
    CHECK(res.lower >= 2);
    CHECK(res.upper >= res.lower);
    CHECK(res.upper <= 3);

    ColoringLimits no_nodes;
    no_nodes.node_budget = 0;
    ChromaticResult res2 = chromatic_number_exact(cycle(5), no_nodes);
    CHECK(!res2.exact);
    CHECK(res2.lower == 2);
    CHECK(res2.upper == 3);
}

TEST_CASE("multi-component graphs color as the max over components") {
    // K_4 plus C_5 plus an isolated vertex.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) edges.emplace_back(i, j);
    }
    for (int i = 0; i < 5; ++i) edges.emplace_back(4 + i, 4 + (i + 1) % 5);
    Graph g(10, std::move(edges));
    ChromaticResult res = chromatic_number_exact(g);
    CHECK(res.exact);
    CHECK(res.upper == 4);
    CHECK(is_proper_coloring(g, res.witness));
}

TEST_CASE("distance graphs hit their closed-form chromatic numbers") {
    DistanceGraph a = build_distance_graph(SpaceSpec::zq(2, 3), DistanceSet::parse("1,2"));
    ChromaticResult ra = chromatic_number_exact(a.graph);
    CHECK(ra.exact);
    CHECK(ra.upper == 4);

    DistanceGraph b = build_distance_graph(SpaceSpec::sn(3), DistanceSet::parse("2,3"));
    ChromaticResult rb = chromatic_number_exact(b.graph);
    CHECK(rb.exact);
    CHECK(rb.upper == 6);

    DistanceGraph c = build_distance_graph(SpaceSpec::zq(3, 4), DistanceSet::parse("1,3"));
    ChromaticResult rc = chromatic_number_exact(c.graph);
    CHECK(rc.exact);
    CHECK(rc.upper == 9);
    CHECK(is_proper_coloring(c.graph, rc.witness));
}

TEST_CASE("proper coloring validation") {
    Graph g = cycle(4);
    Coloring good{{0, 1, 0, 1}, 2};
    CHECK(is_proper_coloring(g, good));
    Coloring bad{{0, 0, 1, 1}, 2};
    CHECK(!is_proper_coloring(g, bad));
    Coloring wrong_size{{0, 1}, 2};
    CHECK(!is_proper_coloring(g, wrong_size));
}
