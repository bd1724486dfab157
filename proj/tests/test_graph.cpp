#include "doctest.h"

#include <algorithm>

#include "jc/graph.hpp"
#include "jc/graph_io.hpp"

using namespace jc;

TEST_CASE("build_graph basics") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 0));
    CHECK_FALSE(p3.adjacent(0, 2));

    Graph k1 = Graph::from_edges(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    Graph dedup = Graph::from_edges(4, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(dedup.size() == 2);
}

TEST_CASE("build_graph rejections") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), error);
    CHECK_THROWS_AS(Graph(65), scale_error);
}

TEST_CASE("family degree sequences") {
    Graph c5 = cycle_graph(5);
    CHECK(c5.order() == 5);
    CHECK(c5.size() == 5);
    for (int v = 0; v < 5; ++v)
        CHECK(c5.degree(v) == 2);

    Graph s4 = star_graph(4);
    CHECK(s4.degree(0) == 4);
    for (int v = 1; v <= 4; ++v)
        CHECK(s4.degree(v) == 1);

    Graph n7 = null_graph(7);
    CHECK(n7.order() == 7);
    CHECK(n7.size() == 0);

    for (int n = 2; n <= 8; ++n) {
        auto deg = structure(path_graph(n)).degree_sequence;
        CHECK(std::count(deg.begin(), deg.end(), 1) == 2);
        CHECK(std::count(deg.begin(), deg.end(), 2) == n - 2);
    }
    for (int n = 1; n <= 8; ++n)
        for (int d : structure(complete_graph(n)).degree_sequence)
            CHECK(d == n - 1);

    CHECK_THROWS_AS(cycle_graph(2), error);
}

TEST_CASE("random_tree is a deterministic tree") {
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
        Graph t = random_tree(9, seed);
        CHECK(is_tree(t));
        CHECK(t == random_tree(9, seed));
    }
}

TEST_CASE("structure reports") {
    auto p4 = structure(path_graph(4));
    CHECK(p4.min_degree == 1);
    CHECK(p4.max_degree == 2);
    CHECK(p4.connected);
    CHECK(p4.bipartite);
    CHECK(p4.pendant_vertices == std::vector<int>{0, 3});
    CHECK(p4.internal_vertices == std::vector<int>{1, 2});

    auto c5 = structure(cycle_graph(5));
    CHECK(c5.min_degree == 2);
    CHECK(c5.max_degree == 2);
    CHECK(c5.connected);
    CHECK_FALSE(c5.bipartite);
    CHECK(c5.internal_vertices.size() == 5);

    auto s3 = structure(star_graph(3));
    CHECK(s3.diameter_path.size() == 3);
    CHECK(s3.diameter_path[1] == 0);  // centre in the middle

    auto two_comp = structure(Graph::from_edges(5, {{0, 1}, {2, 3}}));
    CHECK_FALSE(two_comp.connected);
    CHECK(two_comp.components.size() == 3);
    CHECK(two_comp.isolated_vertices == std::vector<int>{4});
}

TEST_CASE("edge list format") {
    Graph p3 = parse_graph("3 2\n0 1\n1 2\n", GraphFormat::edge_list);
    CHECK(p3 == path_graph(3));
    CHECK(serialize_graph(p3, GraphFormat::edge_list) == "3 2\n0 1\n1 2\n");

    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 2\n", GraphFormat::edge_list),
                         doctest::Contains("index out of range"), error);
    CHECK_THROWS_WITH_AS(parse_graph("x y\n", GraphFormat::edge_list),
                         doctest::Contains("malformed header"), error);
    CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1\n", GraphFormat::edge_list),
                         doctest::Contains("edge lines"), error);
}

TEST_CASE("graph6 format") {
    // K3 encoded by hand from the published bit layout: N(3) = 'B',
    // triangle bits 111 padded to 111000 -> 56 + 63 = 'w'.
    CHECK(serialize_graph(complete_graph(3), GraphFormat::graph6) == "Bw");
    CHECK(parse_graph("Bw", GraphFormat::graph6) == complete_graph(3));

    CHECK_THROWS_WITH_AS(parse_graph("D", GraphFormat::graph6),
                         doctest::Contains("truncated"), error);
    CHECK_THROWS_WITH_AS(parse_graph("B\x01", GraphFormat::graph6),
                         doctest::Contains("invalid"), error);
}

TEST_CASE("round-trip identity over a random corpus") {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(3 + static_cast<int>(seed % 10), 0.4, seed);
        for (auto format : {GraphFormat::edge_list, GraphFormat::graph6})
            CHECK(parse_graph(serialize_graph(g, format), format) == g);
    }
}

TEST_CASE("induced and without_edges") {
    Graph c5 = cycle_graph(5);
    Graph p4 = c5.induced(c5.vertex_mask() & ~bit(4));
    CHECK(p4 == path_graph(4));
    Graph p5 = c5.without_edges({{0, 4}});
    CHECK(p5.size() == 4);
    CHECK(is_tree(p5));
}
