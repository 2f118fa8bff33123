#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pcov/graph.hpp"

using namespace pcov;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.push_back({i - 1, i});
    return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.push_back({i - 1, i});
    es.push_back({n - 1, 0});
    return Graph::from_edges(n, es);
}

Graph spider(const std::vector<int>& legs) {
    std::vector<std::pair<int, int>> es;
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            es.push_back({prev, next});
            prev = next++;
        }
    }
    return Graph::from_edges(next, es);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph::from_edges(n, es);
}

}  // namespace

TEST_CASE("from_edges validates input") {
    CHECK_THROWS_AS(Graph::from_edges(0, {}), ConditionError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), ConditionError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), ConditionError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), ConditionError);

    Graph g = Graph::from_edges(3, {{2, 0}, {0, 1}});
    CHECK(g.n == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.adj[0] == std::vector<int>{1, 2});  // sorted adjacency
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
}

TEST_CASE("stats counts heavy and light vertices") {
    Graph g = spider({1, 1, 2});  // center 0 has degree 3
    GraphStats st = stats(g);
    CHECK(st.n == 5);
    CHECK(st.m == 4);
    CHECK(st.leaves == 3);
    CHECK(st.heavy_edges == 0);
    CHECK(st.heavy_vertices == std::vector<int>{0});
    CHECK(st.light_vertices.size() == 4);

    // Two adjacent heavy vertices make one heavy edge.
    Graph h = Graph::from_edges(
        8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {5, 6}, {5, 7}, {1, 7}});
    CHECK(stats(h).heavy_edges >= 1);
}

TEST_CASE("classify picks the most specific shape") {
    CHECK(classify(Graph::from_edges(1, {})) == Shape::path);  // single vertex
    CHECK(classify(path_graph(2)) == Shape::path);
    CHECK(classify(path_graph(5)) == Shape::path);
    CHECK(classify(cycle_graph(3)) == Shape::cycle);
    CHECK(classify(cycle_graph(6)) == Shape::cycle);
    CHECK(classify(spider({1, 1, 1})) == Shape::star);
    CHECK(classify(spider({2, 2, 2})) == Shape::generalized_star);
    CHECK(classify(spider({2, 2, 2, 2})) == Shape::generalized_star);
    // Unequal vines: just a tree, not a generalized star.
    CHECK(classify(spider({1, 1, 2})) == Shape::tree);
    // Several heavy vertices: a tree as well.
    Graph two_heavy = Graph::from_edges(
        8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {5, 6}, {5, 7}});
    CHECK(classify(two_heavy) == Shape::tree);
    Graph forest2 = Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}});
    CHECK(classify(forest2) == Shape::forest);
    CHECK(classify(complete(4)) == Shape::connected_other);
    Graph two_triangles =
        Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(classify(two_triangles) == Shape::disconnected_other);
    CHECK(std::string(shape_name(Shape::generalized_star)) == "generalized_star");
}

TEST_CASE("vines walk from leaves to the first heavy vertex") {
    Graph g = spider({2, 2, 2});
    auto vs = vines(g);
    REQUIRE(vs.size() == 3);
    for (const auto& v : vs) {
        CHECK(v.vertices.size() == 2);
        CHECK(v.center == 0);
        CHECK(g.degree(v.vertices.front()) == 1);  // leaf first
    }
    CHECK_THROWS_AS(vines(path_graph(4)), ShapeError);
    CHECK_THROWS_AS(vines(cycle_graph(5)), ShapeError);
}

TEST_CASE("complement flips every non-edge") {
    Graph k23 = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    Graph c = complement(k23);
    // Complement of K_{2,3} is K_2 on {0,1} plus K_3 on {2,3,4}.
    CHECK(c.edge_count() == 4);
    CHECK(c.has_edge(0, 1));
    CHECK(c.has_edge(2, 3));
    CHECK(c.has_edge(2, 4));
    CHECK(c.has_edge(3, 4));
    CHECK(complement(c) == k23);
}

TEST_CASE("connectivity and tree predicates") {
    CHECK(is_connected(path_graph(6)));
    CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK(is_tree(spider({1, 2, 3})));
    CHECK_FALSE(is_tree(cycle_graph(4)));
    CHECK_FALSE(is_tree(Graph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK(is_tree(Graph::from_edges(1, {})));
}

TEST_CASE("edge list text round-trips") {
    Graph g = spider({2, 1, 3});
    Graph back = parse_edge_list(to_edge_list(g));
    CHECK(back == g);

    Graph h = parse_edge_list("# comment\n n 4 \n0 1\n\n2 3\n");
    CHECK(h.n == 4);
    CHECK(h.edge_count() == 2);

    // Headerless form takes n from the largest endpoint.
    Graph k = parse_edge_list("0 1\n1 2\n");
    CHECK(k.n == 3);

    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 zebra\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
}

TEST_CASE("graph6 round-trips and is detected") {
    for (const Graph& g : {path_graph(1), path_graph(2), path_graph(7), cycle_graph(5),
                           complete(4), spider({1, 1, 2}), complete(12)}) {
        std::string s = to_graph6(g);
        CHECK(looks_like_graph6(s));
        CHECK(parse_graph6(s) == g);
    }
    CHECK_FALSE(looks_like_graph6("n 4\n0 1\n"));
    CHECK_FALSE(looks_like_graph6(""));
    CHECK_THROWS_AS(parse_graph6("\x01"), ParseError);

    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < 63; ++i) es.push_back({i - 1, i});
    CHECK_THROWS_AS(to_graph6(Graph::from_edges(63, es)), Error);
}

TEST_CASE("dot export carries labels and highlighted paths") {
    Graph g = path_graph(3);
    std::string plain = to_dot(g);
    CHECK(plain.find("graph g {") != std::string::npos);
    CHECK(plain.find("0 -- 1") != std::string::npos);

    std::vector<std::string> labels = {"a", "b", "c"};
    std::string with_labels = to_dot(g, &labels);
    CHECK(with_labels.find("label=\"b\"") != std::string::npos);

    std::vector<std::vector<int>> cover = {{0, 1, 2}};
    std::string with_paths = to_dot(g, nullptr, &cover);
    CHECK(with_paths.find("penwidth") != std::string::npos);
}
