#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pcov/graph.hpp"
#include "pcov/oracle.hpp"
#include "pcov/path_cover.hpp"

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

// Triangle whose corners each carry three pendant leaves.
Graph triangle_with_leaves() {
    std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}, {2, 0}};
    int next = 3;
    for (int v = 0; v < 3; ++v)
        for (int i = 0; i < 3; ++i) es.push_back({v, next++});
    return Graph::from_edges(next, es);
}

}  // namespace

TEST_CASE("validate_covering checks coverage, disjointness and adjacency") {
    Graph g = path_graph(4);
    std::string why;

    PathCovering ok{{{0, 1, 2, 3}}, 4};
    CHECK(validate_covering(g, ok, &why));

    PathCovering missing{{{0, 1, 2}}, 4};
    CHECK_FALSE(validate_covering(g, missing, &why));

    PathCovering repeated{{{0, 1}, {1, 2, 3}}, 4};
    CHECK_FALSE(validate_covering(g, repeated, &why));

    PathCovering nonadjacent{{{0, 2}, {1, 3}}, 4};
    CHECK_FALSE(validate_covering(g, nonadjacent, &why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("path_sequence sorts sizes ascending") {
    PathCovering c{{{4}, {0, 1, 2}, {5, 6}}, 7};
    CHECK(path_sequence(c) == PathSequence{1, 2, 3});
}

TEST_CASE("tree_path_cover on pinned shapes") {
    auto check_tree = [](const Graph& t, int expected) {
        TreeCoverResult r = tree_path_cover(t);
        CHECK(r.p == expected);
        std::string why;
        CHECK(validate_covering(t, r.witness, &why));
        CHECK(static_cast<int>(r.witness.paths.size()) == r.p);
    };
    check_tree(Graph::from_edges(1, {}), 1);
    check_tree(path_graph(2), 1);
    check_tree(path_graph(9), 1);
    check_tree(spider({1, 1, 1}), 2);        // star on 4 vertices
    check_tree(spider({1, 1, 1, 1, 1}), 4);  // star on 6 vertices: leaves-1
    check_tree(spider({2, 2, 2}), 2);
    check_tree(spider({1, 1, 2}), 2);
    CHECK_THROWS_AS(tree_path_cover(cycle_graph(4)), ShapeError);
}

TEST_CASE("tree_path_cover equals the oracle on every labeled tree up to n=7") {
    for (int n = 1; n <= 7; ++n) {
        enumerate_trees(n, [&](const Graph& t) {
            CHECK(tree_path_cover(t).p == oracle_path_cover(t).p);
            return true;
        });
    }
}

TEST_CASE("formula_bounds bracket the count") {
    Graph t = spider({2, 2, 2});
    CoverBounds b = formula_bounds(t);
    CHECK(b.lower == 2);  // 3 leaves, 0 heavy edges
    CHECK(b.upper == 2);
    CHECK_THROWS_AS(formula_bounds(cycle_graph(5)), ShapeError);
    CHECK_THROWS_AS(formula_bounds(Graph::from_edges(1, {})), ShapeError);
}

TEST_CASE("2-sparse predicates") {
    CHECK(is_2_sparse(path_graph(5)));
    CHECK(is_2_sparse(spider({1, 1, 1})));
    Graph heavy_pair = Graph::from_edges(
        8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {5, 6}, {5, 7}});
    CHECK_FALSE(is_2_sparse(heavy_pair));  // 0-3 and 3-5 join heavy vertices
    CHECK(is_general_2_sparse(spider({1, 1, 1})));
    CHECK_FALSE(is_general_2_sparse(heavy_pair));
}

TEST_CASE("matching-form count agrees with the reduction when it applies") {
    // Two heavy vertices, adjacent, each with light neighbors: s and the
    // matching both come into play.
    Graph t = Graph::from_edges(
        8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {0, 6}, {6, 7}});
    Theorem7Result r = theorem7_path_cover(t);
    CHECK(r.p == tree_path_cover(t).p);
    CHECK(r.p == oracle_path_cover(t).p);
    CHECK(r.data.leaves == 5);
    CHECK(r.data.heavy_edges == 1);

    // A heavy vertex whose neighbors are all heavy violates the hypothesis.
    std::vector<std::pair<int, int>> es = {{0, 1}, {0, 2}, {0, 3}};
    int next = 4;
    for (int v = 1; v <= 3; ++v)
        for (int i = 0; i < 3; ++i) es.push_back({v, next++});
    Graph bad = Graph::from_edges(next, es);
    CHECK_THROWS_AS(theorem7_path_cover(bad), ConditionError);
    CHECK_THROWS_AS(theorem7_path_cover(cycle_graph(4)), ShapeError);
}

TEST_CASE("matching-form example with interacting heavy vertices") {
    // Heavy chain w-u-v-x where u and v each have exactly one light leaf:
    // s = {u, v} and they are adjacent, so the matching has size 1.
    Graph t = Graph::from_edges(12, {{0, 1},
                                     {1, 2},
                                     {2, 3},
                                     {0, 4},
                                     {0, 5},
                                     {0, 6},
                                     {1, 7},
                                     {2, 8},
                                     {3, 9},
                                     {3, 10},
                                     {3, 11}});
    REQUIRE(is_tree(t));
    Theorem7Result r = theorem7_path_cover(t);
    CHECK(r.data.s == 2);
    CHECK(r.data.t == 1);
    CHECK(r.data.leaves == 8);
    CHECK(r.data.heavy_edges == 3);
    CHECK(r.p == 5);
    CHECK(r.p == oracle_path_cover(t).p);
    CHECK(r.p == tree_path_cover(t).p);
}

TEST_CASE("degree-form count on pinned instances") {
    CHECK(theorem12_path_cover(triangle_with_leaves()) == 6);
    CHECK(theorem12_path_cover(path_graph(6)) == 1);
    CHECK_THROWS_AS(theorem12_path_cover(cycle_graph(5)), ConditionError);

    // Heavy vertex with only two light neighbors: hypothesis fails.
    Graph g = Graph::from_edges(
        7, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 4}, {1, 5}, {1, 6}});
    CHECK_THROWS_AS(theorem12_path_cover(g), ConditionError);

    CHECK_THROWS_AS(theorem12_path_cover(Graph::from_edges(4, {{0, 1}, {2, 3}})),
                    ConditionError);
}

TEST_CASE("expand_tree replaces edges by cliques") {
    Graph p3 = path_graph(3);
    Graph e = expand_tree(p3, {3, 4});
    CHECK(e.n == 6);  // 3 + 1 + 2 fresh vertices
    CHECK(e.edge_count() == 3 + 6);
    CHECK(e.has_edge(0, 1));
    CHECK(e.has_edge(0, 3));  // fresh vertex of the first clique
    CHECK(e.has_edge(1, 3));
    CHECK_THROWS_AS(expand_tree(p3, {3}), ConditionError);
    CHECK_THROWS_AS(expand_tree(p3, {1, 3}), ConditionError);
    CHECK_THROWS_AS(expand_tree(cycle_graph(3), {2, 2, 2}), ShapeError);
}

TEST_CASE("expansion count equals leaves-1 with a threaded witness") {
    Graph t = spider({1, 1, 2});
    std::vector<int> orders = {3, 2, 4, 2};
    REQUIRE(t.edge_count() == 4);
    Theorem13Result r = theorem13_path_cover(t, orders);
    CHECK(r.p == 2);  // three leaves
    std::string why;
    CHECK(validate_covering(r.expansion, r.witness, &why));
    CHECK(static_cast<int>(r.witness.paths.size()) == r.p);
    CHECK(oracle_path_cover(r.expansion).p == r.p);

    // Non-2-sparse trees are rejected.
    Graph heavy_pair = Graph::from_edges(
        8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {5, 6}, {5, 7}});
    std::vector<int> os7(7, 2);
    CHECK_THROWS_AS(theorem13_path_cover(heavy_pair, os7), ConditionError);
}

TEST_CASE("random expansions agree with the oracle") {
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 25) {
        std::uniform_int_distribution<int> base(2, 6);
        Graph t = random_tree(base(rng), rng);
        if (!is_2_sparse(t)) continue;
        std::uniform_int_distribution<int> ord(2, 4);
        std::vector<int> orders(t.edge_count());
        int total = t.n;
        for (int& q : orders) {
            q = ord(rng);
            total += q - 2;
        }
        if (total > 13) continue;
        ++done;
        Theorem13Result r = theorem13_path_cover(t, orders);
        CHECK(r.p == oracle_path_cover(r.expansion).p);
    }
}
