#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcov/graph.hpp"
#include "pcov/labeling.hpp"
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

Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph::from_edges(n, es);
}

Graph k23() {
    return Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

Graph k5_plus_k2() {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) es.push_back({u, v});
    es.push_back({5, 6});
    return Graph::from_edges(7, es);
}

}  // namespace

TEST_CASE("labeling accessors: span, islands, holes") {
    Labeling f{{1, 3, 0, 2}};
    CHECK(f.span() == 3);
    CHECK(f.holes() == 0);
    CHECK(f.islands() == std::vector<Island>{{0, 3}});
    CHECK(f.island_sequence() == IslandSequence{4});

    Labeling g{{0, 1, 3, 4, 5}};  // hole at 2, islands {0,1} and {3,4,5}
    CHECK(g.span() == 5);
    CHECK(g.holes() == 1);
    CHECK(g.islands() == std::vector<Island>{{0, 1}, {3, 5}});
    CHECK(g.island_sequence() == IslandSequence{2, 3});

    // Repeated labels count once.
    Labeling h{{0, 0, 2, 2}};
    CHECK(h.span() == 2);
    CHECK(h.holes() == 1);
    CHECK(h.island_sequence() == IslandSequence{1, 1});
}

TEST_CASE("distance-two validation catches both violation kinds") {
    Graph p3 = path_graph(3);
    CHECK_FALSE(validate_l21(p3, Labeling{{0, 2, 4}}).has_value());

    // Adjacent labels 1 apart.
    auto v1 = validate_l21(p3, Labeling{{0, 1, 3}});
    REQUIRE(v1.has_value());
    CHECK(v1->dist == 1);

    // Equal labels at distance two.
    auto v2 = validate_l21(p3, Labeling{{0, 2, 0}});
    REQUIRE(v2.has_value());
    CHECK(v2->dist == 2);
    CHECK(v2->u == 0);
    CHECK(v2->v == 2);

    // Wrong size or negative labels are rejected outright.
    CHECK_THROWS_AS(validate_l21(p3, Labeling{{0, 2}}), ConditionError);
    CHECK_THROWS_AS(validate_l21(p3, Labeling{{0, -2, 4}}), ConditionError);
}

TEST_CASE("a covering of the complement turns into a labeling") {
    // K_{2,3}: complement splits into K_2 + K_3, covered by paths (2, 3).
    Graph g = k23();
    Graph c = complement(g);
    OracleCoverResult oc = oracle_path_cover(c);
    REQUIRE(oc.p == 2);
    Labeling f = labeling_from_cover(g, oc.coverings.front());
    CHECK_FALSE(validate_l21(g, f).has_value());
    CHECK(f.span() == g.n + oc.p - 2);
    CHECK(f.holes() == oc.p - 1);
    CHECK(islands_of(f) == IslandSequence{2, 3});
}

TEST_CASE("resolver picks direct forms per component") {
    CHECK(resolve_path_cover(path_graph(6), {}).method == "path");
    CHECK(resolve_path_cover(cycle_graph(5), {}).method == "cycle");
    CHECK(resolve_path_cover(complete(5), {}).method == "complete");
    // K_5 splits off as a complete component, K_2 as a path component.
    CHECK(resolve_path_cover(k5_plus_k2(), {}).method.find("complete") !=
          std::string::npos);
    CHECK(resolve_path_cover(k5_plus_k2(), {}).p == 2);

    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CoverResolution r = resolve_path_cover(star, {});
    CHECK(r.p == 2);
    CHECK(r.method == "tree-reduction");

    // Triangle with three pendant leaves per corner: the degree form.
    std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}, {2, 0}};
    int next = 3;
    for (int v = 0; v < 3; ++v)
        for (int i = 0; i < 3; ++i) es.push_back({v, next++});
    Graph tri = Graph::from_edges(next, es);
    CoverResolution tr = resolve_path_cover(tri, {});
    CHECK(tr.p == 6);
    CHECK(tr.method == "degree-formula");
    std::string why;
    CHECK(validate_covering(tri, tr.witness, &why));

    // K_{2,3}: both heavy vertices have three light neighbors, so the degree
    // form applies and yields a single covering path.
    CoverResolution kr = resolve_path_cover(k23(), {});
    CHECK(kr.p == 1);
    CHECK(kr.p == oracle_path_cover(k23()).p);
    CHECK(kr.method == "degree-formula");

    // K_4 minus an edge: a heavy vertex has only two light neighbors, no
    // closed form applies, the search answers.
    Graph k4e = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CoverResolution sr = resolve_path_cover(k4e, {});
    CHECK(sr.p == 1);
    CHECK(sr.method == "search");

    // Mixed components combine and the tags join.
    Graph mix = Graph::from_edges(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 3},
                                      {6, 7}, {6, 8}, {7, 8}});
    CoverResolution mr = resolve_path_cover(mix, {});
    CHECK(mr.p == 3);
    CHECK(mr.method.find("path") != std::string::npos);
    CHECK(mr.method.find("cycle") != std::string::npos);
}

TEST_CASE("lambda and hole index of the complement, exact branch") {
    // The input graph plays the complement role: K_2 + K_3 has covering
    // count 2, so its complement K_{2,3} has span 5 and one hole.
    Graph host = complement(k23());
    LambdaRhoResult r = lambda_rho_of_complement(host, {});
    CHECK(r.exact);
    CHECK(r.p == 2);
    CHECK(r.lambda == 5);
    CHECK(r.rho == 1);
    REQUIRE(r.certificate.has_value());
    CHECK_FALSE(validate_l21(k23(), *r.certificate).has_value());
    CHECK(r.certificate->span() == 5);
    CHECK(r.certificate->holes() == 1);

    Graph host2 = complement(k5_plus_k2());
    LambdaRhoResult r2 = lambda_rho_of_complement(host2, {});
    CHECK(r2.exact);
    CHECK(r2.p == 3);
    CHECK(r2.lambda == 8);
    CHECK(r2.rho == 2);
}

TEST_CASE("lambda of the complement, single-path branch") {
    // A path's complement on few vertices: covering count 1, settled exactly
    // by the small search.
    LambdaRhoResult small = lambda_rho_of_complement(path_graph(5), {});
    CHECK(small.p == 1);
    CHECK(small.exact);
    CHECK(small.lambda <= 4);

    // Too big for the search: only the bound remains.
    LambdaRhoResult big = lambda_rho_of_complement(path_graph(30), {});
    CHECK(big.p == 1);
    CHECK_FALSE(big.exact);
    CHECK(big.lambda == 29);
}

TEST_CASE("labeling JSON round-trips") {
    Labeling f{{0, 2, 7, 4}};
    Labeling back = labeling_from_json(labeling_to_json(f));
    CHECK(back.labels == f.labels);
    CHECK(labeling_to_json(back) == labeling_to_json(f));
    CHECK_THROWS_AS(labeling_from_json("{"), ParseError);
    CHECK_THROWS_AS(labeling_from_json("{\"labels\": \"zebra\"}"), ParseError);
}
