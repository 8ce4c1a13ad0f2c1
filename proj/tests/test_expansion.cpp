#include <cmath>
#include <set>

#include "doctest.h"

#include "hyperricci/errors.hpp"
#include "hyperricci/expansion.hpp"
#include "hyperricci/generators.hpp"
#include "hyperricci/shortest_paths.hpp"

using namespace hyperricci;

TEST_CASE("jaccard index") {
    CHECK(jaccard({0, 1}, {1}) == doctest::Approx(0.5));
    CHECK(jaccard({0, 1, 2}, {2, 3}) == doctest::Approx(0.25));
    CHECK(jaccard({0, 1}, {0, 1}) == doctest::Approx(1.0));
    CHECK(jaccard({0}, {1}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(jaccard({}, {}), InputError);
}

TEST_CASE("clique expansion of the two-level benchmark") {
    ToyModel t = gen_toy(6, 4);
    WeightedGraph c = clique_expansion(t.h, WeightingScheme::Uniform);
    CHECK(c.num_nodes() == 24);
    CHECK(int(c.edges().size()) == 4 * 15 + 6);  // community cliques + gateway clique
    for (const auto& e : c.edges()) CHECK(e.w == 1.0);
}

TEST_CASE("clique expansion jaccard weights") {
    // x in two edges, y in one shared edge: J = 1/2, weight 2
    Hypergraph h(3, {{0, 1}, {0, 2}});
    WeightedGraph c = clique_expansion(h, WeightingScheme::Jaccard);
    CHECK(c.edge_weight(c.edge_index(0, 1)) == doctest::Approx(2.0));
}

TEST_CASE("line expansion of the two-level benchmark") {
    ToyModel t = gen_toy(6, 4);
    WeightedGraph l = line_expansion(t.h, WeightingScheme::Uniform);
    CHECK(l.num_nodes() == 61);
    // 60 intersecting binary pairs inside each community plus the gateway
    // edge meeting 5 binaries per community
    CHECK(int(l.edges().size()) == 4 * 60 + 4 * 5);
    int gw = t.h.num_edges() - 1;
    CHECK(l.degree(gw) == 20);
}

TEST_CASE("line expansion jaccard weights") {
    Hypergraph h(4, {{0, 1, 2}, {2, 3}});
    WeightedGraph l = line_expansion(h, WeightingScheme::Jaccard);
    REQUIRE(l.edges().size() == 1);
    CHECK(l.edge_weight(0) == doctest::Approx(4.0));  // J = 1/4
}

TEST_CASE("clique expansion equals line expansion of the dual") {
    // needs minimum degree 2 so the dual drops nothing
    Hypergraph h(6, {{0, 1, 2}, {1, 2, 3}, {3, 4}, {4, 5, 0}, {5, 1}});
    WeightedGraph c = clique_expansion(h, WeightingScheme::Uniform);
    WeightedGraph l = line_expansion(dual(h), WeightingScheme::Uniform);
    REQUIRE(c.num_nodes() == l.num_nodes());
    std::set<std::pair<int, int>> ce, le;
    for (const auto& e : c.edges()) ce.insert({e.u, e.v});
    for (const auto& e : l.edges()) le.insert({e.u, e.v});
    CHECK(ce == le);
}

TEST_CASE("expansion adjacency matches incidence products") {
    // A_C = I I^T - D_V and A_L = I^T I - D_e on supports
    Hypergraph h(5, {{0, 1, 2}, {2, 3}, {3, 4}, {0, 4}});
    WeightedGraph c = clique_expansion(h, WeightingScheme::Uniform);
    WeightedGraph l = line_expansion(h, WeightingScheme::Uniform);
    for (int u = 0; u < 5; ++u) {
        for (int v = u + 1; v < 5; ++v) {
            int shared = 0;
            for (int e : h.star(u))
                if (h.edge_contains(e, v)) ++shared;
            CHECK((c.edge_index(u, v) >= 0) == (shared > 0));
        }
    }
    for (int e = 0; e < h.num_edges(); ++e) {
        for (int f = e + 1; f < h.num_edges(); ++f) {
            int shared = 0;
            for (int v : h.edge(e))
                if (h.edge_contains(f, v)) ++shared;
            CHECK((l.edge_index(e, f) >= 0) == (shared > 0));
        }
    }
}

TEST_CASE("dijkstra distances") {
    // path 0-1-2 with a heavy shortcut 0-2
    WeightedGraph g(4, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 5.0}});
    std::vector<double> d = dijkstra(g, 0);
    CHECK(d[0] == 0.0);
    CHECK(d[1] == doctest::Approx(1.0));
    CHECK(d[2] == doctest::Approx(3.0));
    CHECK(std::isinf(d[3]));
}

TEST_CASE("metric oracle caches symmetric rows") {
    WeightedGraph g(5, {{0, 1, 0.5}, {1, 2, 0.5}, {2, 3, 1.5}, {3, 4, 0.25}});
    auto shared = std::make_shared<const WeightedGraph>(g);
    MetricOracle oracle(shared);
    CHECK(oracle.distance(0, 4) == doctest::Approx(2.75));
    CHECK(oracle.distance(4, 0) == doctest::Approx(2.75));
    const auto& row = oracle.row(2);
    CHECK(row[0] == doctest::Approx(1.0));
}
