#include "doctest.h"

#include "hyperricci/errors.hpp"
#include "hyperricci/generators.hpp"
#include "hyperricci/hypergraph.hpp"

using namespace hyperricci;

TEST_CASE("construction normalizes edges") {
    Hypergraph h(5, {{3, 1, 1, 3}, {0, 4}});
    CHECK(h.num_nodes() == 5);
    CHECK(h.num_edges() == 2);
    CHECK(h.edge(0) == std::vector<int>{1, 3});
    CHECK(h.edge(1) == std::vector<int>{0, 4});
    CHECK(h.edge_weight(0) == 1.0);
    CHECK(h.total_pins() == 4);
}

TEST_CASE("stars and degrees") {
    Hypergraph h(4, {{0, 1, 2}, {1, 2}, {2, 3}});
    CHECK(h.star(2) == std::vector<int>{0, 1, 2});
    CHECK(h.degree(2) == 3);
    CHECK(h.degree(3) == 1);
    CHECK(h.edge_contains(0, 1));
    CHECK_FALSE(h.edge_contains(2, 0));
}

TEST_CASE("validation rejects bad input") {
    CHECK_THROWS_AS(require_valid(Hypergraph(3, {{0, 5}})), InputError);
    CHECK_THROWS_AS(require_valid(Hypergraph(3, {{-1, 0}})), InputError);
    CHECK_THROWS_AS(require_valid(Hypergraph(3, {{}})), InputError);
    CHECK_THROWS_AS(require_valid(Hypergraph(3, {{0, 1}}, {-2.0})), InputError);
    CHECK_NOTHROW(require_valid(Hypergraph(3, {{0, 1, 2}})));
}

TEST_CASE("dual swaps nodes and edges") {
    // every node has degree >= 2, so nothing is dropped and the double dual
    // recovers the original edges
    Hypergraph h(4, {{0, 1, 2}, {1, 2}, {2, 3}, {0, 3}});
    std::vector<int> dropped;
    Hypergraph d = dual(h, &dropped);
    CHECK(dropped.empty());
    CHECK(d.num_nodes() == 4);  // one per edge of h
    CHECK(d.num_edges() == 4);  // one per node of h
    CHECK(d.edge(0) == std::vector<int>{0, 3});     // star of node 0
    CHECK(d.edge(2) == std::vector<int>{0, 1, 2});  // star of node 2
    Hypergraph dd = dual(d, &dropped);
    CHECK(dropped.empty());
    REQUIRE(dd.num_edges() == h.num_edges());
    for (int e = 0; e < h.num_edges(); ++e) CHECK(dd.edge(e) == h.edge(e));
}

TEST_CASE("dual drops nodes whose star is too small") {
    Hypergraph h(3, {{0, 1}, {1, 2}});  // nodes 0 and 2 have degree 1
    std::vector<int> dropped;
    Hypergraph d = dual(h, &dropped);
    CHECK(dropped == std::vector<int>{0, 2});
    REQUIRE(d.num_edges() == 1);
    CHECK(d.edge(0) == std::vector<int>{0, 1});
}

TEST_CASE("two-level benchmark hypergraph shape") {
    ToyModel t = gen_toy(6, 4);
    CHECK(t.h.num_nodes() == 24);
    CHECK(t.h.num_edges() == 4 * 15 + 1);
    int c[3] = {0, 0, 0};
    for (int k : t.edge_class) ++c[k];
    CHECK(c[0] == 1);
    CHECK(c[1] == 20);
    CHECK(c[2] == 40);
    // the gateway edge is the last one and holds one node per community
    const auto& gw = t.h.edge(t.h.num_edges() - 1);
    REQUIRE(gw.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(gw[i] == t.gateway(i));
    for (int v = 0; v < 24; ++v) CHECK(t.labels[v] == v / 6);
    CHECK_THROWS_AS(gen_toy(1, 3), InputError);
    CHECK_THROWS_AS(gen_toy(3, 1), InputError);
}
