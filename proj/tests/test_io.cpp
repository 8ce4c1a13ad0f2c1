#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"

#include "hyperricci/errors.hpp"
#include "hyperricci/generators.hpp"
#include "hyperricci/io.hpp"

using namespace hyperricci;

#ifndef HYPERRICCI_TEST_DATA_DIR
#define HYPERRICCI_TEST_DATA_DIR "tests/data"
#endif

TEST_CASE("hypergraph parsing") {
    std::istringstream in(
        "# comment line\n"
        "a b c # w=2.5\n"
        "\n"
        "c d\n"
        "e e d\n"
        "lonely\n");
    ParsedHypergraph ph = parse_hypergraph(in);
    CHECK(ph.h.num_nodes() == 6);
    CHECK(ph.h.num_edges() == 3);
    CHECK(ph.node_names == std::vector<std::string>{"a", "b", "c", "d", "e", "lonely"});
    CHECK(ph.h.edge_weight(0) == doctest::Approx(2.5));
    CHECK(ph.h.edge_weight(1) == doctest::Approx(1.0));
    CHECK(ph.h.edge(2) == std::vector<int>{3, 4});  // duplicate token collapsed
    REQUIRE(ph.warnings.size() == 1);
    CHECK(ph.warnings[0].find("line 6") != std::string::npos);
}

TEST_CASE("hypergraph parsing rejects bad weights") {
    std::istringstream bad1("a b # w=zero\n");
    CHECK_THROWS_AS(parse_hypergraph(bad1), InputError);
    std::istringstream bad2("a b # w=-1\n");
    CHECK_THROWS_AS(parse_hypergraph(bad2), InputError);
    std::istringstream bad3("a b # w=1.5x\n");
    CHECK_THROWS_AS(parse_hypergraph(bad3), InputError);
}

TEST_CASE("hypergraph round trip") {
    Hypergraph h = gen_k_uniform(30, 12, 4, 7);
    std::vector<double> w(h.edge_weights());
    w[3] = 0.12345678901234567;
    Hypergraph hw(h.num_nodes(), h.edges(), w);
    std::ostringstream out;
    serialize_hypergraph(out, hw, numeric_names(30));
    std::istringstream in(out.str());
    ParsedHypergraph back = parse_hypergraph(in);
    REQUIRE(back.h.num_edges() == 12);
    for (int e = 0; e < 12; ++e) {
        std::vector<int> named;
        for (int v : back.h.edge(e)) named.push_back(std::stoi(back.node_names[v]));
        std::sort(named.begin(), named.end());
        CHECK(named == hw.edge(e));
        CHECK(back.h.edge_weight(e) == hw.edge_weight(e));  // bit exact
    }
}

TEST_CASE("label parsing") {
    std::vector<std::string> names = {"x", "y", "z"};
    std::istringstream ok("y red\nx blue\nz red\n");
    // label ids follow first appearance: red = 0, blue = 1
    CHECK(parse_labels(ok, names) == std::vector<int>{1, 0, 0});

    std::istringstream missing("x 1\ny 2\n");
    CHECK_THROWS_AS(parse_labels(missing, names), InputError);
    std::istringstream unknown("x 1\ny 2\nz 3\nw 4\n");
    CHECK_THROWS_AS(parse_labels(unknown, names), InputError);
    std::istringstream duplicate("x 1\ny 2\nz 3\nz 3\n");
    CHECK_THROWS_AS(parse_labels(duplicate, names), InputError);
}

TEST_CASE("zoo fixture loads") {
    ParsedHypergraph ph =
        load_hypergraph(std::string(HYPERRICCI_TEST_DATA_DIR) + "/zoo_hypergraph.txt");
    CHECK(ph.h.num_nodes() == 101);
    CHECK(ph.h.num_edges() == 42);
    CHECK(ph.h.total_pins() == 1716);  // 1717 minus the dropped one-node line
    REQUIRE(ph.warnings.size() == 1);
    std::vector<int> labels =
        load_labels(std::string(HYPERRICCI_TEST_DATA_DIR) + "/zoo_labels.txt",
                    ph.node_names);
    std::map<int, int> sizes;
    for (int l : labels) ++sizes[l];
    std::multiset<int> counts;
    for (auto& [l, c] : sizes) counts.insert(c);
    CHECK(counts == std::multiset<int>{4, 5, 8, 10, 13, 20, 41});
}

TEST_CASE("result bundle round trip") {
    ResultBundle r;
    r.method = "edge";
    r.weighting = "jaccard";
    r.agg = "max";
    r.solver = "sinkhorn:0.01";
    r.measure = "standard";
    r.alpha = 0.25;
    r.p = 2.0;
    r.iters = 7;
    r.tau_mode = "auto-nmi";
    r.tau = 0.75;
    r.num_clusters = 3;
    r.nmi_value = 0.875;
    r.graph_q = 0.125;
    r.hyper_q = 0.0625;
    r.seconds = 1.5;
    r.node_names = {"a", "b", "c"};
    r.labels = {0, 1, 1};
    r.hyperedge_weights = {1.0, 0.3333333333333333};
    ThresholdPoint pt;
    pt.tau = 0.3333333333333333;
    pt.num_clusters = 2;
    pt.graph_q = -0.0725;
    pt.hyper_q = 0.5;
    pt.nmi_value = -1.0;
    r.curve = {pt};

    std::string path = "result_roundtrip_tmp.json";
    save_result(path, r);
    ResultBundle s = load_result(path);
    std::remove(path.c_str());

    CHECK(s.method == r.method);
    CHECK(s.solver == r.solver);
    CHECK(s.alpha == r.alpha);
    CHECK(s.iters == r.iters);
    CHECK(s.tau == r.tau);
    CHECK(s.nmi_value == r.nmi_value);
    CHECK(s.node_names == r.node_names);
    CHECK(s.labels == r.labels);
    CHECK(s.hyperedge_weights == r.hyperedge_weights);
    REQUIRE(s.curve.size() == 1);
    CHECK(s.curve[0].tau == pt.tau);
    CHECK(s.curve[0].num_clusters == 2);
    CHECK(s.curve[0].graph_q == pt.graph_q);
}
