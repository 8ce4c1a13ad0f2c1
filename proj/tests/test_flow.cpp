#include <cmath>

#include "doctest.h"

#include "hyperricci/clustering.hpp"
#include "hyperricci/flow.hpp"
#include "hyperricci/generators.hpp"

using namespace hyperricci;

namespace {

FlowConfig edge_flow_config(int iterations) {
    FlowConfig cfg;
    cfg.method = FlowMethod::EdgeRicci;
    cfg.iterations = iterations;
    cfg.line_weighting = WeightingScheme::Uniform;
    cfg.curvature.variant = MeasureVariant::Reduced;
    cfg.keep_history = true;
    return cfg;
}

FlowConfig node_flow_config(int iterations) {
    FlowConfig cfg;
    cfg.method = FlowMethod::NodeRicci;
    cfg.iterations = iterations;
    cfg.clique_weighting = WeightingScheme::Uniform;
    cfg.curvature.alpha = 0.0;
    cfg.curvature.p = 0.0;
    cfg.keep_history = true;
    return cfg;
}

}  // namespace

TEST_CASE("edge flow on the two-level benchmark keeps three weight classes") {
    // frozen trajectory: gateway edge pinned at 2, internal binaries at 1,
    // gateway binaries start at a/(a-1) and then follow
    // w <- (4 + (a-2) w) / (2 + (a-2) w)
    for (int a : {3, 6}) {
        ToyModel t = gen_toy(a, 3);
        FlowState st = run_flow(t.h, edge_flow_config(4));
        REQUIRE(st.history.size() == 5);  // initial + 4 iterations
        double expected = 1.0;
        for (int l = 1; l <= 4; ++l) {
            expected = l == 1 ? double(a) / (a - 1)
                              : (4 + (a - 2) * expected) / (2 + (a - 2) * expected);
            for (int e = 0; e < t.h.num_edges(); ++e) {
                double w = st.history[l][e];
                if (t.edge_class[e] == 0) CHECK(w == doctest::Approx(2.0));
                if (t.edge_class[e] == 1) CHECK(w == doctest::Approx(expected));
                if (t.edge_class[e] == 2) CHECK(w == doctest::Approx(1.0));
            }
        }
    }
}

TEST_CASE("gateway binary weights converge to sqrt(2) when a = 4") {
    ToyModel t = gen_toy(4, 8);
    FlowState st = run_flow(t.h, edge_flow_config(40));
    for (int e = 0; e < t.h.num_edges(); ++e)
        if (t.edge_class[e] == 1)
            CHECK(st.hyperedge_weights[e] == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("node flow shrinks internal weights geometrically") {
    // with uniform initial weights and p = 0 the internal clique edges decay
    // by 1/(a-1) per iteration
    for (int a : {6, 10}) {
        ToyModel t = gen_toy(a, 3);
        FlowState st = run_flow(t.h, node_flow_config(5));
        REQUIRE(st.clique_history.size() == 6);
        WeightedGraph c = clique_expansion(t.h, WeightingScheme::Uniform);
        int internal = c.edge_index(1, 2);  // two non-gateway nodes of community 0
        REQUIRE(internal >= 0);
        for (int l = 1; l <= 5; ++l) {
            CHECK(st.clique_history[l][internal] ==
                  doctest::Approx(std::pow(1.0 / (a - 1), l)).epsilon(1e-9));
        }
    }
}

TEST_CASE("node flow first iteration on the a=6 benchmark") {
    ToyModel t = gen_toy(6, 3);
    FlowState st = run_flow(t.h, node_flow_config(1));
    WeightedGraph c = clique_expansion(t.h, WeightingScheme::Uniform);
    const auto& w = st.clique_history[1];
    CHECK(w[c.edge_index(1, 2)] == doctest::Approx(0.2));                      // internal
    CHECK(w[c.edge_index(t.gateway(0), 1)] == doctest::Approx(18.0 / 35.0));   // gateway-internal
    CHECK(w[c.edge_index(t.gateway(0), t.gateway(1))] == doctest::Approx(2.0));  // gateway-gateway
}

TEST_CASE("trimming the flowed benchmark recovers the communities") {
    ToyModel t = gen_toy(6, 3);
    FlowState st = run_flow(t.h, node_flow_config(5));
    // any threshold between the binary weight classes and the gateway edge
    double binary_max = 0.0, gateway = 0.0;
    for (int e = 0; e < t.h.num_edges(); ++e) {
        if (t.edge_class[e] == 0)
            gateway = st.hyperedge_weights[e];
        else
            binary_max = std::max(binary_max, st.hyperedge_weights[e]);
    }
    REQUIRE(binary_max < gateway);
    Clustering cl = trim_and_components(t.h, st.hyperedge_weights,
                                        binary_max + 0.25 * (gateway - binary_max));
    CHECK(cl.num_clusters == 3);
    CHECK(nmi(cl.labels, t.labels) == doctest::Approx(1.0));
}

TEST_CASE("history bookkeeping and determinism") {
    HsbmParams p;
    p.n = 20;
    p.k = 2;
    p.s_in = 3;
    p.n_in = 30;
    p.n_out = 6;
    p.s_out = 4;
    p.seed = 5;
    HsbmInstance inst = gen_hsbm(p);
    FlowConfig cfg;
    cfg.method = FlowMethod::EdgeRicci;
    cfg.iterations = 3;
    cfg.keep_history = true;
    FlowState a = run_flow(inst.h, cfg);
    FlowState b = run_flow(inst.h, cfg);
    CHECK(a.iterations_run == 3);
    CHECK_FALSE(a.timed_out);
    CHECK(a.history.front() == inst.h.edge_weights());
    CHECK(a.history.back() == a.hyperedge_weights);
    CHECK(a.hyperedge_weights == b.hyperedge_weights);  // bit-identical
    CHECK(a.iteration_seconds.size() == 3);
}

TEST_CASE("a tiny wall clock budget aborts the flow") {
    HsbmParams p;
    p.n = 60;
    p.k = 2;
    p.s_in = 4;
    p.n_in = 120;
    p.seed = 9;
    HsbmInstance inst = gen_hsbm(p);
    FlowConfig cfg;
    cfg.method = FlowMethod::NodeRicci;
    cfg.iterations = 50;
    cfg.max_seconds = 1e-6;
    FlowState st = run_flow(inst.h, cfg);
    CHECK(st.timed_out);
    CHECK(st.iterations_run < 50);
}
