#include <cmath>
#include <sstream>

#include "doctest.h"

#include "hyperricci/errors.hpp"
#include "hyperricci/experiments.hpp"

using namespace hyperricci;

TEST_CASE("method names") {
    CHECK(std::string(method_name(FlowMethod::NodeRicci)) == "node");
    CHECK(std::string(method_name(FlowMethod::EdgeRicci)) == "edge");
}

TEST_CASE("sweep csv format") {
    SweepRow row;
    row.s_in = 2;
    row.s_out = 6;
    row.n_out = 100;
    row.method = FlowMethod::EdgeRicci;
    row.seed = 42;
    row.nmi = 0.5;
    std::ostringstream os;
    write_sweep_csv(os, {row});
    CHECK(os.str() == "s_in,s_out,N_out,method,seed,nmi\n2,6,100,edge,42,0.5\n");
}

TEST_CASE("timing csv writes infinities as inf") {
    TimingRow a{20, FlowMethod::NodeRicci, 0, 1.25};
    TimingRow b{100, FlowMethod::NodeRicci, 1,
                std::numeric_limits<double>::infinity()};
    std::ostringstream os;
    write_timing_csv(os, {a, b});
    CHECK(os.str() == "K,method,rep,seconds\n20,node,0,1.25\n100,node,1,inf\n");
}

TEST_CASE("csv round trips bit-exactly, infinities included") {
    std::vector<SweepRow> sweep = {
        {2, 6, 100, FlowMethod::EdgeRicci, 42, 0.1},
        {5, 2, 0, FlowMethod::NodeRicci, 7, 1.0 / 3.0},
    };
    std::ostringstream so;
    write_sweep_csv(so, sweep);
    std::istringstream si(so.str());
    std::vector<SweepRow> back = read_sweep_csv(si);
    REQUIRE(back.size() == sweep.size());
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        CHECK(back[i].s_in == sweep[i].s_in);
        CHECK(back[i].s_out == sweep[i].s_out);
        CHECK(back[i].n_out == sweep[i].n_out);
        CHECK(back[i].method == sweep[i].method);
        CHECK(back[i].seed == sweep[i].seed);
        CHECK(back[i].nmi == sweep[i].nmi);
    }

    std::vector<TimingRow> timing = {
        {20, FlowMethod::NodeRicci, 0, 1.25},
        {100, FlowMethod::EdgeRicci, 1, std::numeric_limits<double>::infinity()},
        {60, FlowMethod::NodeRicci, 2, 0.2},
    };
    std::ostringstream to;
    write_timing_csv(to, timing);
    std::istringstream ti(to.str());
    std::vector<TimingRow> tback = read_timing_csv(ti);
    REQUIRE(tback.size() == timing.size());
    for (std::size_t i = 0; i < timing.size(); ++i) {
        CHECK(tback[i].k == timing[i].k);
        CHECK(tback[i].method == timing[i].method);
        CHECK(tback[i].rep == timing[i].rep);
        CHECK(tback[i].seconds == timing[i].seconds);
    }
}

TEST_CASE("csv readers reject malformed input") {
    std::istringstream bad_header("wrong\n");
    CHECK_THROWS_AS(read_sweep_csv(bad_header), InputError);
    std::istringstream bad_method(
        "s_in,s_out,N_out,method,seed,nmi\n2,6,0,both,1,0.5\n");
    CHECK_THROWS_AS(read_sweep_csv(bad_method), InputError);
    std::istringstream short_row("K,method,rep,seconds\n20,node,0\n");
    CHECK_THROWS_AS(read_timing_csv(short_row), InputError);
    std::istringstream bad_number("K,method,rep,seconds\n20,node,0,fast\n");
    CHECK_THROWS_AS(read_timing_csv(bad_number), InputError);
}

TEST_CASE("small nmi sweep runs every cell") {
    SweepSpec spec;
    spec.n = 20;
    spec.k = 2;
    spec.n_in = 30;
    spec.cells = {{2, 4, 0}, {2, 4, 5}};
    spec.seeds = {1, 2};
    spec.flow.iterations = 2;
    std::vector<SweepRow> rows = run_nmi_sweep(spec);
    REQUIRE(rows.size() == 2 * 2 * 2);  // cells x methods x seeds
    for (const auto& r : rows) {
        CHECK(r.nmi >= 0.0);
        CHECK(r.nmi <= 1.0);
    }
    std::vector<SweepRow> again = run_nmi_sweep(spec);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].nmi == again[i].nmi);
}

TEST_CASE("timing bench records every rep") {
    TimingSpec spec;
    spec.k_values = {3};
    spec.n = 12;
    spec.m = 8;
    spec.reps = 2;
    spec.seed = 5;
    std::vector<TimingRow> rows = run_timing_bench(spec);
    REQUIRE(rows.size() == 4);  // one K, two methods, two reps
    for (const auto& r : rows) {
        CHECK(r.seconds >= 0.0);
        CHECK(std::isfinite(r.seconds));
    }
}

TEST_CASE("timing bench marks timed out cells") {
    TimingSpec spec;
    spec.k_values = {6};
    spec.n = 40;
    spec.m = 30;
    spec.reps = 2;
    spec.cell_timeout_seconds = 1e-7;
    std::vector<TimingRow> rows = run_timing_bench(spec);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) CHECK(std::isinf(r.seconds));
}
