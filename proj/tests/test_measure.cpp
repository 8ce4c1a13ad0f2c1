#include <cmath>

#include "doctest.h"

#include "hyperricci/errors.hpp"
#include "hyperricci/measure.hpp"

using namespace hyperricci;

namespace {

WeightedGraph star_graph() {
    return WeightedGraph(4, {{0, 1, 1.0}, {0, 2, 2.0}, {0, 3, 3.0}});
}

}  // namespace

TEST_CASE("node measure splits mass between center and neighbors") {
    WeightedGraph g = star_graph();
    ProbabilityMeasure m = node_measure(g, 0, 0.5, 0.0);
    REQUIRE(m.ids == std::vector<int>{0, 1, 2, 3});
    CHECK(m.mass[0] == doctest::Approx(0.5));
    for (int i = 1; i < 4; ++i) CHECK(m.mass[i] == doctest::Approx(0.5 / 3));
    CHECK(m.total() == doctest::Approx(1.0));
}

TEST_CASE("node measure weighs neighbors by exp(-w^p)") {
    WeightedGraph g = star_graph();
    ProbabilityMeasure m = node_measure(g, 0, 0.0, 1.0);
    REQUIRE(m.ids == std::vector<int>{1, 2, 3});
    double z = std::exp(-1.0) + std::exp(-2.0) + std::exp(-3.0);
    CHECK(m.mass[0] == doctest::Approx(std::exp(-1.0) / z));
    CHECK(m.mass[2] == doctest::Approx(std::exp(-3.0) / z));
    CHECK(m.total() == doctest::Approx(1.0));
}

TEST_CASE("node measure corner cases") {
    WeightedGraph g = star_graph();
    ProbabilityMeasure point = node_measure(g, 0, 1.0, 1.0);
    REQUIRE(point.ids == std::vector<int>{0});
    CHECK(point.mass[0] == 1.0);

    WeightedGraph lonely(2, {});
    CHECK_THROWS_AS(node_measure(lonely, 0, 0.5, 1.0), InputError);
    CHECK_NOTHROW(node_measure(lonely, 0, 1.0, 1.0));

    CHECK_THROWS_AS(node_measure(g, 0, -0.1, 1.0), InputError);
    CHECK_THROWS_AS(node_measure(g, 0, 1.5, 1.0), InputError);
    CHECK_THROWS_AS(node_measure(g, 0, 0.5, -1.0), InputError);
}

TEST_CASE("node measure falls back to uniform when every term underflows") {
    WeightedGraph g(3, {{0, 1, 900.0}, {0, 2, 1200.0}});
    bool fallback = false;
    ProbabilityMeasure m = node_measure(g, 0, 0.0, 1.0, &fallback);
    CHECK(fallback);
    REQUIRE(m.ids == std::vector<int>{1, 2});
    CHECK(m.mass[0] == doctest::Approx(0.5));
    CHECK(m.mass[1] == doctest::Approx(0.5));
}

TEST_CASE("star measure is proportional to hyperedge weights") {
    std::vector<int> star = {0, 2, 5};
    std::vector<double> w = {2.0, 1.0, 1.0, 1.0, 1.0, 3.0};
    ProbabilityMeasure m = edge_measure(star, w);
    REQUIRE(m.ids == star);
    CHECK(m.mass[0] == doctest::Approx(2.0 / 6.0));
    CHECK(m.mass[1] == doctest::Approx(1.0 / 6.0));
    CHECK(m.mass[2] == doctest::Approx(3.0 / 6.0));
}

TEST_CASE("reduced star measure drops hyperedges containing the far node") {
    Hypergraph h(4, {{0, 1}, {0, 2}, {0, 1, 3}, {1, 2}});
    std::vector<double> w(4, 1.0);
    ProbabilityMeasure m = edge_measure_reduced(h, w, 0, 1);
    REQUIRE(m.ids == std::vector<int>{1});  // only {0,2} avoids node 1
    CHECK(m.mass[0] == doctest::Approx(1.0));

    ProbabilityMeasure empty = edge_measure_reduced(h, w, 2, 0);
    bool no_support = empty.ids.empty();
    CHECK_FALSE(no_support);  // {1,2} avoids node 0

    Hypergraph pair(2, {{0, 1}});
    ProbabilityMeasure none = edge_measure_reduced(pair, {1.0}, 0, 1);
    CHECK(none.ids.empty());
}
