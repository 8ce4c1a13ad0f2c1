#pragma once

#include <vector>

#include "hyperricci/hypergraph.hpp"
#include "hyperricci/weighted_graph.hpp"

namespace hyperricci {

// Discrete probability measure; ids strictly increasing, masses > 0.
struct ProbabilityMeasure {
    std::vector<int> ids;
    std::vector<double> mass;

    double total() const;
};

// Measure around node x in a weighted graph: alpha at x, the rest spread over
// neighbors proportionally to exp(-w(x,u)^p) with the direct edge weight.
// When every neighbor term underflows, falls back to uniform over neighbors
// and sets *underflow_fallback.
ProbabilityMeasure node_measure(const WeightedGraph& g, int x, double alpha,
                                double p, bool* underflow_fallback = nullptr);

// Measure over a star: line-graph node per incident hyperedge, mass
// proportional to the hyperedge weight.
ProbabilityMeasure edge_measure(const std::vector<int>& star,
                                const std::vector<double>& edge_weights);

// Same but restricted to hyperedges containing x and avoiding y; may be empty.
ProbabilityMeasure edge_measure_reduced(const Hypergraph& h,
                                        const std::vector<double>& edge_weights,
                                        int x, int y);

}  // namespace hyperricci
