#pragma once

#include <vector>

#include "hyperricci/hypergraph.hpp"
#include "hyperricci/measure.hpp"
#include "hyperricci/transport.hpp"

namespace hyperricci {

enum class Aggregation { Max, Average };
enum class MeasureVariant { Standard, Reduced };

struct SolverConfig {
    enum class Kind { Exact, Sinkhorn };
    Kind kind = Kind::Exact;
    double epsilon = 0.01;  // Sinkhorn accuracy
};

struct CurvatureConfig {
    double alpha = 0.5;
    double p = 1.0;
    Aggregation agg = Aggregation::Max;
    SolverConfig solver;
    MeasureVariant variant = MeasureVariant::Standard;  // edge transport only
};

// Aggregates per-pair values over a hyperedge. Average uses pairwise
// summation so the result does not depend on accumulation order quirks.
double aggregate(Aggregation agg, const std::vector<double>& values);

// W1 between two measures with costs from the oracle. Mass shared at common
// support points is settled in place first, which is exact for metric costs.
double measure_distance(const MetricOracle& oracle,
                        const ProbabilityMeasure& mu,
                        const ProbabilityMeasure& nu, const SolverConfig& solver);

// 1 - W(nu_x, nu_y) / w(x, y) for an edge (x, y) of the oracle's graph.
double node_ricci_pair(const MetricOracle& oracle, int x, int y,
                       const CurvatureConfig& cfg);

// 1 - W(mu_x, mu_y) / max shared hyperedge weight for hypergraph-adjacent
// x, y. Star measures live on the line graph behind line_oracle; hyperedge
// masses come from edge_weights. With the reduced variant, an empty reduced
// star on either side yields curvature 1.
double edge_ricci_pair(const Hypergraph& h, const MetricOracle& line_oracle,
                       const std::vector<double>& edge_weights, int x, int y,
                       const CurvatureConfig& cfg);

}  // namespace hyperricci
