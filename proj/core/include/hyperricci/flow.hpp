#pragma once

#include <string>
#include <vector>

#include "hyperricci/curvature.hpp"
#include "hyperricci/expansion.hpp"

namespace hyperricci {

enum class FlowMethod { NodeRicci, EdgeRicci };

struct FlowConfig {
    FlowMethod method = FlowMethod::NodeRicci;
    int iterations = 20;
    CurvatureConfig curvature;
    WeightingScheme clique_weighting = WeightingScheme::Jaccard;
    WeightingScheme line_weighting = WeightingScheme::Jaccard;
    bool keep_history = false;
    int threads = 1;
    double max_seconds = 0.0;  // wall clock budget, 0 = unlimited
};

struct FlowState {
    // Final hyperedge weights: flowed directly (edge transport) or aggregated
    // from the final clique-edge weights (node transport).
    std::vector<double> hyperedge_weights;
    // Node transport only: final clique-edge weights, aligned with the
    // returned clique graph's edge ids.
    std::vector<double> clique_edge_weights;
    // Entry 0 is the initial state, one entry per completed iteration after.
    std::vector<std::vector<double>> history;         // hyperedge weights
    std::vector<std::vector<double>> clique_history;  // clique-edge weights
    std::vector<double> iteration_seconds;
    int iterations_run = 0;
    bool timed_out = false;
    std::vector<std::string> warnings;
};

// Weights below this are clamped so measures stay well defined.
inline constexpr double kWeightFloor = 1e-12;

// Flows clique-edge weights with w <- (1 - kappa) * w computed from a full
// snapshot per iteration, then aggregates pair weights into hyperedge weights
// once at the end.
FlowState node_ricci_flow(const Hypergraph& h, const FlowConfig& cfg);

// Flows hyperedge weights; per iteration every adjacent node pair gets a
// curvature from star measures over the frozen line graph, per-hyperedge
// aggregation combines the pair curvatures, then all weights update at once.
FlowState edge_ricci_flow(const Hypergraph& h, const FlowConfig& cfg);

// Dispatch on cfg.method.
FlowState run_flow(const Hypergraph& h, const FlowConfig& cfg);

}  // namespace hyperricci
