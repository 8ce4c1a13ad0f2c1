#pragma once

#include <vector>

#include "hyperricci/flow.hpp"
#include "hyperricci/hypergraph.hpp"

namespace hyperricci {

struct Clustering {
    std::vector<int> labels;  // contiguous ids in order of first appearance
    int num_clusters = 0;
};

// Keeps hyperedges with weight <= tau, returns connected components of the
// kept sub-hypergraph. Nodes left without edges become singletons.
Clustering trim_and_components(const Hypergraph& h,
                               const std::vector<double>& weights, double tau);

// Newman modularity of a partition, edges counted without weights.
double graph_modularity(const WeightedGraph& g, const std::vector<int>& labels);

// Strict hypergraph modularity: an edge counts only when fully inside one
// community; degree = number of incident hyperedges, volume = pin count.
double hypergraph_modularity(const Hypergraph& h,
                             const std::vector<int>& labels);

// Normalized mutual information, arithmetic-mean normalization, natural logs.
// Two single-cluster partitions agree perfectly (1.0).
double nmi(const std::vector<int>& a, const std::vector<int>& b);

enum class ThresholdCriterion {
    Fixed,
    MaxGraphModularity,      // on the clique expansion
    MaxHypergraphModularity,
    MaxNmi,                  // needs ground truth
};

struct ThresholdPoint {
    double tau = 0.0;
    int num_clusters = 0;
    double graph_q = 0.0;
    double hyper_q = 0.0;
    double nmi_value = -1.0;  // -1 when no ground truth
};

struct ThresholdResult {
    double tau = 0.0;
    Clustering clustering;
    std::vector<ThresholdPoint> curve;  // one row per candidate threshold
};

// Evaluates every distinct weight as a threshold and picks the best per the
// criterion; ties go to the smallest threshold.
ThresholdResult select_threshold(const Hypergraph& h,
                                 const std::vector<double>& weights,
                                 ThresholdCriterion criterion,
                                 const std::vector<int>* truth = nullptr,
                                 double fixed_tau = 0.0);

struct ClusterParams {
    FlowConfig flow;
    ThresholdCriterion criterion = ThresholdCriterion::MaxHypergraphModularity;
    double fixed_tau = 0.0;
};

struct ClusterReport {
    FlowState flow;
    ThresholdResult threshold;
    double nmi_value = -1.0;
    double graph_q = 0.0;
    double hyper_q = 0.0;
    double seconds = 0.0;
};

// Flow, threshold selection and scoring in one call.
ClusterReport cluster(const Hypergraph& h, const ClusterParams& params,
                      const std::vector<int>* truth = nullptr);

}  // namespace hyperricci
