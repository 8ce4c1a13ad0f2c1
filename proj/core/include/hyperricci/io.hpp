#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperricci/clustering.hpp"
#include "hyperricci/hypergraph.hpp"

namespace hyperricci {

// Text format: one hyperedge per line as whitespace-separated node tokens,
// optional trailing "# w=<float>" weight, '#' otherwise starts a comment.
// Node ids follow first appearance; one-node lines are dropped with a
// warning.
struct ParsedHypergraph {
    Hypergraph h;
    std::vector<std::string> node_names;
    std::vector<std::string> warnings;
};

ParsedHypergraph parse_hypergraph(std::istream& in);
ParsedHypergraph load_hypergraph(const std::string& path);

void serialize_hypergraph(std::ostream& os, const Hypergraph& h,
                          const std::vector<std::string>& node_names);
void save_hypergraph(const std::string& path, const Hypergraph& h,
                     const std::vector<std::string>& node_names);

// Labels file: "<node-token> <label-token>" per line, every node exactly
// once. Returns dense labels aligned with node_names.
std::vector<int> parse_labels(std::istream& in,
                              const std::vector<std::string>& node_names);
std::vector<int> load_labels(const std::string& path,
                             const std::vector<std::string>& node_names);

// Default names "0".."n-1" for generated hypergraphs.
std::vector<std::string> numeric_names(int n);

struct ResultBundle {
    std::string method;     // "node" | "edge"
    std::string weighting;  // "uniform" | "jaccard"
    std::string agg;        // "max" | "avg"
    std::string solver;     // "exact" | "sinkhorn:<eps>"
    std::string measure;    // "standard" | "reduced"
    double alpha = 0.5;
    double p = 1.0;
    int iters = 20;
    std::string tau_mode;  // "auto-h" | "auto-c" | "auto-nmi" | "fixed"
    double tau = 0.0;
    int num_clusters = 0;
    double nmi_value = -1.0;  // -1 when no ground truth was given
    double graph_q = 0.0;
    double hyper_q = 0.0;
    double seconds = 0.0;
    std::vector<std::string> node_names;
    std::vector<int> labels;
    std::vector<double> hyperedge_weights;
    std::vector<ThresholdPoint> curve;
};

void save_result(const std::string& path, const ResultBundle& bundle);
ResultBundle load_result(const std::string& path);

}  // namespace hyperricci
