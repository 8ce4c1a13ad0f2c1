#pragma once

#include "hyperricci/hypergraph.hpp"
#include "hyperricci/weighted_graph.hpp"

namespace hyperricci {

enum class WeightingScheme { Uniform, Jaccard };

// |a ∩ b| / |a ∪ b| for sorted id vectors.
double jaccard(const std::vector<int>& a, const std::vector<int>& b);

// Nodes of h; (x,y) adjacent iff they co-appear in a hyperedge. Jaccard weights
// are inverse Jaccard of the star sets (dissimilarity, >= 1).
WeightedGraph clique_expansion(const Hypergraph& h, WeightingScheme scheme);

// One node per hyperedge; (e,f) adjacent iff the hyperedges intersect. Jaccard
// weights are inverse Jaccard of the node sets.
WeightedGraph line_expansion(const Hypergraph& h, WeightingScheme scheme);

}  // namespace hyperricci
