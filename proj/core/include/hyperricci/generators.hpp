#pragma once

#include <cstdint>
#include <vector>

#include "hyperricci/hypergraph.hpp"

namespace hyperricci {

// Two-level benchmark hypergraph: b communities of a nodes each, every pair
// inside a community as a binary edge, plus one size-b edge over the first
// node (gateway) of every community.
struct ToyModel {
    int a = 0;
    int b = 0;
    Hypergraph h;
    std::vector<int> labels;  // community per node
    // 0 = gateway edge, 1 = binary touching a gateway, 2 = internal binary
    std::vector<int> edge_class;

    int gateway(int community) const { return community * a; }
};
ToyModel gen_toy(int a, int b);

struct HsbmParams {
    int n = 100;
    int k = 2;
    int s_in = 2;
    int s_out = 4;
    int n_in = 200;  // total intra edges unless n_in_per_community
    int n_out = 0;
    std::uint64_t seed = 0;
    bool n_in_per_community = false;
};

struct HsbmInstance {
    Hypergraph h;
    std::vector<int> labels;
};

// Planted-partition hypergraph. Intra edges are uniform s_in-subsets of a
// round-robin community; every inter edge takes one uniform node per
// community plus (s_out - k) further distinct nodes from everywhere. Each
// edge draws from its own seed substream, so instances with the same seed
// share their intra edges across n_out values and inter edges extend as a
// prefix.
HsbmInstance gen_hsbm(const HsbmParams& p);

// m random K-subsets of n nodes, unit weights.
Hypergraph gen_k_uniform(int n, int m, int K, std::uint64_t seed);

}  // namespace hyperricci
