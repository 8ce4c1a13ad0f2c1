#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperricci {

// Node-indexed hypergraph with positive per-hyperedge weights. Hyperedges are normalized
// to sorted vectors of distinct node ids on construction; stars are built eagerly.
// Duplicate hyperedges are allowed and keep distinct ids.
class Hypergraph {
public:
    Hypergraph() = default;
    // Omitted weights default to 1. Out-of-range ids and undersized edges are preserved
    // so validate() can report them; operations assume a valid hypergraph.
    Hypergraph(int num_nodes, std::vector<std::vector<int>> edges,
               std::vector<double> weights = {});

    int num_nodes() const { return num_nodes_; }
    int num_edges() const { return int(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int e) const { return edges_[e]; }
    const std::vector<double>& edge_weights() const { return weights_; }
    double edge_weight(int e) const { return weights_[e]; }

    // Hyperedge ids containing v, ascending.
    const std::vector<int>& star(int v) const;
    int degree(int v) const { return int(star(v).size()); }
    bool edge_contains(int e, int v) const;

    std::int64_t total_pins() const;

private:
    int num_nodes_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<double> weights_;
    std::vector<std::vector<int>> stars_;
};

// All violated invariants as human-readable messages; empty means valid.
std::vector<std::string> validate(const Hypergraph& h);

// Throws InputError listing every violation.
void require_valid(const Hypergraph& h);

// Dual hypergraph: one node per hyperedge of h, one hyperedge per node of h with
// degree >= 2 (that node's star). Nodes with degree < 2 contribute nothing; their ids
// are appended to `dropped` when provided so callers can warn.
Hypergraph dual(const Hypergraph& h, std::vector<int>* dropped = nullptr);

}  // namespace hyperricci
