#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace hyperricci {

// Simple undirected weighted graph in CSR-ish form. Edges are canonicalized
// (u < v), stored once, and each adjacency entry remembers its edge index so
// weight updates stay O(1) per endpoint.
class WeightedGraph {
public:
    struct Edge {
        int u;
        int v;
        double w;
    };
    struct Neighbor {
        int node;
        double w;
        int edge;
    };

    WeightedGraph() = default;
    WeightedGraph(int num_nodes, std::vector<Edge> edges);

    int num_nodes() const { return num_nodes_; }
    int num_edges() const { return int(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Neighbor>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }

    // -1 if not present.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    double edge_weight(int e) const { return edges_[e].w; }

    void set_edge_weight(int e, double w);

private:
    int num_nodes_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adj_;
    std::unordered_map<std::uint64_t, int> index_;

    static std::uint64_t key(int u, int v) {
        if (u > v) std::swap(u, v);
        return (std::uint64_t(std::uint32_t(u)) << 32) | std::uint64_t(std::uint32_t(v));
    }
    // Position of edge e within each endpoint's adjacency list: {pos_in_u, pos_in_v}.
    std::vector<std::pair<int, int>> adj_pos_;
};

}  // namespace hyperricci
