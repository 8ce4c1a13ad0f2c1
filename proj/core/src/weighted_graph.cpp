#include "hyperricci/weighted_graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "hyperricci/errors.hpp"

namespace hyperricci {

WeightedGraph::WeightedGraph(int num_nodes, std::vector<Edge> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {
    adj_.assign(num_nodes_ > 0 ? num_nodes_ : 0, {});
    adj_pos_.resize(edges_.size());
    index_.reserve(edges_.size() * 2);
    for (int e = 0; e < int(edges_.size()); ++e) {
        auto& ed = edges_[e];
        if (ed.u > ed.v) std::swap(ed.u, ed.v);
        if (ed.u < 0 || ed.v >= num_nodes_) {
            throw InputError("graph edge (" + std::to_string(ed.u) + ", " +
                             std::to_string(ed.v) + ") outside [0, " +
                             std::to_string(num_nodes_) + ")");
        }
        if (ed.u == ed.v) {
            throw InputError("self-loop at node " + std::to_string(ed.u));
        }
        if (!(ed.w > 0.0) || !std::isfinite(ed.w)) {
            throw InputError("edge (" + std::to_string(ed.u) + ", " +
                             std::to_string(ed.v) + ") has non-positive weight");
        }
        auto [it, inserted] = index_.emplace(key(ed.u, ed.v), e);
        if (!inserted) {
            throw InputError("duplicate edge (" + std::to_string(ed.u) + ", " +
                             std::to_string(ed.v) + ")");
        }
        adj_pos_[e].first = int(adj_[ed.u].size());
        adj_[ed.u].push_back({ed.v, ed.w, e});
        adj_pos_[e].second = int(adj_[ed.v].size());
        adj_[ed.v].push_back({ed.u, ed.w, e});
    }
}

int WeightedGraph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= num_nodes_ || v >= num_nodes_ || u == v) return -1;
    auto it = index_.find(key(u, v));
    return it == index_.end() ? -1 : it->second;
}

void WeightedGraph::set_edge_weight(int e, double w) {
    if (!(w > 0.0) || !std::isfinite(w)) {
        throw InputError("set_edge_weight: weight must be positive and finite");
    }
    auto& ed = edges_[e];
    ed.w = w;
    adj_[ed.u][adj_pos_[e].first].w = w;
    adj_[ed.v][adj_pos_[e].second].w = w;
}

}  // namespace hyperricci
