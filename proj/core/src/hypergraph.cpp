#include "hyperricci/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperricci/errors.hpp"

namespace hyperricci {

Hypergraph::Hypergraph(int num_nodes, std::vector<std::vector<int>> edges,
                       std::vector<double> weights)
    : num_nodes_(num_nodes), edges_(std::move(edges)), weights_(std::move(weights)) {
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    if (weights_.empty()) weights_.assign(edges_.size(), 1.0);
    stars_.assign(num_nodes_ > 0 ? num_nodes_ : 0, {});
    for (int e = 0; e < int(edges_.size()); ++e) {
        for (int v : edges_[e]) {
            if (v >= 0 && v < num_nodes_) stars_[v].push_back(e);
        }
    }
}

const std::vector<int>& Hypergraph::star(int v) const {
    if (v < 0 || v >= num_nodes_) {
        throw InputError("star: node id " + std::to_string(v) + " outside [0, " +
                         std::to_string(num_nodes_) + ")");
    }
    return stars_[v];
}

bool Hypergraph::edge_contains(int e, int v) const {
    const auto& nodes = edges_[e];
    return std::binary_search(nodes.begin(), nodes.end(), v);
}

std::int64_t Hypergraph::total_pins() const {
    std::int64_t pins = 0;
    for (const auto& e : edges_) pins += std::int64_t(e.size());
    return pins;
}

std::vector<std::string> validate(const Hypergraph& h) {
    std::vector<std::string> out;
    const auto& edges = h.edges();
    for (int e = 0; e < int(edges.size()); ++e) {
        for (int v : edges[e]) {
            if (v < 0 || v >= h.num_nodes()) {
                out.push_back("hyperedge " + std::to_string(e) + " references node id " +
                              std::to_string(v) + " outside [0, " +
                              std::to_string(h.num_nodes()) + ")");
            }
        }
        if (edges[e].size() < 2) {
            out.push_back("hyperedge " + std::to_string(e) +
                          " has fewer than 2 distinct nodes");
        }
    }
    const auto& w = h.edge_weights();
    if (int(w.size()) != h.num_edges()) {
        out.push_back("weight count " + std::to_string(w.size()) +
                      " does not match hyperedge count " + std::to_string(h.num_edges()));
    } else {
        for (int e = 0; e < int(w.size()); ++e) {
            if (!(w[e] > 0.0) || !std::isfinite(w[e])) {
                out.push_back("hyperedge " + std::to_string(e) +
                              " has non-positive or non-finite weight");
            }
        }
    }
    return out;
}

void require_valid(const Hypergraph& h) {
    auto violations = validate(h);
    if (violations.empty()) return;
    std::ostringstream msg;
    msg << "invalid hypergraph:";
    for (const auto& v : violations) msg << "\n  " << v;
    throw InputError(msg.str());
}

Hypergraph dual(const Hypergraph& h, std::vector<int>* dropped) {
    std::vector<std::vector<int>> dual_edges;
    for (int v = 0; v < h.num_nodes(); ++v) {
        if (h.degree(v) >= 2) {
            dual_edges.push_back(h.star(v));
        } else if (dropped) {
            dropped->push_back(v);
        }
    }
    return Hypergraph(h.num_edges(), std::move(dual_edges));
}

}  // namespace hyperricci
