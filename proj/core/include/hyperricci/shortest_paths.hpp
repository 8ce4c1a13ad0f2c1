#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "hyperricci/weighted_graph.hpp"

namespace hyperricci {

// Memoizing all-pairs shortest-path oracle over a fixed weighted graph.
// Rows are computed on demand (Dijkstra) and cached; unreachable nodes get
// +infinity. Thread-safe.
class MetricOracle {
   public:
    explicit MetricOracle(std::shared_ptr<const WeightedGraph> g);

    const WeightedGraph& graph() const { return *g_; }

    // Distance row from src; reference stays valid for the oracle's lifetime.
    const std::vector<double>& row(int src) const;
    double distance(int src, int dst) const;

   private:
    std::shared_ptr<const WeightedGraph> g_;
    mutable std::mutex mutex_;
    mutable std::vector<std::vector<double>> rows_;
    mutable std::vector<char> done_;
};

// Single-source distances without caching.
std::vector<double> dijkstra(const WeightedGraph& g, int src);

}  // namespace hyperricci
