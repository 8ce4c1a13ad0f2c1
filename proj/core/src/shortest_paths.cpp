#include "hyperricci/shortest_paths.hpp"

#include <limits>
#include <queue>

#include "hyperricci/errors.hpp"

namespace hyperricci {

std::vector<double> dijkstra(const WeightedGraph& g, int src) {
    if (src < 0 || src >= g.num_nodes())
        throw InputError("dijkstra: source out of range");
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(g.num_nodes(), inf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[src] = 0.0;
    heap.push({0.0, src});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        for (const auto& nb : g.neighbors(u)) {
            double nd = d + nb.w;
            if (nd < dist[nb.node]) {
                dist[nb.node] = nd;
                heap.push({nd, nb.node});
            }
        }
    }
    return dist;
}

MetricOracle::MetricOracle(std::shared_ptr<const WeightedGraph> g)
    : g_(std::move(g)) {
    if (!g_) throw InputError("MetricOracle: null graph");
    rows_.resize(g_->num_nodes());
    done_.assign(g_->num_nodes(), 0);
}

const std::vector<double>& MetricOracle::row(int src) const {
    if (src < 0 || src >= g_->num_nodes())
        throw InputError("MetricOracle: source out of range");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (done_[src]) return rows_[src];
    }
    auto dist = dijkstra(*g_, src);
    std::lock_guard<std::mutex> lock(mutex_);
    if (!done_[src]) {
        rows_[src] = std::move(dist);
        done_[src] = 1;
    }
    return rows_[src];
}

double MetricOracle::distance(int src, int dst) const {
    if (dst < 0 || dst >= g_->num_nodes())
        throw InputError("MetricOracle: target out of range");
    return row(src)[dst];
}

}  // namespace hyperricci
