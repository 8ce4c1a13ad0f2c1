#include "hyperricci/expansion.hpp"

#include <algorithm>
#include <cstdint>

#include "hyperricci/errors.hpp"

namespace hyperricci {

namespace {

constexpr std::uint64_t pair_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

// Sorted list of (pair, co-occurrence count) from a family of sorted id sets.
std::vector<std::pair<std::uint64_t, int>> count_pairs(
    const std::vector<std::vector<int>>& sets) {
    std::vector<std::uint64_t> keys;
    std::size_t total = 0;
    for (const auto& s : sets) total += s.size() * (s.size() - 1) / 2;
    keys.reserve(total);
    for (const auto& s : sets)
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                keys.push_back(pair_key(s[i], s[j]));
    std::sort(keys.begin(), keys.end());
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        out.emplace_back(keys[i], static_cast<int>(j - i));
        i = j;
    }
    return out;
}

double inv_jaccard(int size_a, int size_b, int shared) {
    return static_cast<double>(size_a + size_b - shared) / shared;
}

}  // namespace

double jaccard(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() && b.empty())
        throw InputError("jaccard of two empty sets is undefined");
    std::size_t i = 0, j = 0, shared = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++shared, ++i, ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<double>(shared) / (a.size() + b.size() - shared);
}

WeightedGraph clique_expansion(const Hypergraph& h, WeightingScheme scheme) {
    require_valid(h);
    std::vector<std::vector<int>> sets(h.edges().begin(), h.edges().end());
    auto counted = count_pairs(sets);
    std::vector<WeightedGraph::Edge> edges;
    edges.reserve(counted.size());
    for (auto [key, shared] : counted) {
        int u = static_cast<int>(key >> 32);
        int v = static_cast<int>(key & 0xffffffffu);
        double w = 1.0;
        if (scheme == WeightingScheme::Jaccard)
            w = inv_jaccard(h.degree(u), h.degree(v), shared);
        edges.push_back({u, v, w});
    }
    return WeightedGraph(h.num_nodes(), edges);
}

WeightedGraph line_expansion(const Hypergraph& h, WeightingScheme scheme) {
    require_valid(h);
    std::vector<std::vector<int>> stars;
    stars.reserve(h.num_nodes());
    for (int v = 0; v < h.num_nodes(); ++v) stars.push_back(h.star(v));
    auto counted = count_pairs(stars);
    std::vector<WeightedGraph::Edge> edges;
    edges.reserve(counted.size());
    for (auto [key, shared] : counted) {
        int e = static_cast<int>(key >> 32);
        int f = static_cast<int>(key & 0xffffffffu);
        double w = 1.0;
        if (scheme == WeightingScheme::Jaccard)
            w = inv_jaccard(static_cast<int>(h.edge(e).size()),
                            static_cast<int>(h.edge(f).size()), shared);
        edges.push_back({e, f, w});
    }
    return WeightedGraph(h.num_edges(), edges);
}

}  // namespace hyperricci
