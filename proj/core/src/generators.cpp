#include "hyperricci/generators.hpp"

#include <algorithm>

#include "hyperricci/errors.hpp"
#include "hyperricci/rng.hpp"

namespace hyperricci {

namespace {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
}

}  // namespace

ToyModel gen_toy(int a, int b) {
    if (a < 2) throw InputError("gen_toy: communities need at least 2 nodes");
    if (b < 2) throw InputError("gen_toy: need at least 2 communities");
    ToyModel out;
    out.a = a;
    out.b = b;
    std::vector<std::vector<int>> edges;
    std::vector<int> edge_class;
    out.labels.resize(static_cast<std::size_t>(a) * b);
    for (int c = 0; c < b; ++c) {
        int base = c * a;
        for (int i = 0; i < a; ++i) out.labels[base + i] = c;
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j) {
                edges.push_back({base + i, base + j});
                edge_class.push_back(i == 0 ? 1 : 2);
            }
    }
    std::vector<int> gateways;
    for (int c = 0; c < b; ++c) gateways.push_back(c * a);
    edges.push_back(gateways);
    edge_class.push_back(0);
    out.h = Hypergraph(a * b, edges);
    out.edge_class = std::move(edge_class);
    return out;
}

HsbmInstance gen_hsbm(const HsbmParams& p) {
    if (p.k < 2) throw InputError("gen_hsbm: need at least 2 communities");
    if (p.n % p.k != 0)
        throw InputError("gen_hsbm: community count must divide node count");
    const int size = p.n / p.k;
    if (p.s_in < 2 || p.s_in > size)
        throw InputError("gen_hsbm: intra edge size outside [2, n/k]");
    if (p.n_out > 0 && (p.s_out < p.k || p.s_out > p.n))
        throw InputError("gen_hsbm: inter edge size outside [k, n]");
    if (p.n_in < 0 || p.n_out < 0)
        throw InputError("gen_hsbm: negative edge count");

    const int total_in =
        p.n_in_per_community ? p.n_in * p.k : p.n_in;
    std::vector<std::vector<int>> edges;
    edges.reserve(total_in + p.n_out);

    for (int i = 0; i < total_in; ++i) {
        Rng rng(substream_seed(p.seed, static_cast<std::uint64_t>(i)));
        int community = i % p.k;
        std::vector<int> members = rng.sample_without_replacement(p.s_in, size);
        for (int& v : members) v += community * size;
        edges.push_back(std::move(members));
    }
    for (int j = 0; j < p.n_out; ++j) {
        Rng rng(substream_seed(p.seed,
                               static_cast<std::uint64_t>(total_in) + j));
        std::vector<int> members;
        members.reserve(p.s_out);
        for (int c = 0; c < p.k; ++c)
            members.push_back(c * size + static_cast<int>(rng.uniform_index(
                                             static_cast<std::uint64_t>(size))));
        auto taken = [&](int v) {
            return std::find(members.begin(), members.end(), v) !=
                   members.end();
        };
        while (static_cast<int>(members.size()) < p.s_out) {
            int v = static_cast<int>(
                rng.uniform_index(static_cast<std::uint64_t>(p.n)));
            if (!taken(v)) members.push_back(v);
        }
        std::sort(members.begin(), members.end());
        edges.push_back(std::move(members));
    }

    HsbmInstance out;
    out.h = Hypergraph(p.n, edges);
    out.labels.resize(p.n);
    for (int v = 0; v < p.n; ++v) out.labels[v] = v / size;
    return out;
}

Hypergraph gen_k_uniform(int n, int m, int K, std::uint64_t seed) {
    if (K < 2 || K > n) throw InputError("gen_k_uniform: K outside [2, n]");
    if (m < 0) throw InputError("gen_k_uniform: negative edge count");
    std::vector<std::vector<int>> edges;
    edges.reserve(m);
    for (int e = 0; e < m; ++e) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(e)));
        edges.push_back(rng.sample_without_replacement(K, n));
    }
    return Hypergraph(n, edges);
}

}  // namespace hyperricci
