#include <benchmark/benchmark.h>

#include "hyperricci/expansion.hpp"
#include "hyperricci/flow.hpp"
#include "hyperricci/generators.hpp"
#include "hyperricci/rng.hpp"
#include "hyperricci/transport.hpp"

using namespace hyperricci;

namespace {

CostMatrix random_cost(Rng& rng, int n) {
    CostMatrix c;
    c.rows = c.cols = n;
    c.d.resize(std::size_t(n) * n);
    for (auto& x : c.d) x = 0.1 + double(rng.next_u64() % 1000) / 250.0;
    return c;
}

void bm_dijkstra(benchmark::State& state) {
    Hypergraph h = gen_k_uniform(400, 120, int(state.range(0)), 17);
    WeightedGraph g = clique_expansion(h, WeightingScheme::Jaccard);
    int src = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dijkstra(g, src));
        src = (src + 1) % g.num_nodes();
    }
}
BENCHMARK(bm_dijkstra)->Arg(4)->Arg(12);

void bm_exact_transport(benchmark::State& state) {
    Rng rng(11);
    int n = int(state.range(0));
    CostMatrix c = random_cost(rng, n);
    std::vector<double> mu(n), nu(n);
    double zm = 0.0, zn = 0.0;
    for (int i = 0; i < n; ++i) {
        mu[i] = 0.2 + double(rng.next_u64() % 100);
        nu[i] = 0.2 + double(rng.next_u64() % 100);
        zm += mu[i];
        zn += nu[i];
    }
    for (int i = 0; i < n; ++i) {
        mu[i] /= zm;
        nu[i] /= zn;
    }
    for (auto _ : state) benchmark::DoNotOptimize(wasserstein1_exact(mu, nu, c).cost);
}
BENCHMARK(bm_exact_transport)->Arg(8)->Arg(32)->Arg(128);

void bm_sinkhorn_transport(benchmark::State& state) {
    Rng rng(11);
    int n = int(state.range(0));
    CostMatrix c = random_cost(rng, n);
    std::vector<double> uni(n, 1.0 / n);
    for (auto _ : state)
        benchmark::DoNotOptimize(wasserstein1_sinkhorn(uni, uni, c, 0.01));
}
BENCHMARK(bm_sinkhorn_transport)->Arg(8)->Arg(32)->Arg(128);

void bm_edge_flow_iteration(benchmark::State& state) {
    ToyModel t = gen_toy(int(state.range(0)), 4);
    FlowConfig cfg;
    cfg.method = FlowMethod::EdgeRicci;
    cfg.iterations = 1;
    for (auto _ : state) benchmark::DoNotOptimize(run_flow(t.h, cfg).hyperedge_weights);
}
BENCHMARK(bm_edge_flow_iteration)->Arg(6)->Arg(10);

void bm_node_flow_iteration(benchmark::State& state) {
    ToyModel t = gen_toy(int(state.range(0)), 4);
    FlowConfig cfg;
    cfg.method = FlowMethod::NodeRicci;
    cfg.iterations = 1;
    for (auto _ : state) benchmark::DoNotOptimize(run_flow(t.h, cfg).hyperedge_weights);
}
BENCHMARK(bm_node_flow_iteration)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
