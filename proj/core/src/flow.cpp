#include "hyperricci/flow.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <memory>
#include <sstream>

#include "hyperricci/errors.hpp"
#include "hyperricci/parallel.hpp"

namespace hyperricci {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_config(const FlowConfig& cfg) {
    if (cfg.iterations < 0) throw InputError("flow: negative iteration count");
    if (cfg.max_seconds < 0.0) throw InputError("flow: negative time budget");
}

double clamped(double w) { return w < kWeightFloor ? kWeightFloor : w; }

}  // namespace

FlowState node_ricci_flow(const Hypergraph& h, const FlowConfig& cfg) {
    check_config(cfg);
    require_valid(h);
    const Clock::time_point t0 = Clock::now();
    const int threads = resolve_threads(cfg.threads);

    auto g = std::make_shared<WeightedGraph>(
        clique_expansion(h, cfg.clique_weighting));
    const int ne = g->num_edges();

    FlowState state;
    auto snapshot = [&] {
        std::vector<double> w(ne);
        for (int e = 0; e < ne; ++e) w[e] = g->edge(e).w;
        return w;
    };
    if (cfg.keep_history) state.clique_history.push_back(snapshot());

    std::vector<double> kappa(ne, 0.0);
    for (int iter = 0; iter < cfg.iterations; ++iter) {
        const Clock::time_point it0 = Clock::now();
        std::atomic<bool> aborted{false};

        std::vector<ProbabilityMeasure> nus(g->num_nodes());
        std::atomic<int> fallbacks{0};
        parallel_for(g->num_nodes(), threads, [&](int begin, int end) {
            for (int v = begin; v < end; ++v) {
                if (g->degree(v) == 0) continue;
                bool fb = false;
                nus[v] = node_measure(*g, v, cfg.curvature.alpha,
                                      cfg.curvature.p, &fb);
                if (fb) fallbacks.fetch_add(1, std::memory_order_relaxed);
            }
        });
        if (fallbacks.load() > 0) {
            std::ostringstream msg;
            msg << "iteration " << iter + 1 << ": uniform fallback for "
                << fallbacks.load() << " node measures";
            state.warnings.push_back(msg.str());
        }

        {
            MetricOracle oracle(g);
            parallel_for(ne, threads, [&](int begin, int end) {
                for (int e = begin; e < end; ++e) {
                    if ((e & 31) == 0 && cfg.max_seconds > 0.0 &&
                        seconds_since(t0) > cfg.max_seconds)
                        aborted.store(true, std::memory_order_relaxed);
                    if (aborted.load(std::memory_order_relaxed)) return;
                    const auto& edge = g->edge(e);
                    double w = measure_distance(oracle, nus[edge.u],
                                                nus[edge.v],
                                                cfg.curvature.solver);
                    kappa[e] = 1.0 - w / edge.w;
                }
            });
        }
        if (aborted.load()) {
            state.timed_out = true;
            break;
        }

        for (int e = 0; e < ne; ++e)
            g->set_edge_weight(e, clamped((1.0 - kappa[e]) * g->edge(e).w));

        state.iterations_run = iter + 1;
        state.iteration_seconds.push_back(seconds_since(it0));
        if (cfg.keep_history) state.clique_history.push_back(snapshot());
        if (cfg.max_seconds > 0.0 && seconds_since(t0) > cfg.max_seconds) {
            state.timed_out = state.iterations_run < cfg.iterations;
            break;
        }
    }

    state.clique_edge_weights = snapshot();

    // One aggregation pass turns final pair weights into hyperedge weights.
    state.hyperedge_weights.resize(h.num_edges());
    std::vector<double> values;
    for (int e = 0; e < h.num_edges(); ++e) {
        const auto& nodes = h.edge(e);
        values.clear();
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                int id = g->edge_index(nodes[i], nodes[j]);
                values.push_back(state.clique_edge_weights[id]);
            }
        state.hyperedge_weights[e] = aggregate(cfg.curvature.agg, values);
    }
    return state;
}

FlowState edge_ricci_flow(const Hypergraph& h, const FlowConfig& cfg) {
    check_config(cfg);
    require_valid(h);
    const Clock::time_point t0 = Clock::now();
    const int threads = resolve_threads(cfg.threads);

    // The line graph keeps its initial weights for the whole flow; only the
    // hyperedge weights evolve.
    auto line = std::make_shared<WeightedGraph>(
        line_expansion(h, cfg.line_weighting));
    MetricOracle oracle(line);

    // Adjacent node pairs, indexed by an unweighted clique expansion.
    WeightedGraph pairs = clique_expansion(h, WeightingScheme::Uniform);
    const int np = pairs.num_edges();

    std::vector<double> w(h.edge_weights());
    for (double& x : w) x = clamped(x);

    FlowState state;
    state.hyperedge_weights = w;
    if (cfg.keep_history) state.history.push_back(w);

    std::vector<double> kappa_pair(np, 0.0);
    std::vector<double> kappa_edge(h.num_edges(), 0.0);
    CurvatureConfig pair_cfg = cfg.curvature;
    std::vector<double> values;
    for (int iter = 0; iter < cfg.iterations; ++iter) {
        const Clock::time_point it0 = Clock::now();
        std::atomic<bool> aborted{false};

        std::vector<ProbabilityMeasure> mus;
        if (cfg.curvature.variant == MeasureVariant::Standard) {
            mus.resize(h.num_nodes());
            for (int v = 0; v < h.num_nodes(); ++v)
                if (h.degree(v) > 0) mus[v] = edge_measure(h.star(v), w);
        }

        parallel_for(np, threads, [&](int begin, int end) {
            for (int p = begin; p < end; ++p) {
                if ((p & 31) == 0 && cfg.max_seconds > 0.0 &&
                    seconds_since(t0) > cfg.max_seconds)
                    aborted.store(true, std::memory_order_relaxed);
                if (aborted.load(std::memory_order_relaxed)) return;
                const auto& pe = pairs.edge(p);
                if (cfg.curvature.variant == MeasureVariant::Standard) {
                    const auto& st_x = h.star(pe.u);
                    const auto& st_y = h.star(pe.v);
                    double denom = 0.0;
                    std::size_t i = 0, j = 0;
                    while (i < st_x.size() && j < st_y.size()) {
                        if (st_x[i] == st_y[j]) {
                            denom = std::max(denom, w[st_x[i]]);
                            ++i, ++j;
                        } else if (st_x[i] < st_y[j]) {
                            ++i;
                        } else {
                            ++j;
                        }
                    }
                    double wd = measure_distance(oracle, mus[pe.u], mus[pe.v],
                                                 cfg.curvature.solver);
                    kappa_pair[p] = 1.0 - wd / denom;
                } else {
                    kappa_pair[p] =
                        edge_ricci_pair(h, oracle, w, pe.u, pe.v, pair_cfg);
                }
            }
        });
        if (aborted.load()) {
            state.timed_out = true;
            break;
        }

        for (int e = 0; e < h.num_edges(); ++e) {
            const auto& nodes = h.edge(e);
            values.clear();
            for (std::size_t i = 0; i < nodes.size(); ++i)
                for (std::size_t j = i + 1; j < nodes.size(); ++j)
                    values.push_back(
                        kappa_pair[pairs.edge_index(nodes[i], nodes[j])]);
            kappa_edge[e] = aggregate(cfg.curvature.agg, values);
        }
        for (int e = 0; e < h.num_edges(); ++e)
            w[e] = clamped((1.0 - kappa_edge[e]) * w[e]);

        state.iterations_run = iter + 1;
        state.iteration_seconds.push_back(seconds_since(it0));
        if (cfg.keep_history) state.history.push_back(w);
        if (cfg.max_seconds > 0.0 && seconds_since(t0) > cfg.max_seconds) {
            state.timed_out = state.iterations_run < cfg.iterations;
            break;
        }
    }

    state.hyperedge_weights = w;
    return state;
}

FlowState run_flow(const Hypergraph& h, const FlowConfig& cfg) {
    return cfg.method == FlowMethod::NodeRicci ? node_ricci_flow(h, cfg)
                                               : edge_ricci_flow(h, cfg);
}

}  // namespace hyperricci
