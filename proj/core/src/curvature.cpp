#include "hyperricci/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "hyperricci/errors.hpp"

namespace hyperricci {

namespace {

double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

}  // namespace

double aggregate(Aggregation agg, const std::vector<double>& values) {
    if (values.empty()) throw InputError("aggregate: no values");
    if (agg == Aggregation::Max)
        return *std::max_element(values.begin(), values.end());
    return pairwise_sum(values.data(), values.size()) /
           static_cast<double>(values.size());
}

double measure_distance(const MetricOracle& oracle,
                        const ProbabilityMeasure& mu,
                        const ProbabilityMeasure& nu,
                        const SolverConfig& solver) {
    if (mu.ids.empty() || nu.ids.empty())
        throw InputError("measure_distance: empty measure");

    // Settle overlapping mass in place (zero cost), transport the rest.
    // Scratch is thread-local: the flow loops hit this once per pair.
    static thread_local std::vector<int> ids_a, ids_b;
    static thread_local std::vector<double> res_a, res_b;
    ids_a.clear(), ids_b.clear(), res_a.clear(), res_b.clear();
    std::size_t i = 0, j = 0;
    while (i < mu.ids.size() && j < nu.ids.size()) {
        if (mu.ids[i] == nu.ids[j]) {
            double stay = std::min(mu.mass[i], nu.mass[j]);
            double ra = mu.mass[i] - stay, rb = nu.mass[j] - stay;
            if (ra > 0.0) ids_a.push_back(mu.ids[i]), res_a.push_back(ra);
            if (rb > 0.0) ids_b.push_back(nu.ids[j]), res_b.push_back(rb);
            ++i, ++j;
        } else if (mu.ids[i] < nu.ids[j]) {
            ids_a.push_back(mu.ids[i]), res_a.push_back(mu.mass[i]);
            ++i;
        } else {
            ids_b.push_back(nu.ids[j]), res_b.push_back(nu.mass[j]);
            ++j;
        }
    }
    for (; i < mu.ids.size(); ++i)
        ids_a.push_back(mu.ids[i]), res_a.push_back(mu.mass[i]);
    for (; j < nu.ids.size(); ++j)
        ids_b.push_back(nu.ids[j]), res_b.push_back(nu.mass[j]);

    double ma = 0.0, mb = 0.0;
    for (double m : res_a) ma += m;
    for (double m : res_b) mb += m;
    double moved = 0.5 * (ma + mb);
    if (moved <= 1e-15) return 0.0;
    for (double& m : res_a) m /= ma;
    for (double& m : res_b) m /= mb;

    static thread_local CostMatrix cost;
    support_costs(oracle, ids_a, ids_b, cost);
    double unit_cost;
    if (solver.kind == SolverConfig::Kind::Exact)
        unit_cost = wasserstein1_exact(res_a, res_b, cost).cost;
    else
        unit_cost = wasserstein1_sinkhorn(res_a, res_b, cost, solver.epsilon);
    return moved * unit_cost;
}

double node_ricci_pair(const MetricOracle& oracle, int x, int y,
                       const CurvatureConfig& cfg) {
    const WeightedGraph& g = oracle.graph();
    int e = g.edge_index(x, y);
    if (e < 0) throw InputError("node_ricci_pair: nodes are not adjacent");
    double d = g.edge(e).w;
    ProbabilityMeasure nu_x = node_measure(g, x, cfg.alpha, cfg.p);
    ProbabilityMeasure nu_y = node_measure(g, y, cfg.alpha, cfg.p);
    return 1.0 - measure_distance(oracle, nu_x, nu_y, cfg.solver) / d;
}

double edge_ricci_pair(const Hypergraph& h, const MetricOracle& line_oracle,
                       const std::vector<double>& edge_weights, int x, int y,
                       const CurvatureConfig& cfg) {
    if (edge_weights.size() != static_cast<std::size_t>(h.num_edges()))
        throw InputError("edge_ricci_pair: weight vector size mismatch");
    const auto& st_x = h.star(x);
    const auto& st_y = h.star(y);
    double denom = 0.0;
    bool adjacent = false;
    {
        std::size_t i = 0, j = 0;
        while (i < st_x.size() && j < st_y.size()) {
            if (st_x[i] == st_y[j]) {
                adjacent = true;
                denom = std::max(denom, edge_weights[st_x[i]]);
                ++i, ++j;
            } else if (st_x[i] < st_y[j]) {
                ++i;
            } else {
                ++j;
            }
        }
    }
    if (!adjacent)
        throw InputError("edge_ricci_pair: nodes share no hyperedge");

    ProbabilityMeasure mu_x, mu_y;
    if (cfg.variant == MeasureVariant::Reduced) {
        mu_x = edge_measure_reduced(h, edge_weights, x, y);
        mu_y = edge_measure_reduced(h, edge_weights, y, x);
        if (mu_x.ids.empty() || mu_y.ids.empty()) return 1.0;
    } else {
        mu_x = edge_measure(st_x, edge_weights);
        mu_y = edge_measure(st_y, edge_weights);
    }
    double w = measure_distance(line_oracle, mu_x, mu_y, cfg.solver);
    return 1.0 - w / denom;
}

}  // namespace hyperricci
