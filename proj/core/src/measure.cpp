#include "hyperricci/measure.hpp"

#include <algorithm>
#include <cmath>

#include "hyperricci/errors.hpp"

namespace hyperricci {

namespace {
constexpr double kUnderflow = 1e-300;
}

double ProbabilityMeasure::total() const {
    double s = 0.0;
    for (double m : mass) s += m;
    return s;
}

ProbabilityMeasure node_measure(const WeightedGraph& g, int x, double alpha,
                                double p, bool* underflow_fallback) {
    if (x < 0 || x >= g.num_nodes())
        throw InputError("node_measure: node out of range");
    if (alpha < 0.0 || alpha > 1.0)
        throw InputError("node_measure: alpha outside [0, 1]");
    if (p < 0.0) throw InputError("node_measure: negative p");
    const auto& nbs = g.neighbors(x);
    if (nbs.empty() && alpha < 1.0)
        throw InputError("node_measure: isolated node with alpha < 1");

    std::vector<std::pair<int, double>> terms;
    terms.reserve(nbs.size() + 1);
    if (!nbs.empty() && alpha < 1.0) {
        double c = 0.0;
        for (const auto& nb : nbs) {
            double d = p == 1.0 ? nb.w : std::pow(nb.w, p);
            double t = std::exp(-d);
            if (t < kUnderflow) t = 0.0;
            terms.emplace_back(nb.node, t);
            c += t;
        }
        if (c <= 0.0) {
            if (underflow_fallback) *underflow_fallback = true;
            for (auto& [id, t] : terms) t = 1.0;
            c = static_cast<double>(terms.size());
        }
        for (auto& [id, t] : terms) t *= (1.0 - alpha) / c;
    }
    if (alpha > 0.0) terms.emplace_back(x, alpha);

    std::sort(terms.begin(), terms.end());
    ProbabilityMeasure mu;
    for (auto& [id, t] : terms) {
        if (t <= 0.0) continue;
        mu.ids.push_back(id);
        mu.mass.push_back(t);
    }
    return mu;
}

ProbabilityMeasure edge_measure(const std::vector<int>& star,
                                const std::vector<double>& edge_weights) {
    if (star.empty()) throw InputError("edge_measure: empty star");
    double c = 0.0;
    for (int e : star) {
        double w = edge_weights.at(e);
        if (!(w > 0.0) || !std::isfinite(w))
            throw InputError("edge_measure: non-positive hyperedge weight");
        c += w;
    }
    ProbabilityMeasure mu;
    mu.ids = star;
    std::sort(mu.ids.begin(), mu.ids.end());
    mu.mass.reserve(mu.ids.size());
    for (int e : mu.ids) mu.mass.push_back(edge_weights[e] / c);
    return mu;
}

ProbabilityMeasure edge_measure_reduced(const Hypergraph& h,
                                        const std::vector<double>& edge_weights,
                                        int x, int y) {
    std::vector<int> support;
    for (int e : h.star(x))
        if (!h.edge_contains(e, y)) support.push_back(e);
    if (support.empty()) return {};
    return edge_measure(support, edge_weights);
}

}  // namespace hyperricci
