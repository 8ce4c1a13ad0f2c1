#include "hyperricci/clustering.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "hyperricci/errors.hpp"
#include "hyperricci/expansion.hpp"

namespace hyperricci {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

int check_labels(std::size_t n, const std::vector<int>& labels) {
    if (labels.size() != n)
        throw InputError("labels length does not match node count");
    int k = 0;
    for (int l : labels) {
        if (l < 0) throw InputError("negative community label");
        k = std::max(k, l + 1);
    }
    return k;
}

}  // namespace

Clustering trim_and_components(const Hypergraph& h,
                               const std::vector<double>& weights, double tau) {
    if (weights.size() != static_cast<std::size_t>(h.num_edges()))
        throw InputError("trim_and_components: weight vector size mismatch");
    Dsu dsu(h.num_nodes());
    for (int e = 0; e < h.num_edges(); ++e) {
        if (weights[e] > tau) continue;
        const auto& nodes = h.edge(e);
        for (std::size_t i = 1; i < nodes.size(); ++i)
            dsu.unite(nodes[0], nodes[i]);
    }
    Clustering out;
    out.labels.assign(h.num_nodes(), -1);
    std::vector<int> root_label(h.num_nodes(), -1);
    for (int v = 0; v < h.num_nodes(); ++v) {
        int r = dsu.find(v);
        if (root_label[r] < 0) root_label[r] = out.num_clusters++;
        out.labels[v] = root_label[r];
    }
    return out;
}

double graph_modularity(const WeightedGraph& g,
                        const std::vector<int>& labels) {
    int k = check_labels(g.num_nodes(), labels);
    if (g.num_edges() == 0)
        throw InputError("graph_modularity: graph has no edges");
    const double m = g.num_edges();
    std::vector<double> vol(k, 0.0);
    double intra = 0.0;
    for (const auto& e : g.edges()) {
        if (labels[e.u] == labels[e.v]) intra += 1.0;
        vol[labels[e.u]] += 1.0;
        vol[labels[e.v]] += 1.0;
    }
    double q = intra / m;
    for (int c = 0; c < k; ++c) {
        double frac = vol[c] / (2.0 * m);
        q -= frac * frac;
    }
    return q;
}

double hypergraph_modularity(const Hypergraph& h,
                             const std::vector<int>& labels) {
    int k = check_labels(h.num_nodes(), labels);
    if (h.num_edges() == 0)
        throw InputError("hypergraph_modularity: no hyperedges");
    const double m = h.num_edges();
    const double vol_total = static_cast<double>(h.total_pins());
    std::vector<double> vol(k, 0.0);
    for (int v = 0; v < h.num_nodes(); ++v)
        vol[labels[v]] += static_cast<double>(h.degree(v));

    double covered = 0.0;
    std::map<std::size_t, int> size_counts;
    for (int e = 0; e < h.num_edges(); ++e) {
        const auto& nodes = h.edge(e);
        ++size_counts[nodes.size()];
        bool inside = true;
        for (std::size_t i = 1; i < nodes.size() && inside; ++i)
            inside = labels[nodes[i]] == labels[nodes[0]];
        if (inside) covered += 1.0;
    }
    double q = covered / m;
    for (auto [d, count] : size_counts) {
        double expectation = 0.0;
        for (int c = 0; c < k; ++c)
            expectation += std::pow(vol[c] / vol_total, static_cast<double>(d));
        q -= (static_cast<double>(count) / m) * expectation;
    }
    return q;
}

double nmi(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() || a.size() != b.size())
        throw InputError("nmi: label vectors must be non-empty, equal length");
    const double n = static_cast<double>(a.size());
    std::map<int, double> ca, cb;
    std::map<std::pair<int, int>, double> joint;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ca[a[i]] += 1.0;
        cb[b[i]] += 1.0;
        joint[{a[i], b[i]}] += 1.0;
    }
    auto entropy = [n](const std::map<int, double>& counts) {
        double s = 0.0;
        for (auto [_, c] : counts) s -= (c / n) * std::log(c / n);
        return s;
    };
    double ha = entropy(ca), hb = entropy(cb);
    if (ha == 0.0 && hb == 0.0) return 1.0;
    double mi = 0.0;
    for (auto [key, c] : joint) {
        double pij = c / n;
        mi += pij * std::log(n * c / (ca[key.first] * cb[key.second]));
    }
    double value = mi / (0.5 * (ha + hb));
    return std::clamp(value, 0.0, 1.0);
}

ThresholdResult select_threshold(const Hypergraph& h,
                                 const std::vector<double>& weights,
                                 ThresholdCriterion criterion,
                                 const std::vector<int>* truth,
                                 double fixed_tau) {
    if (h.num_edges() == 0)
        throw InputError("select_threshold: no hyperedges");
    if (weights.size() != static_cast<std::size_t>(h.num_edges()))
        throw InputError("select_threshold: weight vector size mismatch");
    if (criterion == ThresholdCriterion::MaxNmi && truth == nullptr)
        throw InputError("select_threshold: NMI criterion needs ground truth");
    if (truth) check_labels(h.num_nodes(), *truth);

    WeightedGraph clique = clique_expansion(h, WeightingScheme::Uniform);

    std::vector<double> candidates(weights);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    ThresholdResult out;
    auto evaluate = [&](double tau) {
        ThresholdPoint pt;
        pt.tau = tau;
        Clustering c = trim_and_components(h, weights, tau);
        pt.num_clusters = c.num_clusters;
        pt.graph_q = graph_modularity(clique, c.labels);
        pt.hyper_q = hypergraph_modularity(h, c.labels);
        if (truth) pt.nmi_value = nmi(c.labels, *truth);
        return pt;
    };
    for (double tau : candidates) out.curve.push_back(evaluate(tau));

    if (criterion == ThresholdCriterion::Fixed) {
        out.tau = fixed_tau;
    } else {
        auto score = [&](const ThresholdPoint& pt) {
            switch (criterion) {
                case ThresholdCriterion::MaxGraphModularity:
                    return pt.graph_q;
                case ThresholdCriterion::MaxHypergraphModularity:
                    return pt.hyper_q;
                default:
                    return pt.nmi_value;
            }
        };
        std::size_t best = 0;
        for (std::size_t i = 1; i < out.curve.size(); ++i)
            if (score(out.curve[i]) > score(out.curve[best])) best = i;
        out.tau = out.curve[best].tau;
    }
    out.clustering = trim_and_components(h, weights, out.tau);
    return out;
}

ClusterReport cluster(const Hypergraph& h, const ClusterParams& params,
                      const std::vector<int>* truth) {
    auto t0 = std::chrono::steady_clock::now();
    ClusterReport report;
    report.flow = run_flow(h, params.flow);
    report.threshold =
        select_threshold(h, report.flow.hyperedge_weights, params.criterion,
                         truth, params.fixed_tau);
    const auto& labels = report.threshold.clustering.labels;
    WeightedGraph clique = clique_expansion(h, WeightingScheme::Uniform);
    report.graph_q = graph_modularity(clique, labels);
    report.hyper_q = hypergraph_modularity(h, labels);
    if (truth) report.nmi_value = nmi(labels, *truth);
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

}  // namespace hyperricci
