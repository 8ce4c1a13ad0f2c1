#include "hyperricci/transport.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "hyperricci/errors.hpp"

namespace hyperricci {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kScale = 9007199254740992.0;  // 2^53
constexpr std::int64_t kScaleInt = INT64_C(9007199254740992);

struct Dropped {
    std::vector<double> mass;
    std::vector<int> orig;  // active index -> original index
};

void drop_zeros(const std::vector<double>& v, const char* side, Dropped& out) {
    out.mass.clear();
    out.orig.clear();
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double m = v[i];
        if (!std::isfinite(m) || m < 0.0) {
            std::ostringstream msg;
            msg << "transport: invalid " << side << " mass at index " << i;
            throw InputError(msg.str());
        }
        if (m > 0.0) {
            out.mass.push_back(m);
            out.orig.push_back(static_cast<int>(i));
        }
        sum += m;
    }
    if (out.mass.empty()) {
        std::ostringstream msg;
        msg << "transport: " << side << " measure has zero total mass";
        throw InputError(msg.str());
    }
    if (std::abs(sum - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "transport: " << side << " masses sum to " << sum
            << ", expected 1";
        throw InputError(msg.str());
    }
}

void check_costs(const CostMatrix& cost, std::size_t rows, std::size_t cols) {
    if (cost.rows != static_cast<int>(rows) ||
        cost.cols != static_cast<int>(cols) ||
        cost.d.size() != rows * cols)
        throw InputError("transport: cost matrix shape mismatch");
    for (double c : cost.d) {
        if (std::isinf(c)) throw InputError("transport: disconnected supports");
        if (std::isnan(c) || c < 0.0)
            throw InputError("transport: invalid cost entry");
    }
}

void to_integer_masses(const std::vector<double>& m,
                       std::vector<std::int64_t>& out) {
    out.resize(m.size());
    std::int64_t sum = 0;
    std::size_t argmax = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i] = std::llround(m[i] * kScale);
        sum += out[i];
        if (m[i] > m[argmax]) argmax = i;
    }
    out[argmax] += kScaleInt - sum;
    if (out[argmax] <= 0)
        throw NumericalError("transport: mass discretization failed");
}

}  // namespace

void support_costs(const MetricOracle& oracle, const std::vector<int>& a,
                   const std::vector<int>& b, CostMatrix& out) {
    out.rows = static_cast<int>(a.size());
    out.cols = static_cast<int>(b.size());
    out.d.resize(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& row = oracle.row(a[i]);
        for (std::size_t j = 0; j < b.size(); ++j)
            out.d[i * b.size() + j] = row[b[j]];
    }
}

CostMatrix support_costs(const MetricOracle& oracle, const std::vector<int>& a,
                         const std::vector<int>& b) {
    CostMatrix c;
    support_costs(oracle, a, b, c);
    return c;
}

TransportPlan wasserstein1_exact(const std::vector<double>& mu,
                                 const std::vector<double>& nu,
                                 const CostMatrix& cost) {
    check_costs(cost, mu.size(), nu.size());
    // The flow loops call this once per adjacent pair, so all working storage
    // is thread-local scratch instead of fresh allocations.
    static thread_local Dropped src, dst;
    drop_zeros(mu, "source", src);
    drop_zeros(nu, "sink", dst);
    const int S = static_cast<int>(src.mass.size());
    const int T = static_cast<int>(dst.mass.size());

    // Active cost submatrix.
    static thread_local std::vector<double> c;
    c.resize(static_cast<std::size_t>(S) * T);
    for (int i = 0; i < S; ++i)
        for (int j = 0; j < T; ++j)
            c[static_cast<std::size_t>(i) * T + j] =
                cost.at(src.orig[i], dst.orig[j]);

    static thread_local std::vector<std::int64_t> supply, deficit, flow;
    to_integer_masses(src.mass, supply);
    to_integer_masses(dst.mass, deficit);
    flow.assign(static_cast<std::size_t>(S) * T, 0);
    static thread_local std::vector<double> pot_s, pot_t, dist;
    pot_s.assign(S, 0.0);
    pot_t.assign(T, 0.0);
    // Sources sit at [0, S), sinks at [S, S+T): one contiguous scan per
    // Dijkstra step, and strict comparison keeps source priority on ties.
    dist.resize(S + T);
    static thread_local std::vector<char> vis;
    vis.resize(S + T);
    static thread_local std::vector<int> par_t, par_s;
    par_t.resize(T);  // sink j reached from source par_t[j]
    par_s.resize(S);  // source i reached from sink par_s[i], -1 root
    // arc_s[j] lists exactly the sources with flow[i][j] > 0, so the backward
    // relaxation scans flow arcs instead of the whole source side.
    static thread_local std::vector<std::vector<int>> arc_s;
    if (arc_s.size() < static_cast<std::size_t>(T)) arc_s.resize(T);
    for (int j = 0; j < T; ++j) arc_s[j].clear();

    std::int64_t shipped = 0;
    long max_rounds = 50L * (S + T) + 10000;
    while (shipped < kScaleInt) {
        if (--max_rounds < 0)
            throw NumericalError("transport: augmentation limit exceeded");

        std::fill(dist.begin() + S, dist.end(), kInf);
        std::fill(vis.begin(), vis.end(), 0);
        std::fill(par_t.begin(), par_t.end(), -1);
        std::fill(par_s.begin(), par_s.end(), -1);
        for (int i = 0; i < S; ++i) dist[i] = supply[i] > 0 ? 0.0 : kInf;

        int t = -1;
        double dist_end = kInf;
        while (true) {
            // Dense Dijkstra step over both sides.
            int best = -1;
            double bd = kInf;
            for (int k = 0; k < S + T; ++k)
                if (!vis[k] && dist[k] < bd) bd = dist[k], best = k;
            if (best < 0)
                throw NumericalError("transport: search stalled");
            if (best >= S) {
                int j = best - S;
                if (deficit[j] > 0) {
                    t = j;
                    dist_end = bd;
                    break;
                }
                vis[best] = 1;
                // Backward arcs along existing flow.
                for (int i : arc_s[j]) {
                    if (vis[i]) continue;
                    double rc = pot_t[j] - pot_s[i] -
                                c[static_cast<std::size_t>(i) * T + j];
                    if (rc < 0.0) rc = 0.0;
                    double nd = bd + rc;
                    if (nd < dist[i]) dist[i] = nd, par_s[i] = j;
                }
            } else {
                int i = best;
                vis[i] = 1;
                const double* ci = &c[static_cast<std::size_t>(i) * T];
                double* dt = dist.data() + S;
                const char* vt = vis.data() + S;
                for (int j = 0; j < T; ++j) {
                    if (vt[j]) continue;
                    double rc = ci[j] + pot_s[i] - pot_t[j];
                    if (rc < 0.0) rc = 0.0;
                    double nd = bd + rc;
                    if (nd < dt[j]) dt[j] = nd, par_t[j] = i;
                }
            }
        }

        for (int i = 0; i < S; ++i) pot_s[i] += std::min(dist[i], dist_end);
        for (int j = 0; j < T; ++j)
            pot_t[j] += std::min(dist[S + j], dist_end);

        // Bottleneck along the augmenting path.
        std::int64_t bt = deficit[t];
        for (int j = t;;) {
            int i = par_t[j];
            if (par_s[i] < 0) {
                bt = std::min(bt, supply[i]);
                break;
            }
            int j2 = par_s[i];
            bt = std::min(bt, flow[static_cast<std::size_t>(i) * T + j2]);
            j = j2;
        }
        for (int j = t;;) {
            int i = par_t[j];
            std::int64_t& fwd = flow[static_cast<std::size_t>(i) * T + j];
            if (fwd == 0) arc_s[j].push_back(i);
            fwd += bt;
            if (par_s[i] < 0) {
                supply[i] -= bt;
                break;
            }
            int j2 = par_s[i];
            std::int64_t& back = flow[static_cast<std::size_t>(i) * T + j2];
            back -= bt;
            if (back == 0) {
                auto& arcs = arc_s[j2];
                for (std::size_t k = 0; k < arcs.size(); ++k)
                    if (arcs[k] == i) {
                        arcs[k] = arcs.back();
                        arcs.pop_back();
                        break;
                    }
            }
            j = j2;
        }
        deficit[t] -= bt;
        shipped += bt;
    }

    TransportPlan plan;
    plan.entries.reserve(S + T);
    long double acc = 0.0L;
    for (int i = 0; i < S; ++i)
        for (int j = 0; j < T; ++j) {
            std::int64_t f = flow[static_cast<std::size_t>(i) * T + j];
            if (f <= 0) continue;
            double m = static_cast<double>(f) / kScale;
            plan.entries.push_back({src.orig[i], dst.orig[j], m});
            acc += static_cast<long double>(m) *
                   c[static_cast<std::size_t>(i) * T + j];
        }
    plan.cost = static_cast<double>(acc);

    // Duals on the original index space; inactive entries get the tightest
    // feasible value.
    plan.potential_mu.assign(mu.size(), 0.0);
    plan.potential_nu.assign(nu.size(), 0.0);
    for (int j = 0; j < T; ++j) plan.potential_nu[dst.orig[j]] = pot_t[j];
    for (int i = 0; i < S; ++i) plan.potential_mu[src.orig[i]] = -pot_s[i];
    {
        std::vector<char> active_s(mu.size(), 0), active_t(nu.size(), 0);
        for (int i : src.orig) active_s[i] = 1;
        for (int j : dst.orig) active_t[j] = 1;
        for (std::size_t j = 0; j < nu.size(); ++j) {
            if (active_t[j]) continue;
            double v = kInf;
            for (int i = 0; i < S; ++i)
                v = std::min(v, cost.at(src.orig[i], static_cast<int>(j)) +
                                    pot_s[i]);
            plan.potential_nu[j] = v;
        }
        for (std::size_t i = 0; i < mu.size(); ++i) {
            if (active_s[i]) continue;
            double u = kInf;
            for (std::size_t j = 0; j < nu.size(); ++j)
                u = std::min(u, cost.at(static_cast<int>(i), static_cast<int>(j)) -
                                    plan.potential_nu[j]);
            plan.potential_mu[i] = u;
        }
    }
    return plan;
}

double wasserstein1_sinkhorn(const std::vector<double>& mu,
                             const std::vector<double>& nu,
                             const CostMatrix& cost, double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw InputError("transport: epsilon must be positive");
    check_costs(cost, mu.size(), nu.size());
    static thread_local Dropped src, dst;
    drop_zeros(mu, "source", src);
    drop_zeros(nu, "sink", dst);
    const int S = static_cast<int>(src.mass.size());
    const int T = static_cast<int>(dst.mass.size());

    std::vector<double> c(static_cast<std::size_t>(S) * T);
    double cmax = 0.0;
    for (int i = 0; i < S; ++i)
        for (int j = 0; j < T; ++j) {
            double v = cost.at(src.orig[i], dst.orig[j]);
            c[static_cast<std::size_t>(i) * T + j] = v;
            cmax = std::max(cmax, v);
        }
    if (cmax == 0.0) return 0.0;

    const auto& a = src.mass;
    const auto& b = dst.mass;
    std::vector<double> log_a(S), log_b(T);
    for (int i = 0; i < S; ++i) log_a[i] = std::log(a[i]);
    for (int j = 0; j < T; ++j) log_b[j] = std::log(b[j]);

    const double eta_target =
        epsilon / (4.0 * std::log(static_cast<double>(std::max(S, T)) + 1.0));
    // Entropic bias stays under epsilon/2 via eta_target; the rounding step
    // adds at most 2*cmax times this marginal error.
    const double tol_final = epsilon / (16.0 * (cmax + 1.0));

    std::vector<double> f(S, 0.0), g(T, 0.0), buf(std::max(S, T));
    auto lse = [](const double* v, int n) {
        double m = -kInf;
        for (int k = 0; k < n; ++k) m = std::max(m, v[k]);
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += std::exp(v[k] - m);
        return m + std::log(s);
    };

    double marginal_gap = kInf;
    long double best_cost = -1.0L;
    long iterations_left = 200000;
    double eta = std::max(eta_target, cmax);
    bool converged = false;
    while (!converged) {
        const bool last_stage = eta <= eta_target * (1.0 + 1e-12);
        const double stage_tol = last_stage ? tol_final : 1e-2;
        for (int it = 0; it < 20000; ++it) {
            if (--iterations_left < 0) break;
            for (int i = 0; i < S; ++i) {
                const double* ci = &c[static_cast<std::size_t>(i) * T];
                for (int j = 0; j < T; ++j) buf[j] = (g[j] - ci[j]) / eta;
                f[i] = eta * (log_a[i] - lse(buf.data(), T));
            }
            for (int j = 0; j < T; ++j) {
                for (int i = 0; i < S; ++i)
                    buf[i] = (f[i] - c[static_cast<std::size_t>(i) * T + j]) / eta;
                g[j] = eta * (log_b[j] - lse(buf.data(), S));
            }
            // Columns are exact after the g update; track the row residual.
            double err = 0.0;
            for (int i = 0; i < S; ++i) {
                double rs = 0.0;
                const double* ci = &c[static_cast<std::size_t>(i) * T];
                for (int j = 0; j < T; ++j)
                    rs += std::exp((f[i] + g[j] - ci[j]) / eta);
                err += std::abs(rs - a[i]);
            }
            marginal_gap = err;
            if (err <= stage_tol) break;
        }
        if (iterations_left < 0) break;
        if (last_stage && marginal_gap <= tol_final) {
            converged = true;
            break;
        }
        if (last_stage) continue;  // keep polishing within the budget
        eta = std::max(eta_target, eta / 2.0);
    }

    // Round onto the transport polytope and price the feasible plan.
    std::vector<double> p(static_cast<std::size_t>(S) * T);
    for (int i = 0; i < S; ++i)
        for (int j = 0; j < T; ++j)
            p[static_cast<std::size_t>(i) * T + j] = std::exp(
                (f[i] + g[j] - c[static_cast<std::size_t>(i) * T + j]) / eta);
    for (int i = 0; i < S; ++i) {
        double rs = 0.0;
        for (int j = 0; j < T; ++j) rs += p[static_cast<std::size_t>(i) * T + j];
        double scale = rs > a[i] ? a[i] / rs : 1.0;
        for (int j = 0; j < T; ++j) p[static_cast<std::size_t>(i) * T + j] *= scale;
    }
    std::vector<double> colsum(T, 0.0);
    for (int i = 0; i < S; ++i)
        for (int j = 0; j < T; ++j)
            colsum[j] += p[static_cast<std::size_t>(i) * T + j];
    for (int j = 0; j < T; ++j) {
        double scale = colsum[j] > b[j] ? b[j] / colsum[j] : 1.0;
        if (scale < 1.0)
            for (int i = 0; i < S; ++i)
                p[static_cast<std::size_t>(i) * T + j] *= scale;
    }
    std::vector<double> err_a(S, 0.0), err_b(T, 0.0);
    double missing = 0.0;
    for (int i = 0; i < S; ++i) {
        double rs = 0.0;
        for (int j = 0; j < T; ++j) rs += p[static_cast<std::size_t>(i) * T + j];
        err_a[i] = a[i] - rs;
        missing += err_a[i];
    }
    for (int j = 0; j < T; ++j) {
        double cs = 0.0;
        for (int i = 0; i < S; ++i) cs += p[static_cast<std::size_t>(i) * T + j];
        err_b[j] = b[j] - cs;
    }
    if (missing > 0.0)
        for (int i = 0; i < S; ++i)
            for (int j = 0; j < T; ++j)
                p[static_cast<std::size_t>(i) * T + j] +=
                    err_a[i] * err_b[j] / missing;

    long double acc = 0.0L;
    for (std::size_t k = 0; k < p.size(); ++k)
        acc += static_cast<long double>(p[k]) * c[k];
    best_cost = acc;

    if (!converged) {
        std::ostringstream msg;
        msg << "sinkhorn did not converge: best cost "
            << static_cast<double>(best_cost) << ", marginal gap "
            << marginal_gap;
        throw NumericalError(msg.str());
    }
    return static_cast<double>(best_cost);
}

}  // namespace hyperricci
