#pragma once

#include <vector>

#include "hyperricci/shortest_paths.hpp"

namespace hyperricci {

struct CostMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> d;  // row-major

    double at(int i, int j) const { return d[static_cast<std::size_t>(i) * cols + j]; }
    double& at(int i, int j) { return d[static_cast<std::size_t>(i) * cols + j]; }
};

// Pairwise distances between two support sets, looked up through the oracle.
CostMatrix support_costs(const MetricOracle& oracle, const std::vector<int>& a,
                         const std::vector<int>& b);

// Same, but reuses the caller's matrix storage.
void support_costs(const MetricOracle& oracle, const std::vector<int>& a,
                   const std::vector<int>& b, CostMatrix& out);

struct TransportPlan {
    struct Entry {
        int i;
        int j;
        double mass;
    };
    std::vector<Entry> entries;
    double cost = 0.0;
    // Optimal dual potentials: feasible (u_i + v_j <= c_ij) and tight on the
    // support of the plan, so they certify optimality.
    std::vector<double> potential_mu;
    std::vector<double> potential_nu;
};

// Exact W1 between two probability vectors over the given cost matrix,
// solved as a transportation problem with successive shortest paths.
TransportPlan wasserstein1_exact(const std::vector<double>& mu,
                                 const std::vector<double>& nu,
                                 const CostMatrix& cost);

// Entropic approximation with epsilon scaling and feasibility rounding.
// The returned value is the cost of a feasible plan within epsilon of the
// exact optimum.
double wasserstein1_sinkhorn(const std::vector<double>& mu,
                             const std::vector<double>& nu,
                             const CostMatrix& cost, double epsilon);

}  // namespace hyperricci
