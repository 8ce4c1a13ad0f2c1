#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperricci/clustering.hpp"
#include "hyperricci/generators.hpp"

namespace hyperricci {

struct SweepCell {
    int s_in = 2;
    int s_out = 4;
    int n_out = 0;
};

struct SweepSpec {
    int n = 100;
    int k = 2;
    int n_in = 200;
    std::vector<SweepCell> cells;
    std::vector<std::uint64_t> seeds;
    std::vector<FlowMethod> methods = {FlowMethod::NodeRicci,
                                       FlowMethod::EdgeRicci};
    FlowConfig flow;  // method field is overridden per run
    ThresholdCriterion criterion = ThresholdCriterion::MaxNmi;
};

struct SweepRow {
    int s_in = 0;
    int s_out = 0;
    int n_out = 0;
    FlowMethod method = FlowMethod::NodeRicci;
    std::uint64_t seed = 0;
    double nmi = 0.0;
};

std::vector<SweepRow> run_nmi_sweep(const SweepSpec& spec);

struct TimingSpec {
    std::vector<int> k_values = {20, 60, 100};
    int n = 1000;
    int m = 300;
    int reps = 3;
    std::uint64_t seed = 1;
    double cell_timeout_seconds = 0.0;  // 0 = unlimited
    bool warmup = true;
    // Node transport switches to Sinkhorn at K >= this; edge transport stays
    // exact.
    int sinkhorn_from_k = 1 << 30;
    double sinkhorn_epsilon = 0.01;
};

struct TimingRow {
    int k = 0;
    FlowMethod method = FlowMethod::NodeRicci;
    int rep = 0;
    double seconds = 0.0;  // +inf when the cell timed out
};

// One flow iteration per rep on a K-uniform instance, uniform expansion
// weights. A cell whose warmup run times out records +inf for every rep.
std::vector<TimingRow> run_timing_bench(const TimingSpec& spec);

const char* method_name(FlowMethod m);

// CSV schemas: s_in,s_out,N_out,method,seed,nmi and K,method,rep,seconds.
// Infinities are written as "inf".
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_timing_csv(std::ostream& os, const std::vector<TimingRow>& rows);

// Strict inverses of the writers (header line required), so emitted CSV
// round-trips losslessly.
std::vector<SweepRow> read_sweep_csv(std::istream& is);
std::vector<TimingRow> read_timing_csv(std::istream& is);

}  // namespace hyperricci
