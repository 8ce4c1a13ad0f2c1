#include "hyperricci/experiments.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "hyperricci/errors.hpp"
#include "hyperricci/rng.hpp"

namespace hyperricci {

const char* method_name(FlowMethod m) {
    return m == FlowMethod::NodeRicci ? "node" : "edge";
}

std::vector<SweepRow> run_nmi_sweep(const SweepSpec& spec) {
    if (spec.cells.empty()) throw InputError("sweep: no cells");
    if (spec.seeds.empty()) throw InputError("sweep: no seeds");
    std::vector<SweepRow> rows;
    for (const SweepCell& cell : spec.cells) {
        for (FlowMethod method : spec.methods) {
            for (std::uint64_t seed : spec.seeds) {
                HsbmParams hp;
                hp.n = spec.n;
                hp.k = spec.k;
                hp.n_in = spec.n_in;
                hp.s_in = cell.s_in;
                hp.s_out = cell.s_out;
                hp.n_out = cell.n_out;
                hp.seed = seed;
                HsbmInstance inst = gen_hsbm(hp);

                ClusterParams params;
                params.flow = spec.flow;
                params.flow.method = method;
                params.criterion = spec.criterion;
                ClusterReport report =
                    cluster(inst.h, params, &inst.labels);

                SweepRow row;
                row.s_in = cell.s_in;
                row.s_out = cell.s_out;
                row.n_out = cell.n_out;
                row.method = method;
                row.seed = seed;
                row.nmi = report.nmi_value;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

std::vector<TimingRow> run_timing_bench(const TimingSpec& spec) {
    if (spec.reps < 1) throw InputError("timing: need at least one rep");
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<TimingRow> rows;
    for (int k : spec.k_values) {
        Hypergraph h = gen_k_uniform(spec.n, spec.m, k, splitmix64(spec.seed) ^
                                                            static_cast<std::uint64_t>(k));
        for (FlowMethod method : {FlowMethod::NodeRicci, FlowMethod::EdgeRicci}) {
            FlowConfig cfg;
            cfg.method = method;
            cfg.iterations = 1;
            cfg.clique_weighting = WeightingScheme::Uniform;
            cfg.line_weighting = WeightingScheme::Uniform;
            cfg.max_seconds = spec.cell_timeout_seconds;
            if (method == FlowMethod::NodeRicci && k >= spec.sinkhorn_from_k) {
                cfg.curvature.solver.kind = SolverConfig::Kind::Sinkhorn;
                cfg.curvature.solver.epsilon = spec.sinkhorn_epsilon;
            }

            auto run_once = [&]() -> double {
                FlowState st = run_flow(h, cfg);
                if (st.timed_out || st.iteration_seconds.empty()) return kInf;
                return st.iteration_seconds[0];
            };

            bool dead = false;
            if (spec.warmup) dead = std::isinf(run_once());
            for (int rep = 0; rep < spec.reps; ++rep) {
                TimingRow row;
                row.k = k;
                row.method = method;
                row.rep = rep;
                row.seconds = dead ? kInf : run_once();
                if (std::isinf(row.seconds)) dead = true;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << std::setprecision(17);
    os << "s_in,s_out,N_out,method,seed,nmi\n";
    for (const auto& r : rows)
        os << r.s_in << ',' << r.s_out << ',' << r.n_out << ','
           << method_name(r.method) << ',' << r.seed << ',' << r.nmi << '\n';
}

void write_timing_csv(std::ostream& os, const std::vector<TimingRow>& rows) {
    os << std::setprecision(17);
    os << "K,method,rep,seconds\n";
    for (const auto& r : rows) {
        os << r.k << ',' << method_name(r.method) << ',' << r.rep << ',';
        if (std::isinf(r.seconds))
            os << "inf";
        else
            os << r.seconds;
        os << '\n';
    }
}

namespace {

std::vector<std::string> csv_fields(const std::string& line, std::size_t want) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (fields.size() != want)
        throw InputError("csv: expected " + std::to_string(want) +
                         " fields in '" + line + "'");
    return fields;
}

FlowMethod parse_method_field(const std::string& s) {
    if (s == "node") return FlowMethod::NodeRicci;
    if (s == "edge") return FlowMethod::EdgeRicci;
    throw InputError("csv: unknown method '" + s + "'");
}

long long parse_int_field(const std::string& s) {
    std::size_t pos = 0;
    long long v;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw InputError("csv: bad integer '" + s + "'");
    }
    if (pos != s.size()) throw InputError("csv: bad integer '" + s + "'");
    return v;
}

double parse_double_field(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw InputError("csv: bad number '" + s + "'");
    }
    if (pos != s.size()) throw InputError("csv: bad number '" + s + "'");
    return v;
}

}  // namespace

std::vector<SweepRow> read_sweep_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "s_in,s_out,N_out,method,seed,nmi")
        throw InputError("csv: bad sweep header");
    std::vector<SweepRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto f = csv_fields(line, 6);
        SweepRow r;
        r.s_in = int(parse_int_field(f[0]));
        r.s_out = int(parse_int_field(f[1]));
        r.n_out = int(parse_int_field(f[2]));
        r.method = parse_method_field(f[3]);
        r.seed = std::uint64_t(parse_int_field(f[4]));
        r.nmi = parse_double_field(f[5]);
        rows.push_back(r);
    }
    return rows;
}

std::vector<TimingRow> read_timing_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "K,method,rep,seconds")
        throw InputError("csv: bad timing header");
    std::vector<TimingRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto f = csv_fields(line, 4);
        TimingRow r;
        r.k = int(parse_int_field(f[0]));
        r.method = parse_method_field(f[1]);
        r.rep = int(parse_int_field(f[2]));
        r.seconds = parse_double_field(f[3]);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace hyperricci
