#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "hyperricci/clustering.hpp"
#include "hyperricci/errors.hpp"
#include "hyperricci/experiments.hpp"
#include "hyperricci/generators.hpp"
#include "hyperricci/io.hpp"

using namespace hyperricci;
using json = nlohmann::json;

namespace {

SolverConfig parse_solver(const std::string& text) {
    SolverConfig solver;
    if (text == "exact") return solver;
    const std::string prefix = "sinkhorn:";
    if (text.rfind(prefix, 0) == 0) {
        solver.kind = SolverConfig::Kind::Sinkhorn;
        std::size_t used = 0;
        double eps = 0.0;
        try {
            eps = std::stod(text.substr(prefix.size()), &used);
        } catch (const std::exception&) {
            throw InputError("bad solver '" + text + "'");
        }
        if (used != text.size() - prefix.size() || !(eps > 0.0))
            throw InputError("bad solver '" + text + "': epsilon must be positive");
        solver.epsilon = eps;
        return solver;
    }
    throw InputError("bad solver '" + text + "' (want exact or sinkhorn:<eps>)");
}

ThresholdCriterion parse_tau(const std::string& text, double* fixed) {
    if (text == "auto-h") return ThresholdCriterion::MaxHypergraphModularity;
    if (text == "auto-c") return ThresholdCriterion::MaxGraphModularity;
    if (text == "auto-nmi") return ThresholdCriterion::MaxNmi;
    std::size_t used = 0;
    try {
        *fixed = std::stod(text, &used);
    } catch (const std::exception&) {
        throw InputError("bad tau '" + text + "'");
    }
    if (used != text.size())
        throw InputError("bad tau '" + text + "' (want auto-h, auto-c, auto-nmi or a number)");
    return ThresholdCriterion::Fixed;
}

WeightingScheme parse_weighting(const std::string& text) {
    if (text == "uniform") return WeightingScheme::Uniform;
    if (text == "jaccard") return WeightingScheme::Jaccard;
    throw InputError("bad weighting '" + text + "'");
}

FlowMethod parse_method(const std::string& text) {
    if (text == "node") return FlowMethod::NodeRicci;
    if (text == "edge") return FlowMethod::EdgeRicci;
    throw InputError("bad method '" + text + "'");
}

struct ClusterArgs {
    std::string input;
    std::string labels;
    std::string method;
    std::string weighting = "jaccard";
    std::string agg = "max";
    double alpha = 0.5;
    double p = 1.0;
    int iters = 20;
    std::string tau = "auto-h";
    std::string solver = "exact";
    std::string measure = "standard";
    int threads = 1;
    std::string out;
};

int run_cluster(const ClusterArgs& args) {
    ParsedHypergraph parsed = load_hypergraph(args.input);
    for (const auto& w : parsed.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());

    std::vector<int> truth;
    bool have_truth = !args.labels.empty();
    if (have_truth) truth = load_labels(args.labels, parsed.node_names);

    ClusterParams params;
    params.flow.method = parse_method(args.method);
    params.flow.iterations = args.iters;
    params.flow.clique_weighting = parse_weighting(args.weighting);
    params.flow.line_weighting = params.flow.clique_weighting;
    params.flow.threads = args.threads;
    params.flow.curvature.alpha = args.alpha;
    params.flow.curvature.p = args.p;
    if (args.agg == "max")
        params.flow.curvature.agg = Aggregation::Max;
    else if (args.agg == "avg")
        params.flow.curvature.agg = Aggregation::Average;
    else
        throw InputError("bad agg '" + args.agg + "'");
    params.flow.curvature.solver = parse_solver(args.solver);
    if (args.measure == "standard")
        params.flow.curvature.variant = MeasureVariant::Standard;
    else if (args.measure == "reduced")
        params.flow.curvature.variant = MeasureVariant::Reduced;
    else
        throw InputError("bad measure '" + args.measure + "'");
    params.criterion = parse_tau(args.tau, &params.fixed_tau);

    ClusterReport report =
        cluster(parsed.h, params, have_truth ? &truth : nullptr);
    for (const auto& w : report.flow.warnings)
        std::fprintf(stderr, "warning: %s\n", w.c_str());

    std::printf("tau=%.17g clusters=%d hypergraph_modularity=%.6f graph_modularity=%.6f",
                report.threshold.tau, report.threshold.clustering.num_clusters,
                report.hyper_q, report.graph_q);
    if (have_truth) std::printf(" nmi=%.6f", report.nmi_value);
    std::printf(" seconds=%.3f\n", report.seconds);

    if (!args.out.empty()) {
        ResultBundle bundle;
        bundle.method = args.method;
        bundle.weighting = args.weighting;
        bundle.agg = args.agg;
        bundle.solver = args.solver;
        bundle.measure = args.measure;
        bundle.alpha = args.alpha;
        bundle.p = args.p;
        bundle.iters = args.iters;
        bundle.tau_mode =
            params.criterion == ThresholdCriterion::Fixed ? "fixed" : args.tau;
        bundle.tau = report.threshold.tau;
        bundle.num_clusters = report.threshold.clustering.num_clusters;
        bundle.nmi_value = report.nmi_value;
        bundle.graph_q = report.graph_q;
        bundle.hyper_q = report.hyper_q;
        bundle.seconds = report.seconds;
        bundle.node_names = parsed.node_names;
        bundle.labels = report.threshold.clustering.labels;
        bundle.hyperedge_weights = report.flow.hyperedge_weights;
        bundle.curve = report.threshold.curve;
        save_result(args.out, bundle);
    }
    return 0;
}

void write_labels_file(const std::string& path,
                       const std::vector<std::string>& names,
                       const std::vector<int>& labels) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    for (std::size_t v = 0; v < names.size(); ++v)
        out << names[v] << ' ' << labels[v] << '\n';
}

int run_eval(const std::string& pred_path, const std::string& labels_path) {
    ResultBundle bundle = load_result(pred_path);
    if (bundle.labels.size() != bundle.node_names.size())
        throw InputError("result file has no per-node labels");
    std::vector<int> truth = load_labels(labels_path, bundle.node_names);
    std::printf("%.6f\n", nmi(bundle.labels, truth));
    return 0;
}

json load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("bad spec file " + path + ": " + e.what());
    }
    return j;
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    return out;
}

int run_bench_sweep(const std::string& spec_path, const std::string& out_path) {
    json j = load_spec(spec_path);
    SweepSpec spec;
    try {
        spec.n = j.value("n", spec.n);
        spec.k = j.value("k", spec.k);
        spec.n_in = j.value("n_in", spec.n_in);
        for (const auto& c : j.at("cells"))
            spec.cells.push_back({c.at("s_in").get<int>(), c.at("s_out").get<int>(),
                                  c.at("n_out").get<int>()});
        spec.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
        if (j.contains("methods")) {
            spec.methods.clear();
            for (const auto& m : j.at("methods"))
                spec.methods.push_back(parse_method(m.get<std::string>()));
        }
        spec.flow.iterations = j.value("iters", spec.flow.iterations);
        spec.flow.clique_weighting =
            parse_weighting(j.value("weighting", std::string("jaccard")));
        spec.flow.line_weighting = spec.flow.clique_weighting;
        spec.flow.curvature.alpha = j.value("alpha", spec.flow.curvature.alpha);
        spec.flow.curvature.p = j.value("p", spec.flow.curvature.p);
        spec.flow.curvature.solver =
            parse_solver(j.value("solver", std::string("exact")));
        spec.flow.threads = j.value("threads", 1);
    } catch (const json::exception& e) {
        throw InputError("bad sweep spec: " + std::string(e.what()));
    }
    std::vector<SweepRow> rows = run_nmi_sweep(spec);
    auto out = open_csv(out_path);
    write_sweep_csv(out, rows);
    return 0;
}

int run_bench_timing(const std::string& spec_path, const std::string& out_path) {
    json j = load_spec(spec_path);
    TimingSpec spec;
    try {
        if (j.contains("k_values"))
            spec.k_values = j.at("k_values").get<std::vector<int>>();
        spec.n = j.value("n", spec.n);
        spec.m = j.value("m", spec.m);
        spec.reps = j.value("reps", spec.reps);
        spec.seed = j.value("seed", spec.seed);
        spec.cell_timeout_seconds =
            j.value("cell_timeout_seconds", spec.cell_timeout_seconds);
        spec.warmup = j.value("warmup", spec.warmup);
        spec.sinkhorn_from_k = j.value("sinkhorn_from_k", spec.sinkhorn_from_k);
        spec.sinkhorn_epsilon = j.value("sinkhorn_epsilon", spec.sinkhorn_epsilon);
    } catch (const json::exception& e) {
        throw InputError("bad timing spec: " + std::string(e.what()));
    }
    std::vector<TimingRow> rows = run_timing_bench(spec);
    auto out = open_csv(out_path);
    write_timing_csv(out, rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ricci flow community detection on hypergraphs"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto* cluster_cmd = app.add_subcommand("cluster", "Flow, trim and score a hypergraph");
    auto cluster_args = std::make_shared<ClusterArgs>();
    cluster_cmd->add_option("--input", cluster_args->input, "hypergraph file")->required();
    cluster_cmd->add_option("--labels", cluster_args->labels, "ground truth labels file");
    cluster_cmd->add_option("--method", cluster_args->method, "node | edge")->required();
    cluster_cmd->add_option("--weighting", cluster_args->weighting, "uniform | jaccard");
    cluster_cmd->add_option("--agg", cluster_args->agg, "max | avg");
    cluster_cmd->add_option("--alpha", cluster_args->alpha, "self mass of node measures");
    cluster_cmd->add_option("--p", cluster_args->p, "weight exponent of node measures");
    cluster_cmd->add_option("--iters", cluster_args->iters, "flow iterations");
    cluster_cmd->add_option("--tau", cluster_args->tau, "auto-h | auto-c | auto-nmi | <float>");
    cluster_cmd->add_option("--solver", cluster_args->solver, "exact | sinkhorn:<eps>");
    cluster_cmd->add_option("--measure", cluster_args->measure, "standard | reduced");
    cluster_cmd->add_option("--threads", cluster_args->threads, "worker pool cap");
    cluster_cmd->add_option("--out", cluster_args->out, "result JSON path");
    cluster_cmd->callback([&action, cluster_args] {
        action = [cluster_args] { return run_cluster(*cluster_args); };
    });

    auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic hypergraph");
    gen_cmd->require_subcommand(1);
    auto gen_out = std::make_shared<std::string>();
    auto gen_labels_out = std::make_shared<std::string>();
    gen_cmd->add_option("--out", *gen_out, "hypergraph file to write")->required();
    gen_cmd->add_option("--labels-out", *gen_labels_out, "planted labels file to write");

    auto* toy_cmd = gen_cmd->add_subcommand("toy", "b cliques of a nodes plus one gateway edge");
    toy_cmd->fallthrough();
    auto toy_a = std::make_shared<int>(6);
    auto toy_b = std::make_shared<int>(4);
    toy_cmd->add_option("--a", *toy_a, "community size")->required();
    toy_cmd->add_option("--b", *toy_b, "community count")->required();
    toy_cmd->callback([&action, toy_a, toy_b, gen_out, gen_labels_out] {
        action = [toy_a, toy_b, gen_out, gen_labels_out] {
            ToyModel t = gen_toy(*toy_a, *toy_b);
            std::vector<std::string> names = numeric_names(t.h.num_nodes());
            save_hypergraph(*gen_out, t.h, names);
            if (!gen_labels_out->empty())
                write_labels_file(*gen_labels_out, names, t.labels);
            return 0;
        };
    });

    auto* hsbm_cmd = gen_cmd->add_subcommand("hsbm", "planted partition hypergraph");
    hsbm_cmd->fallthrough();
    auto hsbm = std::make_shared<HsbmParams>();
    hsbm_cmd->add_option("--n", hsbm->n, "node count");
    hsbm_cmd->add_option("--k", hsbm->k, "community count");
    hsbm_cmd->add_option("--s-in", hsbm->s_in, "intra edge size");
    hsbm_cmd->add_option("--s-out", hsbm->s_out, "inter edge size");
    hsbm_cmd->add_option("--n-in", hsbm->n_in, "intra edge count");
    hsbm_cmd->add_option("--n-out", hsbm->n_out, "inter edge count");
    hsbm_cmd->add_option("--seed", hsbm->seed, "rng seed");
    hsbm_cmd->add_flag("--per-community-intra", hsbm->n_in_per_community,
                       "draw n-in intra edges per community instead of in total");
    hsbm_cmd->callback([&action, hsbm, gen_out, gen_labels_out] {
        action = [hsbm, gen_out, gen_labels_out] {
            HsbmInstance inst = gen_hsbm(*hsbm);
            std::vector<std::string> names = numeric_names(inst.h.num_nodes());
            save_hypergraph(*gen_out, inst.h, names);
            if (!gen_labels_out->empty())
                write_labels_file(*gen_labels_out, names, inst.labels);
            return 0;
        };
    });

    auto* eval_cmd = app.add_subcommand("eval", "NMI of a result against a labels file");
    auto eval_pred = std::make_shared<std::string>();
    auto eval_labels = std::make_shared<std::string>();
    eval_cmd->add_option("--pred", *eval_pred, "result JSON")->required();
    eval_cmd->add_option("--labels", *eval_labels, "labels file")->required();
    eval_cmd->callback([&action, eval_pred, eval_labels] {
        action = [eval_pred, eval_labels] { return run_eval(*eval_pred, *eval_labels); };
    });

    auto* bench_cmd = app.add_subcommand("bench", "batch experiments to CSV");
    bench_cmd->require_subcommand(1);
    auto bench_spec = std::make_shared<std::string>();
    auto bench_out = std::make_shared<std::string>();
    bench_cmd->add_option("--spec", *bench_spec, "JSON spec file")->required();
    bench_cmd->add_option("--out", *bench_out, "CSV path to write")->required();
    auto* sweep_cmd = bench_cmd->add_subcommand("sweep", "NMI over planted partitions");
    sweep_cmd->fallthrough();
    sweep_cmd->callback([&action, bench_spec, bench_out] {
        action = [bench_spec, bench_out] { return run_bench_sweep(*bench_spec, *bench_out); };
    });
    auto* timing_cmd = bench_cmd->add_subcommand("timing", "per-iteration seconds by edge size");
    timing_cmd->fallthrough();
    timing_cmd->callback([&action, bench_spec, bench_out] {
        action = [bench_spec, bench_out] { return run_bench_timing(*bench_spec, *bench_out); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
