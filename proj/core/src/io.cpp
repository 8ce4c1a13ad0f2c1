#include "hyperricci/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "hyperricci/errors.hpp"

namespace hyperricci {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    return out;
}

}  // namespace

ParsedHypergraph parse_hypergraph(std::istream& in) {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> ids;
    std::vector<std::vector<int>> edges;
    std::vector<double> weights;
    std::vector<std::string> warnings;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = line;
        double weight = 1.0;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            body = line.substr(0, hash);
            std::string note = trim(line.substr(hash + 1));
            if (note.rfind("w=", 0) == 0) {
                std::string value = note.substr(2);
                std::size_t used = 0;
                try {
                    weight = std::stod(value, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used == 0 || trim(value.substr(used)) != "" ||
                    !(weight > 0.0)) {
                    std::ostringstream msg;
                    msg << "line " << line_no << ": bad weight annotation '"
                        << note << "'";
                    throw InputError(msg.str());
                }
            }
        }
        std::istringstream tokens(body);
        std::vector<int> edge;
        std::string tok;
        while (tokens >> tok) {
            auto [it, fresh] = ids.try_emplace(tok, static_cast<int>(names.size()));
            if (fresh) names.push_back(tok);
            edge.push_back(it->second);
        }
        std::sort(edge.begin(), edge.end());
        edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
        if (edge.empty()) continue;
        if (edge.size() == 1) {
            std::ostringstream msg;
            msg << "line " << line_no << ": dropped one-node edge '"
                << names[edge[0]] << "'";
            warnings.push_back(msg.str());
            continue;
        }
        edges.push_back(std::move(edge));
        weights.push_back(weight);
    }

    ParsedHypergraph out;
    out.h = Hypergraph(static_cast<int>(names.size()), edges, weights);
    out.node_names = std::move(names);
    out.warnings = std::move(warnings);
    require_valid(out.h);
    return out;
}

ParsedHypergraph load_hypergraph(const std::string& path) {
    auto in = open_in(path);
    return parse_hypergraph(in);
}

void serialize_hypergraph(std::ostream& os, const Hypergraph& h,
                          const std::vector<std::string>& node_names) {
    if (node_names.size() != static_cast<std::size_t>(h.num_nodes()))
        throw InputError("serialize_hypergraph: name count mismatch");
    os << std::setprecision(17);
    for (int e = 0; e < h.num_edges(); ++e) {
        const auto& nodes = h.edge(e);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (i) os << ' ';
            os << node_names[nodes[i]];
        }
        if (h.edge_weight(e) != 1.0) os << " # w=" << h.edge_weight(e);
        os << '\n';
    }
}

void save_hypergraph(const std::string& path, const Hypergraph& h,
                     const std::vector<std::string>& node_names) {
    auto out = open_out(path);
    serialize_hypergraph(out, h, node_names);
}

std::vector<int> parse_labels(std::istream& in,
                              const std::vector<std::string>& node_names) {
    std::unordered_map<std::string, int> node_id;
    for (std::size_t i = 0; i < node_names.size(); ++i)
        node_id[node_names[i]] = static_cast<int>(i);

    std::vector<int> labels(node_names.size(), -1);
    std::unordered_map<std::string, int> label_ids;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream tokens(line);
        std::string node, label, extra;
        if (!(tokens >> node)) continue;
        if (!(tokens >> label) || (tokens >> extra)) {
            std::ostringstream msg;
            msg << "labels line " << line_no << ": expected 'node label'";
            throw InputError(msg.str());
        }
        auto it = node_id.find(node);
        if (it == node_id.end())
            throw InputError("labels: unknown node '" + node + "'");
        if (labels[it->second] >= 0)
            throw InputError("labels: node '" + node + "' listed twice");
        auto [lit, fresh] =
            label_ids.try_emplace(label, static_cast<int>(label_ids.size()));
        labels[it->second] = lit->second;
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] < 0)
            throw InputError("labels: missing label for node '" +
                             node_names[i] + "'");
    return labels;
}

std::vector<int> load_labels(const std::string& path,
                             const std::vector<std::string>& node_names) {
    auto in = open_in(path);
    return parse_labels(in, node_names);
}

std::vector<std::string> numeric_names(int n) {
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
    return names;
}

namespace {

json curve_to_json(const std::vector<ThresholdPoint>& curve) {
    json arr = json::array();
    for (const auto& pt : curve)
        arr.push_back({{"tau", pt.tau},
                       {"num_clusters", pt.num_clusters},
                       {"graph_q", pt.graph_q},
                       {"hyper_q", pt.hyper_q},
                       {"nmi", pt.nmi_value}});
    return arr;
}

std::vector<ThresholdPoint> curve_from_json(const json& arr) {
    std::vector<ThresholdPoint> curve;
    for (const auto& row : arr) {
        ThresholdPoint pt;
        pt.tau = row.at("tau").get<double>();
        pt.num_clusters = row.at("num_clusters").get<int>();
        pt.graph_q = row.at("graph_q").get<double>();
        pt.hyper_q = row.at("hyper_q").get<double>();
        pt.nmi_value = row.at("nmi").get<double>();
        curve.push_back(pt);
    }
    return curve;
}

}  // namespace

void save_result(const std::string& path, const ResultBundle& bundle) {
    json j{{"schema", 1},
           {"method", bundle.method},
           {"weighting", bundle.weighting},
           {"agg", bundle.agg},
           {"solver", bundle.solver},
           {"measure", bundle.measure},
           {"alpha", bundle.alpha},
           {"p", bundle.p},
           {"iters", bundle.iters},
           {"tau_mode", bundle.tau_mode},
           {"tau", bundle.tau},
           {"num_clusters", bundle.num_clusters},
           {"nmi", bundle.nmi_value},
           {"graph_modularity", bundle.graph_q},
           {"hypergraph_modularity", bundle.hyper_q},
           {"seconds", bundle.seconds},
           {"node_names", bundle.node_names},
           {"labels", bundle.labels},
           {"hyperedge_weights", bundle.hyperedge_weights},
           {"curve", curve_to_json(bundle.curve)}};
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

ResultBundle load_result(const std::string& path) {
    auto in = open_in(path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("bad result file " + path + ": " + e.what());
    }
    ResultBundle b;
    try {
        if (j.at("schema").get<int>() != 1)
            throw InputError("result file " + path + ": unsupported schema version");
        b.method = j.at("method").get<std::string>();
        b.weighting = j.at("weighting").get<std::string>();
        b.agg = j.at("agg").get<std::string>();
        b.solver = j.at("solver").get<std::string>();
        b.measure = j.at("measure").get<std::string>();
        b.alpha = j.at("alpha").get<double>();
        b.p = j.at("p").get<double>();
        b.iters = j.at("iters").get<int>();
        b.tau_mode = j.at("tau_mode").get<std::string>();
        b.tau = j.at("tau").get<double>();
        b.num_clusters = j.at("num_clusters").get<int>();
        b.nmi_value = j.at("nmi").get<double>();
        b.graph_q = j.at("graph_modularity").get<double>();
        b.hyper_q = j.at("hypergraph_modularity").get<double>();
        b.seconds = j.at("seconds").get<double>();
        b.node_names = j.at("node_names").get<std::vector<std::string>>();
        b.labels = j.at("labels").get<std::vector<int>>();
        b.hyperedge_weights =
            j.at("hyperedge_weights").get<std::vector<double>>();
        b.curve = curve_from_json(j.at("curve"));
    } catch (const json::exception& e) {
        throw InputError("bad result file " + path + ": " + e.what());
    }
    return b;
}

}  // namespace hyperricci
