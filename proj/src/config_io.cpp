#include "ltwd/config_io.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <string>

namespace ltwd {

namespace {

using nlohmann::json;

std::string join(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [key, _] : obj.items()) {
        if (!keys.contains(key)) throw ConfigError(join(path, key), "unknown field");
    }
}

const json& object_at(const json& parent, const char* key, const std::string& path) {
    const auto& v = parent.at(key);
    if (!v.is_object()) throw ConfigError(path, "expected an object");
    return v;
}

double read_number(const json& v, const std::string& path) {
    if (!v.is_number()) throw ConfigError(path, "expected a number");
    return v.get<double>();
}

std::uint64_t read_unsigned(const json& v, const std::string& path) {
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0)) {
        throw ConfigError(path, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

long long read_integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
    return v.get<long long>();
}

void maybe_number(const json& obj, const char* key, const std::string& parent, double& out) {
    if (obj.contains(key)) out = read_number(obj.at(key), join(parent, key));
}

std::optional<std::uint64_t> maybe_seed(const json& obj, const std::string& path) {
    if (!obj.contains("seed")) return std::nullopt;
    return read_unsigned(obj.at("seed"), join(path, "seed"));
}

InitialOpinions read_opinions(const json& v) {
    const std::string path = "initial_opinions";
    if (v.is_array()) {
        std::vector<int> terms;
        for (std::size_t i = 0; i < v.size(); ++i) {
            terms.push_back(static_cast<int>(read_integer(v[i], path + "[" + std::to_string(i) + "]")));
        }
        return terms;
    }
    if (v.is_object()) {
        reject_unknown(v, path, {"random"});
        if (!v.contains("random")) throw ConfigError(path, "expected an array of term indices or {\"random\": {...}}");
        const auto& r = object_at(v, "random", path + ".random");
        reject_unknown(r, path + ".random", {"seed"});
        return RandomOpinionsSpec{maybe_seed(r, path + ".random")};
    }
    throw ConfigError(path, "expected an array of term indices or {\"random\": {...}}");
}

InitialNetwork read_network(const json& v) {
    const std::string path = "initial_network";
    if (!v.is_object()) throw ConfigError(path, "expected an object");
    reject_unknown(v, path, {"edges", "random"});
    if (v.contains("edges") == v.contains("random")) {
        throw ConfigError(path, "exactly one of \"edges\" or \"random\" is required");
    }
    if (v.contains("edges")) {
        const auto& arr = v.at("edges");
        if (!arr.is_array()) throw ConfigError(path + ".edges", "expected an array of [i, j] pairs");
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < arr.size(); ++k) {
            const auto field = path + ".edges[" + std::to_string(k) + "]";
            const auto& e = arr[k];
            if (!e.is_array() || e.size() != 2) throw ConfigError(field, "expected an [i, j] pair");
            edges.emplace_back(read_unsigned(e[0], field + "[0]"), read_unsigned(e[1], field + "[1]"));
        }
        return edges;
    }
    const auto& r = object_at(v, "random", path + ".random");
    reject_unknown(r, path + ".random", {"edge_prob", "seed"});
    RandomNetworkSpec spec;
    maybe_number(r, "edge_prob", path + ".random", spec.edge_prob);
    spec.seed = maybe_seed(r, path + ".random");
    return spec;
}

}  // namespace

SimulationConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("<root>", "expected a JSON object");
    reject_unknown(doc, "",
                   {"model", "n_agents", "term_set", "thresholds", "inertia", "rewiring", "t_max", "epsilon", "seed",
                    "initial_opinions", "initial_network", "opinion_state", "hk", "degroot", "metrics"});

    SimulationConfig cfg;
    if (doc.contains("model")) {
        const auto& m = doc.at("model");
        if (!m.is_string()) throw ConfigError("model", "expected a string");
        const auto parsed = parse_model(m.get<std::string>());
        if (!parsed) throw ConfigError("model", "unknown model \"" + m.get<std::string>() + "\"");
        cfg.model = *parsed;
    }

    if (!doc.contains("n_agents")) throw ConfigError("n_agents", "required field missing");
    const auto n = read_integer(doc.at("n_agents"), "n_agents");
    if (n < 1) throw ConfigError("n_agents", "must be >= 1");
    cfg.n_agents = static_cast<std::size_t>(n);

    if (doc.contains("term_set")) {
        const auto& ts = object_at(doc, "term_set", "term_set");
        reject_unknown(ts, "term_set", {"phi", "base"});
        if (ts.contains("phi")) cfg.phi = static_cast<int>(read_integer(ts.at("phi"), "term_set.phi"));
        maybe_number(ts, "base", "term_set", cfg.base);
    }
    if (doc.contains("thresholds")) {
        const auto& th = object_at(doc, "thresholds", "thresholds");
        reject_unknown(th, "thresholds", {"alpha", "beta", "lambda"});
        maybe_number(th, "alpha", "thresholds", cfg.thresholds.alpha);
        maybe_number(th, "beta", "thresholds", cfg.thresholds.beta);
        maybe_number(th, "lambda", "thresholds", cfg.thresholds.lambda);
    }
    maybe_number(doc, "inertia", "", cfg.inertia);
    if (doc.contains("rewiring")) {
        const auto& rw = object_at(doc, "rewiring", "rewiring");
        reject_unknown(rw, "rewiring", {"delta_add", "delta_cut", "p_add", "p_cut"});
        maybe_number(rw, "delta_add", "rewiring", cfg.rewiring.delta_add);
        maybe_number(rw, "delta_cut", "rewiring", cfg.rewiring.delta_cut);
        maybe_number(rw, "p_add", "rewiring", cfg.rewiring.p_add);
        maybe_number(rw, "p_cut", "rewiring", cfg.rewiring.p_cut);
    }
    if (doc.contains("t_max")) cfg.t_max = static_cast<int>(read_integer(doc.at("t_max"), "t_max"));
    maybe_number(doc, "epsilon", "", cfg.epsilon);
    if (doc.contains("seed")) cfg.seed = read_unsigned(doc.at("seed"), "seed");

    if (!doc.contains("initial_opinions")) throw ConfigError("initial_opinions", "required field missing");
    cfg.initial_opinions = read_opinions(doc.at("initial_opinions"));
    if (doc.contains("initial_network")) cfg.initial_network = read_network(doc.at("initial_network"));

    if (doc.contains("opinion_state")) {
        const auto& s = doc.at("opinion_state");
        if (!s.is_string()) throw ConfigError("opinion_state", "expected a string");
        cfg.opinion_state = parse_opinion_state(s.get<std::string>());
        if (!cfg.opinion_state) throw ConfigError("opinion_state", "expected \"linguistic\" or \"numeric\"");
    }
    if (doc.contains("hk")) {
        const auto& hk = object_at(doc, "hk", "hk");
        reject_unknown(hk, "hk", {"epsilon", "bounds"});
        if (hk.contains("epsilon")) cfg.hk_epsilon = read_number(hk.at("epsilon"), "hk.epsilon");
        if (hk.contains("bounds")) {
            const auto& b = hk.at("bounds");
            if (!b.is_array()) throw ConfigError("hk.bounds", "expected an array of numbers");
            for (std::size_t i = 0; i < b.size(); ++i) {
                cfg.hk_bounds.push_back(read_number(b[i], "hk.bounds[" + std::to_string(i) + "]"));
            }
        }
    }
    if (doc.contains("degroot")) {
        const auto& dg = object_at(doc, "degroot", "degroot");
        reject_unknown(dg, "degroot", {"freeze_weights"});
        if (dg.contains("freeze_weights")) {
            if (!dg.at("freeze_weights").is_boolean()) throw ConfigError("degroot.freeze_weights", "expected a boolean");
            cfg.degroot_freeze_weights = dg.at("freeze_weights").get<bool>();
        }
    }
    if (doc.contains("metrics")) {
        const auto& m = object_at(doc, "metrics", "metrics");
        reject_unknown(m, "metrics", {"d_max", "cluster_tolerance"});
        maybe_number(m, "d_max", "metrics", cfg.d_max);
        if (m.contains("cluster_tolerance")) {
            cfg.cluster_tolerance = read_number(m.at("cluster_tolerance"), "metrics.cluster_tolerance");
        }
    }

    cfg.validate();
    return cfg;
}

SimulationConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("<file>", "cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("<file>", path.string() + ": " + e.what());
    }
    return parse_config(doc);
}

json to_json(const SimulationConfig& c) {
    json doc;
    doc["model"] = std::string(to_string(c.model));
    doc["n_agents"] = c.n_agents;
    doc["term_set"] = {{"phi", c.phi}, {"base", c.base}};
    doc["thresholds"] = {{"alpha", c.thresholds.alpha}, {"beta", c.thresholds.beta}, {"lambda", c.thresholds.lambda}};
    doc["inertia"] = c.inertia;
    doc["rewiring"] = {{"delta_add", c.rewiring.delta_add},
                       {"delta_cut", c.rewiring.delta_cut},
                       {"p_add", c.rewiring.p_add},
                       {"p_cut", c.rewiring.p_cut}};
    doc["t_max"] = c.t_max;
    doc["epsilon"] = c.epsilon;
    doc["seed"] = c.seed;
    doc["opinion_state"] = std::string(to_string(c.resolved_opinion_state()));

    if (const auto* terms = std::get_if<std::vector<int>>(&c.initial_opinions)) {
        doc["initial_opinions"] = *terms;
    } else {
        const auto& spec = std::get<RandomOpinionsSpec>(c.initial_opinions);
        doc["initial_opinions"] = {{"random", {{"seed", spec.seed.value_or(c.seed)}}}};
    }
    if (const auto* edges = std::get_if<std::vector<Edge>>(&c.initial_network)) {
        json arr = json::array();
        for (const auto& [i, j] : *edges) arr.push_back({i, j});
        doc["initial_network"] = {{"edges", arr}};
    } else {
        const auto& spec = std::get<RandomNetworkSpec>(c.initial_network);
        doc["initial_network"] = {{"random", {{"edge_prob", spec.edge_prob}, {"seed", spec.seed.value_or(c.seed)}}}};
    }

    json hk = json::object();
    if (c.hk_epsilon) hk["epsilon"] = *c.hk_epsilon;
    if (!c.hk_bounds.empty()) hk["bounds"] = c.hk_bounds;
    if (!hk.empty()) doc["hk"] = hk;
    doc["degroot"] = {{"freeze_weights", c.degroot_freeze_weights}};
    doc["metrics"] = {{"d_max", c.d_max}, {"cluster_tolerance", c.resolved_cluster_tolerance()}};
    return doc;
}

}  // namespace ltwd
