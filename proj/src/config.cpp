#include "ltwd/config.hpp"

#include <cmath>

#include "ltwd/random.hpp"

namespace ltwd {

namespace {

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

void require(bool ok, const std::string& field, const std::string& reason) {
    if (!ok) throw ConfigError(field, reason);
}

}  // namespace

std::string_view to_string(Model model) {
    switch (model) {
        case Model::ThreeWay: return "threeway";
        case Model::DeGrootUniform: return "degroot-uniform";
        case Model::DeGrootDistance: return "degroot-distance";
        case Model::HkHomogeneous: return "hk-homogeneous";
        case Model::HkHeterogeneous: return "hk-heterogeneous";
    }
    return "unknown";
}

std::optional<Model> parse_model(std::string_view name) {
    for (auto m : {Model::ThreeWay, Model::DeGrootUniform, Model::DeGrootDistance, Model::HkHomogeneous,
                   Model::HkHeterogeneous}) {
        if (to_string(m) == name) return m;
    }
    return std::nullopt;
}

std::string_view to_string(OpinionState state) {
    return state == OpinionState::Linguistic ? "linguistic" : "numeric";
}

std::optional<OpinionState> parse_opinion_state(std::string_view name) {
    if (name == "linguistic") return OpinionState::Linguistic;
    if (name == "numeric") return OpinionState::Numeric;
    return std::nullopt;
}

void SimulationConfig::validate() const {
    require(n_agents >= 1, "n_agents", "must be >= 1");
    require(phi >= 1, "term_set.phi", "must be >= 1");
    require(base > 1.0 && std::isfinite(base), "term_set.base", "must be a finite value > 1");
    require(in_unit(thresholds.alpha), "thresholds.alpha", "must lie in [0, 1]");
    require(in_unit(thresholds.beta), "thresholds.beta", "must lie in [0, 1]");
    require(thresholds.alpha <= thresholds.beta, "thresholds", "alpha <= beta violated");
    require(thresholds.lambda >= 0.0 && std::isfinite(thresholds.lambda), "thresholds.lambda",
            "must be finite and >= 0");
    require(in_unit(inertia), "inertia", "must lie in [0, 1]");
    require(in_unit(rewiring.delta_add), "rewiring.delta_add", "must lie in [0, 1]");
    require(in_unit(rewiring.delta_cut), "rewiring.delta_cut", "must lie in [0, 1]");
    require(in_unit(rewiring.p_add), "rewiring.p_add", "must lie in [0, 1]");
    require(in_unit(rewiring.p_cut), "rewiring.p_cut", "must lie in [0, 1]");
    require(t_max >= 1, "t_max", "must be >= 1");
    require(epsilon > 0.0 && std::isfinite(epsilon), "epsilon", "must be > 0");
    require(d_max > 0.0, "metrics.d_max", "must be > 0");
    if (cluster_tolerance) require(*cluster_tolerance >= 0.0, "metrics.cluster_tolerance", "must be >= 0");

    if (const auto* terms = std::get_if<std::vector<int>>(&initial_opinions)) {
        require(terms->size() == n_agents, "initial_opinions",
                "length mismatch: " + std::to_string(terms->size()) + " opinions for n_agents = " +
                    std::to_string(n_agents));
        for (std::size_t i = 0; i < terms->size(); ++i) {
            require((*terms)[i] >= 0 && (*terms)[i] <= 2 * phi, "initial_opinions[" + std::to_string(i) + "]",
                    "term index outside [0, " + std::to_string(2 * phi) + "]");
        }
    }

    if (const auto* spec = std::get_if<RandomNetworkSpec>(&initial_network)) {
        require(in_unit(spec->edge_prob), "initial_network.random.edge_prob", "must lie in [0, 1]");
    } else {
        const auto& edges = std::get<std::vector<Edge>>(initial_network);
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const auto [i, j] = edges[k];
            const auto field = "initial_network.edges[" + std::to_string(k) + "]";
            require(i < n_agents && j < n_agents, field, "vertex index out of range");
            require(i != j, field, "self-loop");
        }
    }

    if (model == Model::HkHomogeneous) {
        require(hk_epsilon.has_value(), "hk.epsilon", "required for hk-homogeneous");
        require(in_unit(*hk_epsilon), "hk.epsilon", "must lie in [0, 1]");
    }
    if (model == Model::HkHeterogeneous) {
        require(hk_bounds.size() == n_agents, "hk.bounds",
                "length mismatch: " + std::to_string(hk_bounds.size()) + " bounds for n_agents = " +
                    std::to_string(n_agents));
        for (std::size_t i = 0; i < hk_bounds.size(); ++i) {
            require(in_unit(hk_bounds[i]), "hk.bounds[" + std::to_string(i) + "]", "must lie in [0, 1]");
        }
    }
}

OpinionState SimulationConfig::resolved_opinion_state() const {
    if (opinion_state) return *opinion_state;
    switch (model) {
        case Model::DeGrootUniform:
        case Model::DeGrootDistance:
            return OpinionState::Numeric;
        default:
            return OpinionState::Linguistic;
    }
}

double SimulationConfig::resolved_cluster_tolerance() const {
    if (cluster_tolerance) return *cluster_tolerance;
    return term_set().min_gap() / 2.0;
}

std::vector<int> resolve_initial_terms(const SimulationConfig& config) {
    if (const auto* terms = std::get_if<std::vector<int>>(&config.initial_opinions)) return *terms;
    const auto& spec = std::get<RandomOpinionsSpec>(config.initial_opinions);
    RandomSource rng(spec.seed.value_or(config.seed), streams::kInitialOpinions);
    std::vector<int> terms(config.n_agents);
    for (auto& t : terms) t = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * config.phi + 1)));
    return terms;
}

SocialNetwork resolve_initial_network(const SimulationConfig& config) {
    if (const auto* edges = std::get_if<std::vector<Edge>>(&config.initial_network)) {
        return SocialNetwork::from_edges(config.n_agents, *edges);
    }
    const auto& spec = std::get<RandomNetworkSpec>(config.initial_network);
    RandomSource rng(spec.seed.value_or(config.seed), streams::kInitialNetwork);
    return random_network(config.n_agents, spec.edge_prob, rng);
}

}  // namespace ltwd
