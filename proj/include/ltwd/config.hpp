#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ltwd/linguistic.hpp"
#include "ltwd/network.hpp"
#include "ltwd/threeway.hpp"

namespace ltwd {

/// Invalid configuration. `field()` is a dotted path such as
/// "thresholds.alpha" or "initial_opinions[3]".
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& reason)
        : std::runtime_error(field + ": " + reason), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

enum class Model { ThreeWay, DeGrootUniform, DeGrootDistance, HkHomogeneous, HkHeterogeneous };

std::string_view to_string(Model model);
std::optional<Model> parse_model(std::string_view name);

// Linguistic: after every step the numeric opinion is replaced by the value
// of its nearest term. Numeric: the raw average is carried forward.
enum class OpinionState { Linguistic, Numeric };

std::string_view to_string(OpinionState state);
std::optional<OpinionState> parse_opinion_state(std::string_view name);

struct RandomNetworkSpec {
    double edge_prob = 0.1;
    std::optional<std::uint64_t> seed;  // falls back to the run seed
};

struct RandomOpinionsSpec {
    std::optional<std::uint64_t> seed;  // falls back to the run seed
};

using InitialNetwork = std::variant<RandomNetworkSpec, std::vector<Edge>>;
using InitialOpinions = std::variant<std::vector<int>, RandomOpinionsSpec>;

struct SimulationConfig {
    Model model = Model::ThreeWay;
    std::size_t n_agents = 0;
    int phi = 3;
    double base = 2.0;
    ThreeWayThresholds thresholds;
    double inertia = 0.0;
    RewiringParams rewiring;
    int t_max = 10;
    double epsilon = 1e-3;
    std::uint64_t seed = 1;
    InitialOpinions initial_opinions;
    InitialNetwork initial_network;
    std::optional<OpinionState> opinion_state;

    // Baseline parameters.
    std::optional<double> hk_epsilon;  // homogeneous bound
    std::vector<double> hk_bounds;     // heterogeneous bounds, one per agent
    bool degroot_freeze_weights = false;

    // Metric parameters.
    double d_max = 0.5;
    std::optional<double> cluster_tolerance;

    // Throws ConfigError naming the offending field.
    void validate() const;

    LinguisticTermSet term_set() const { return LinguisticTermSet(phi, base); }
    OpinionState resolved_opinion_state() const;
    double resolved_cluster_tolerance() const;
};

// Term indices at t = 0, drawn if the config asks for random opinions.
std::vector<int> resolve_initial_terms(const SimulationConfig& config);
SocialNetwork resolve_initial_network(const SimulationConfig& config);

}  // namespace ltwd
