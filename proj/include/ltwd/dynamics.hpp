#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ltwd/config.hpp"
#include "ltwd/linguistic.hpp"
#include "ltwd/network.hpp"
#include "ltwd/random.hpp"
#include "ltwd/threeway.hpp"
#include "ltwd/trajectory.hpp"

namespace ltwd {

struct AgentState {
    int term_index = 0;
    double value = 0.0;
};

struct DynamicsParams {
    ThreeWayThresholds thresholds;
    double inertia = 0.0;
    RewiringParams rewiring;
    OpinionState state = OpinionState::Linguistic;

    static DynamicsParams from_config(const SimulationConfig& config);
};

struct StepCounters {
    std::uint64_t filter_pair_visits = 0;
    std::uint64_t rewire_pair_visits = 0;

    std::uint64_t total() const { return filter_pair_visits + rewire_pair_visits; }
};

struct StepResult {
    std::vector<double> values;
    std::vector<int> terms;
    SocialNetwork network;
    double delta_max = 0.0;
    StepCounters counters;
};

/// Linked agents j != agent that pass the three-way rule, ascending.
/// Draws from `rng` only for hesitation-zone candidates, in ascending j.
std::vector<std::size_t> filter_neighbors(std::size_t agent, std::span<const double> opinions,
                                          const SocialNetwork& net, const ThreeWayThresholds& thresholds,
                                          RandomSource& rng, std::uint64_t* pair_visits = nullptr);

// inertia * current + (1 - inertia) * mean(accepted); unchanged when nothing was accepted.
double update_value(double current, std::span<const std::size_t> accepted, std::span<const double> opinions,
                    double inertia);

/// One synchronous iteration: filter and average every agent against the
/// time-t opinions, map back to terms, then rewire against the same time-t
/// opinions. RNG order is all filtering draws, then all rewiring draws.
StepResult step(std::span<const double> opinions, const SocialNetwork& net, const LinguisticTermSet& terms,
                const DynamicsParams& params, RandomSource& rng);

/// Full co-evolution run until delta_max < epsilon or t_max steps.
/// Throws ConfigError before doing any work if the config is invalid.
TrajectoryRecord run(const SimulationConfig& config);

}  // namespace ltwd
