#include "ltwd/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ltwd/metrics.hpp"

namespace ltwd {

DynamicsParams DynamicsParams::from_config(const SimulationConfig& config) {
    return {config.thresholds, config.inertia, config.rewiring, config.resolved_opinion_state()};
}

std::vector<std::size_t> filter_neighbors(std::size_t agent, std::span<const double> opinions,
                                          const SocialNetwork& net, const ThreeWayThresholds& thresholds,
                                          RandomSource& rng, std::uint64_t* pair_visits) {
    const auto n = net.size();
    if (agent >= n) throw std::out_of_range("filter_neighbors: agent " + std::to_string(agent) + " out of range");
    if (opinions.size() != n) throw std::invalid_argument("filter_neighbors: opinion count differs from network size");

    std::vector<std::size_t> accepted;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == agent) continue;
        if (pair_visits != nullptr) ++*pair_visits;
        if (!net.connected(agent, j)) continue;
        if (classify_neighbor(std::abs(opinions[agent] - opinions[j]), thresholds, rng)) accepted.push_back(j);
    }
    return accepted;
}

double update_value(double current, std::span<const std::size_t> accepted, std::span<const double> opinions,
                    double inertia) {
    if (!(inertia >= 0.0 && inertia <= 1.0)) throw std::invalid_argument("inertia must lie in [0, 1]");
    if (accepted.empty()) return current;
    double sum = 0.0;
    for (auto j : accepted) sum += opinions[j];
    const double mean = sum / static_cast<double>(accepted.size());
    if (inertia == 0.0) return mean;
    return std::clamp(inertia * current + (1.0 - inertia) * mean, 0.0, 1.0);
}

StepResult step(std::span<const double> opinions, const SocialNetwork& net, const LinguisticTermSet& terms,
                const DynamicsParams& params, RandomSource& rng) {
    const auto n = net.size();
    if (opinions.size() != n) {
        throw std::invalid_argument("step: " + std::to_string(opinions.size()) + " opinions for " +
                                    std::to_string(n) + " agents");
    }

    StepResult out;
    out.values.resize(n);
    out.terms.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto accepted =
            filter_neighbors(i, opinions, net, params.thresholds, rng, &out.counters.filter_pair_visits);
        const double next = update_value(opinions[i], accepted, opinions, params.inertia);
        const int term = terms.nearest(next);
        out.terms[i] = term;
        out.values[i] = params.state == OpinionState::Linguistic ? terms.value(term) : next;
    }

    RewireCounters rewire_counters;
    out.network = rewire(net, opinions, params.rewiring, rng, &rewire_counters);
    out.counters.rewire_pair_visits = rewire_counters.pair_visits;
    out.delta_max = delta_max(opinions, out.values);
    return out;
}

TrajectoryRecord run(const SimulationConfig& config) {
    config.validate();
    const auto terms = config.term_set();
    const auto params = DynamicsParams::from_config(config);
    const MetricSettings settings{config.d_max, config.resolved_cluster_tolerance()};

    auto initial_terms = resolve_initial_terms(config);
    std::vector<double> values(initial_terms.size());
    std::transform(initial_terms.begin(), initial_terms.end(), values.begin(),
                   [&](int t) { return terms.value(t); });

    TrajectoryRecord record;
    record.iterations.push_back(
        make_iteration(0, values, std::move(initial_terms), resolve_initial_network(config), {}, settings));

    RandomSource rng(config.seed, streams::kDynamics);
    for (int t = 0; t < config.t_max; ++t) {
        const auto& current = record.iterations.back();
        auto result = step(current.values, current.network, terms, params, rng);
        const double change = result.delta_max;
        auto previous = current.values;
        record.iterations.push_back(make_iteration(record.iterations.size(), std::move(result.values),
                                                   std::move(result.terms), std::move(result.network), previous,
                                                   settings));
        ++record.steps;
        if (change < config.epsilon) {
            record.converged = true;
            break;
        }
    }
    return record;
}

}  // namespace ltwd
