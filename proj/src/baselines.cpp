#include "ltwd/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "ltwd/metrics.hpp"

namespace ltwd {

DeGrootWeights::DeGrootWeights(std::size_t n, std::vector<double> entries) : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n * n) throw std::invalid_argument("DeGroot weights: expected an N x N matrix");
}

double DeGrootWeights::max_row_error() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double sum = 0.0;
        for (double w : row(i)) sum += w;
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
}

bool DeGrootWeights::entries_in_unit() const {
    return std::all_of(entries_.begin(), entries_.end(), [](double w) { return w >= 0.0 && w <= 1.0; });
}

DeGrootWeights degroot_weights(std::span<const double> opinions, WeightMode mode) {
    const auto n = opinions.size();
    if (n == 0) throw std::invalid_argument("DeGroot weights need at least one agent");
    std::vector<double> w(n * n);
    if (mode == WeightMode::Uniform) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(n));
        return {n, std::move(w)};
    }
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            w[i * n + k] = std::exp(-std::abs(opinions[i] - opinions[k]));
            sum += w[i * n + k];
        }
        for (std::size_t k = 0; k < n; ++k) w[i * n + k] /= sum;
    }
    return {n, std::move(w)};
}

std::vector<double> degroot_step(std::span<const double> opinions, const DeGrootWeights& weights) {
    const auto n = opinions.size();
    if (weights.size() != n) throw std::invalid_argument("degroot_step: weight matrix size differs from opinion count");
    if (!weights.entries_in_unit() || weights.max_row_error() > kRowStochasticTolerance) {
        throw std::invalid_argument("degroot_step: weights are not row-stochastic");
    }
    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        const auto row = weights.row(i);
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * opinions[j];
        next[i] = std::clamp(acc, 0.0, 1.0);  // row sums may sit an ulp above 1
    }
    return next;
}

std::vector<std::size_t> hk_confidence_set(std::size_t agent, std::span<const double> opinions, double bound) {
    if (agent >= opinions.size()) throw std::out_of_range("hk_confidence_set: agent out of range");
    if (!(bound >= 0.0)) throw std::invalid_argument("hk_confidence_set: bound must be >= 0");
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < opinions.size(); ++j) {
        if (std::abs(opinions[agent] - opinions[j]) <= bound) members.push_back(j);
    }
    return members;
}

std::vector<double> hk_step(std::span<const double> opinions, std::span<const double> bounds) {
    if (bounds.size() != opinions.size()) throw std::invalid_argument("hk_step: one bound per agent required");
    std::vector<double> next(opinions.size());
    for (std::size_t i = 0; i < opinions.size(); ++i) {
        const auto members = hk_confidence_set(i, opinions, bounds[i]);
        double sum = 0.0;
        for (auto j : members) sum += opinions[j];
        next[i] = sum / static_cast<double>(members.size());
    }
    return next;
}

namespace {

using Updater = std::function<std::vector<double>(std::span<const double>)>;

// Shared driver: iterate `update` on the complete graph, optionally
// re-quantizing to term values, until delta_max < epsilon or t_max.
TrajectoryRecord run_baseline(const SimulationConfig& config, const Updater& update) {
    const auto terms = config.term_set();
    const MetricSettings settings{config.d_max, config.resolved_cluster_tolerance()};
    const bool quantize = config.resolved_opinion_state() == OpinionState::Linguistic;
    const auto graph = SocialNetwork::complete(config.n_agents);

    auto initial_terms = resolve_initial_terms(config);
    std::vector<double> values(initial_terms.size());
    std::transform(initial_terms.begin(), initial_terms.end(), values.begin(),
                   [&](int t) { return terms.value(t); });

    TrajectoryRecord record;
    record.iterations.push_back(make_iteration(0, values, std::move(initial_terms), graph, {}, settings));
    for (int t = 0; t < config.t_max; ++t) {
        auto previous = record.iterations.back().values;
        auto next = update(previous);
        std::vector<int> next_terms(next.size());
        for (std::size_t i = 0; i < next.size(); ++i) {
            next_terms[i] = terms.nearest(next[i]);
            if (quantize) next[i] = terms.value(next_terms[i]);
        }
        const double change = delta_max(previous, next);
        record.iterations.push_back(
            make_iteration(record.iterations.size(), std::move(next), std::move(next_terms), graph, previous, settings));
        ++record.steps;
        if (change < config.epsilon) {
            record.converged = true;
            break;
        }
    }
    return record;
}

}  // namespace

TrajectoryRecord degroot_run(const SimulationConfig& config) {
    config.validate();
    if (config.model != Model::DeGrootUniform && config.model != Model::DeGrootDistance) {
        throw ConfigError("model", "degroot_run needs a degroot model, got " + std::string(to_string(config.model)));
    }
    const auto mode = config.model == Model::DeGrootUniform ? WeightMode::Uniform : WeightMode::Distance;
    if (config.degroot_freeze_weights) {
        const auto terms = config.term_set();
        std::vector<double> initial;
        for (int t : resolve_initial_terms(config)) initial.push_back(terms.value(t));
        const auto frozen = degroot_weights(initial, mode);
        return run_baseline(config, [frozen](std::span<const double> x) { return degroot_step(x, frozen); });
    }
    return run_baseline(config,
                        [mode](std::span<const double> x) { return degroot_step(x, degroot_weights(x, mode)); });
}

TrajectoryRecord hk_run(const SimulationConfig& config) {
    config.validate();
    std::vector<double> bounds;
    if (config.model == Model::HkHomogeneous) {
        bounds.assign(config.n_agents, *config.hk_epsilon);
    } else if (config.model == Model::HkHeterogeneous) {
        bounds = config.hk_bounds;
    } else {
        throw ConfigError("model", "hk_run needs an hk model, got " + std::string(to_string(config.model)));
    }
    return run_baseline(config, [bounds](std::span<const double> x) { return hk_step(x, bounds); });
}

}  // namespace ltwd
