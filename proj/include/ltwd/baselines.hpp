#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ltwd/config.hpp"
#include "ltwd/trajectory.hpp"

namespace ltwd {

/// Row-stochastic N x N influence matrix, row-major.
class DeGrootWeights {
public:
    DeGrootWeights() = default;
    DeGrootWeights(std::size_t n, std::vector<double> entries);

    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }

    // Largest |row sum - 1| and whether every entry is in [0, 1].
    double max_row_error() const;
    bool entries_in_unit() const;

private:
    std::size_t n_ = 0;
    std::vector<double> entries_;
};

enum class WeightMode { Uniform, Distance };

inline constexpr double kRowStochasticTolerance = 1e-12;

DeGrootWeights degroot_weights(std::span<const double> opinions, WeightMode mode);

// Rejects weights that are not row-stochastic within kRowStochasticTolerance.
std::vector<double> degroot_step(std::span<const double> opinions, const DeGrootWeights& weights);

// Every j with |x_agent - x_j| <= bound, the agent itself included.
std::vector<std::size_t> hk_confidence_set(std::size_t agent, std::span<const double> opinions, double bound);

// One bounded-confidence step with per-agent bounds.
std::vector<double> hk_step(std::span<const double> opinions, std::span<const double> bounds);

// Baselines interact over the complete graph; that graph is what the
// trajectory records as its network.
TrajectoryRecord degroot_run(const SimulationConfig& config);
TrajectoryRecord hk_run(const SimulationConfig& config);

}  // namespace ltwd
