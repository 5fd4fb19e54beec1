#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ltwd/network.hpp"

namespace ltwd {

struct IterationMetrics {
    double variance = 0.0;
    double range = 0.0;
    double c_aad = 1.0;
    double avg_degree = 0.0;
    std::size_t isolated = 0;
    double delta_max = 0.0;
    std::size_t cluster_count = 1;

    bool operator==(const IterationMetrics&) const = default;
};

// State after `iteration` steps; iteration 0 is the initial configuration.
struct IterationRecord {
    std::size_t iteration = 0;
    std::vector<double> values;
    std::vector<int> terms;
    SocialNetwork network;
    IterationMetrics metrics;

    bool operator==(const IterationRecord&) const = default;
};

struct TrajectoryRecord {
    std::vector<IterationRecord> iterations;
    bool converged = false;
    std::size_t steps = 0;

    const IterationRecord& initial() const { return iterations.front(); }
    const IterationRecord& final() const { return iterations.back(); }

    bool operator==(const TrajectoryRecord&) const = default;
};

struct MetricSettings {
    double d_max = 0.5;
    double cluster_tolerance = 0.0;
};

// First iteration k such that every later transition moved less than
// epsilon. A model that jumps to its fixed point in one step settles at 1
// even though the stopping test only fires on step 2.
std::size_t settled_iteration(const TrajectoryRecord& record, double epsilon);

// `previous` is empty for iteration 0, which records delta_max = 0.
IterationRecord make_iteration(std::size_t iteration, std::vector<double> values, std::vector<int> terms,
                               SocialNetwork network, std::span<const double> previous,
                               const MetricSettings& settings);

}  // namespace ltwd
