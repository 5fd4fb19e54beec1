#pragma once

#include <cstddef>
#include <span>

namespace ltwd {

inline constexpr double kDefaultMaxDeviation = 0.5;

// Population variance (divides by n).
double variance(std::span<const double> opinions);
double opinion_range(std::span<const double> opinions);

// 1 - mean absolute deviation / d_max.
double consensus_index(std::span<const double> opinions, double d_max = kDefaultMaxDeviation);

// Gaps strictly larger than `tolerance` between sorted neighbours split clusters.
std::size_t cluster_count(std::span<const double> opinions, double tolerance);

double delta_max(std::span<const double> previous, std::span<const double> next);

struct ConsensusReport {
    double variance = 0.0;
    double range = 0.0;
    double consensus_index = 1.0;
    std::size_t cluster_count = 1;
    double delta_max = 0.0;
};

ConsensusReport consensus_report(std::span<const double> opinions, std::span<const double> previous, double d_max,
                                 double cluster_tolerance);

}  // namespace ltwd
