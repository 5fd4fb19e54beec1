#include "ltwd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltwd {

namespace {

void require_nonempty(std::span<const double> opinions, const char* what) {
    if (opinions.empty()) throw std::invalid_argument(std::string(what) + " of an empty opinion sequence");
}

// A plain sum over n copies of v can round to a mean that differs from v;
// identical inputs must report zero dispersion exactly.
double mean(std::span<const double> opinions) {
    const auto [lo, hi] = std::minmax_element(opinions.begin(), opinions.end());
    if (*lo == *hi) return *lo;
    return std::accumulate(opinions.begin(), opinions.end(), 0.0) / static_cast<double>(opinions.size());
}

}  // namespace

double variance(std::span<const double> opinions) {
    require_nonempty(opinions, "variance");
    const double m = mean(opinions);
    double acc = 0.0;
    for (double x : opinions) acc += (x - m) * (x - m);
    return acc / static_cast<double>(opinions.size());
}

double opinion_range(std::span<const double> opinions) {
    require_nonempty(opinions, "range");
    const auto [lo, hi] = std::minmax_element(opinions.begin(), opinions.end());
    return *hi - *lo;
}

double consensus_index(std::span<const double> opinions, double d_max) {
    require_nonempty(opinions, "consensus index");
    if (!(d_max > 0.0)) throw std::invalid_argument("consensus index: d_max must be > 0");
    const double m = mean(opinions);
    double acc = 0.0;
    for (double x : opinions) acc += std::abs(x - m);
    return 1.0 - (acc / static_cast<double>(opinions.size())) / d_max;
}

std::size_t cluster_count(std::span<const double> opinions, double tolerance) {
    require_nonempty(opinions, "cluster count");
    if (!(tolerance >= 0.0)) throw std::invalid_argument("cluster tolerance must be >= 0");
    std::vector<double> sorted(opinions.begin(), opinions.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t clusters = 1;
    for (std::size_t k = 1; k < sorted.size(); ++k) {
        if (sorted[k] - sorted[k - 1] > tolerance) ++clusters;
    }
    return clusters;
}

double delta_max(std::span<const double> previous, std::span<const double> next) {
    if (previous.size() != next.size()) {
        throw std::invalid_argument("delta_max: length mismatch (" + std::to_string(previous.size()) + " vs " +
                                    std::to_string(next.size()) + ")");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < next.size(); ++i) worst = std::max(worst, std::abs(next[i] - previous[i]));
    return worst;
}

ConsensusReport consensus_report(std::span<const double> opinions, std::span<const double> previous, double d_max,
                                 double cluster_tolerance) {
    return {variance(opinions), opinion_range(opinions), consensus_index(opinions, d_max),
            cluster_count(opinions, cluster_tolerance), delta_max(previous, opinions)};
}

}  // namespace ltwd
