#include "ltwd/trajectory.hpp"

#include "ltwd/metrics.hpp"

namespace ltwd {

IterationRecord make_iteration(std::size_t iteration, std::vector<double> values, std::vector<int> terms,
                               SocialNetwork network, std::span<const double> previous,
                               const MetricSettings& settings) {
    IterationRecord rec;
    rec.iteration = iteration;
    const auto net_stats = stats(network);
    rec.metrics.variance = variance(values);
    rec.metrics.range = opinion_range(values);
    rec.metrics.c_aad = consensus_index(values, settings.d_max);
    rec.metrics.cluster_count = cluster_count(values, settings.cluster_tolerance);
    rec.metrics.avg_degree = net_stats.average_degree;
    rec.metrics.isolated = net_stats.isolated_count;
    rec.metrics.delta_max = previous.empty() ? 0.0 : delta_max(previous, values);
    rec.values = std::move(values);
    rec.terms = std::move(terms);
    rec.network = std::move(network);
    return rec;
}

std::size_t settled_iteration(const TrajectoryRecord& record, double epsilon) {
    std::size_t settled = 0;
    for (std::size_t k = 1; k < record.iterations.size(); ++k) {
        if (record.iterations[k].metrics.delta_max >= epsilon) settled = k;
    }
    return settled;
}

}  // namespace ltwd
