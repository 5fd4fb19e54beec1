#pragma once

#include <vector>

#include "ltwd/config.hpp"
#include "ltwd/linguistic.hpp"

namespace ltwd::testing {

// Initial term indices of the 20-agent example (x_1(0)..x_20(0)).
inline const std::vector<int> kExampleTerms{0, 3, 6, 0, 0, 0, 5, 3, 3, 3, 5, 1, 0, 5, 3, 0, 4, 3, 4, 3};

// Heterogeneous confidence bounds, case 1; case 2 sets agent 10 to 0.2,
// case 3 sets agent 17 to 0.3 (1-based).
inline const std::vector<double> kHeteroCase1{0.2, 0.5, 0.3, 0.4, 0.2, 0.1, 0.9, 0.6, 0.5, 0.3,
                                              0.2, 0.1, 0.4, 0.4, 0.5, 0.3, 0.7, 0.4, 0.2, 0.2};

inline std::vector<double> hetero_case(int which) {
    auto bounds = kHeteroCase1;
    if (which == 2) bounds[9] = 0.2;
    if (which == 3) bounds[16] = 0.3;
    return bounds;
}

inline std::vector<double> example_values() {
    const LinguisticTermSet terms(3, 2.0);
    std::vector<double> v;
    for (int t : kExampleTerms) v.push_back(terms.value(t));
    return v;
}

// The worked-example parameters with a random sparse start network.
inline SimulationConfig example_config(std::uint64_t seed = 1) {
    SimulationConfig cfg;
    cfg.n_agents = 20;
    cfg.initial_opinions = kExampleTerms;
    cfg.initial_network = RandomNetworkSpec{0.1, std::nullopt};
    cfg.seed = seed;
    return cfg;
}

}  // namespace ltwd::testing
