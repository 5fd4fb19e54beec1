#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fixtures.hpp"
#include "ltwd/baselines.hpp"
#include "ltwd/commands.hpp"
#include "ltwd/dynamics.hpp"
#include "ltwd/linguistic.hpp"
#include "ltwd/metrics.hpp"
#include "ltwd/network.hpp"
#include "ltwd/output.hpp"
#include "ltwd/random.hpp"
#include "ltwd/simulate.hpp"
#include "ltwd/threeway.hpp"

using namespace ltwd;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome lsf_exactness() {
    const auto set = build_term_set(3, 2.0);
    const std::array<double, 7> expected{0.0, 4.0 / 14, 6.0 / 14, 7.0 / 14, 8.0 / 14, 10.0 / 14, 1.0};
    double worst = 0.0;
    for (int j = 0; j < 7; ++j) worst = std::max(worst, std::abs(set.value(j) - expected[j]));
    double worst_sym = 0.0;
    for (int phi = 1; phi <= 6; ++phi) {
        for (double a : {1.5, 2.0, 3.0}) {
            const auto s = build_term_set(phi, a);
            for (int j = 0; j <= 2 * phi; ++j) {
                worst_sym = std::max(worst_sym, std::abs(s.value(j) + s.value(2 * phi - j) - 1.0));
            }
        }
    }
    return {worst <= 1e-12 && worst_sym <= 1e-12,
            fmt("max |theta - expected| = %.3g, max symmetry error = %.3g", worst, worst_sym)};
}

Outcome degroot_one_step() {
    const auto x0 = testing::example_values();
    const auto w0 = degroot_weights(x0, WeightMode::Uniform);
    const auto x1 = degroot_step(x0, w0);
    const auto x2 = degroot_step(x1, degroot_weights(x1, WeightMode::Uniform));
    const double mean = 113.0 / 280.0;
    double worst = 0.0;
    for (double v : x1) worst = std::max(worst, std::abs(v - mean));
    return {worst <= 1e-9 && x2 == x1,
            fmt("step 1 max |x - %.6f| = %.3g, step 2 identical = %s", mean, worst, x2 == x1 ? "yes" : "no")};
}

Outcome metric_cross_check() {
    std::vector<double> x(5, 0.0);
    x.resize(20, 0.5);
    const double var = variance(x);
    const double range = opinion_range(x);
    const double c = consensus_index(x, 0.5);
    const bool ok = std::abs(var - 0.046875) <= 1e-12 && std::abs(range - 0.5) <= 1e-12 &&
                    std::abs(c - 0.625) <= 1e-12;
    return {ok, fmt("variance = %.12g, range = %.12g, C_AAD = %.12g", var, range, c)};
}

SimulationConfig hk_config(Model model) {
    SimulationConfig cfg;
    cfg.model = model;
    cfg.n_agents = 20;
    cfg.initial_opinions = testing::kExampleTerms;
    cfg.initial_network = RandomNetworkSpec{0.1, std::nullopt};
    return cfg;
}

TrajectoryRecord hk_homogeneous(double eps) {
    auto cfg = hk_config(Model::HkHomogeneous);
    cfg.hk_epsilon = eps;
    return simulate(cfg);
}

TrajectoryRecord hk_heterogeneous(int which) {
    auto cfg = hk_config(Model::HkHeterogeneous);
    cfg.hk_bounds = testing::hetero_case(which);
    return simulate(cfg);
}

Outcome hk_homogeneous_check() {
    const auto a = hk_homogeneous(0.35);
    const auto b = hk_homogeneous(0.30);
    const auto c = hk_homogeneous(0.10);
    const bool same = a.final().values == b.final().values;
    const auto clusters = c.final().metrics.cluster_count;
    return {same && clusters >= 3,
            fmt("eps 0.35 vs 0.30 final identical = %s, eps 0.10 clusters = %zu", same ? "yes" : "no", clusters)};
}

Outcome hk_heterogeneous_check() {
    const auto c1 = hk_heterogeneous(1);
    const auto c2 = hk_heterogeneous(2);
    const auto c3 = hk_heterogeneous(3);
    const auto clusters = c1.final().metrics.cluster_count;
    const bool d2 = c2.final().values != c1.final().values;
    const bool d3 = c3.final().values != c1.final().values;
    return {clusters == 2 && d2 && d3, fmt("case 1 clusters = %zu, case 2 differs = %s, case 3 differs = %s",
                                           clusters, d2 ? "yes" : "no", d3 ? "yes" : "no")};
}

Outcome stochastic_reproduction() {
    constexpr int kSeeds = 200;
    int converged = 0;
    int grew = 0;
    std::vector<std::size_t> clusters;
    for (int s = 1; s <= kSeeds; ++s) {
        const auto rec = simulate(testing::example_config(static_cast<std::uint64_t>(s)));
        if (rec.converged) {
            ++converged;
            clusters.push_back(rec.final().metrics.cluster_count);
        }
        if (rec.final().metrics.avg_degree > rec.initial().metrics.avg_degree) ++grew;
    }
    std::size_t median = 0;
    if (!clusters.empty()) {
        std::sort(clusters.begin(), clusters.end());
        median = clusters[(clusters.size() - 1) / 2];
    }
    const double conv_rate = static_cast<double>(converged) / kSeeds;
    const double grow_rate = static_cast<double>(grew) / kSeeds;
    return {conv_rate >= 0.7 && median >= 1 && median <= 3 && grow_rate >= 0.7,
            fmt("converged %.1f%%, median clusters %zu, degree grew %.1f%%", 100 * conv_rate, median,
                100 * grow_rate)};
}

Outcome mechanism_effect() {
    constexpr int kSeeds = 50;
    auto mean_steps = [](double alpha, double beta) {
        double total = 0.0;
        for (int s = 1; s <= kSeeds; ++s) {
            const auto seed = static_cast<std::uint64_t>(s);
            SimulationConfig cfg;
            cfg.n_agents = 40;
            cfg.t_max = 50;
            cfg.seed = seed;
            cfg.thresholds = {alpha, beta, 10.0};
            cfg.initial_opinions = RandomOpinionsSpec{seed};
            cfg.initial_network = RandomNetworkSpec{0.1, seed};
            total += static_cast<double>(simulate(cfg).steps);
        }
        return total / kSeeds;
    };
    const double with = mean_steps(0.3, 0.6);
    const double without = mean_steps(0.6, 0.6);
    return {with >= without, fmt("mean iterations (0.3, 0.6) = %.2f, (0.6, 0.6) = %.2f", with, without)};
}

std::map<std::string, std::string> data_files(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
        if (!e.is_regular_file() || e.path().filename() == kManifestFile) continue;
        std::ifstream in(e.path(), std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        out[fs::relative(e.path(), dir).generic_string()] = s.str();
    }
    return out;
}

Outcome deterministic_regime() {
    const auto root = fs::temp_directory_path() / ("ltwd_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    auto make = [](std::uint64_t seed) {
        auto cfg = testing::example_config(seed);
        cfg.rewiring.p_add = 0.0;
        cfg.rewiring.p_cut = 0.0;
        cfg.thresholds = {0.45, 0.45, 10.0};
        cfg.initial_network = RandomNetworkSpec{0.2, 11};
        return cfg;
    };
    const std::vector<std::uint64_t> seeds{1, 1, 2, 424242, 18446744073709551615ULL};
    std::vector<std::map<std::string, std::string>> runs;
    for (std::size_t k = 0; k < seeds.size(); ++k) {
        const auto dir = root / std::to_string(k);
        run_command(make(seeds[k]), dir);
        runs.push_back(data_files(dir));
    }
    fs::remove_all(root);
    bool identical = true;
    for (const auto& r : runs) identical = identical && r == runs.front();
    return {identical && runs.front().size() > 4,
            fmt("%zu runs over %zu distinct seeds, %zu files each, identical = %s", runs.size(), seeds.size() - 1,
                runs.front().size(), identical ? "yes" : "no")};
}

Outcome invariant_suite() {
    RandomSource gen(2024);
    std::size_t violations = 0;
    std::size_t checks = 0;
    auto expect = [&](bool ok) {
        ++checks;
        if (!ok) ++violations;
    };
    const auto terms = build_term_set(3, 2.0);

    // Opinion range and adjacency invariants along random trajectories.
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + gen.below(30);
        auto net = random_network(n, gen.uniform(), gen);
        std::vector<double> x(n);
        for (auto& v : x) v = terms.value(static_cast<int>(gen.below(7)));
        DynamicsParams params;
        params.thresholds.alpha = gen.uniform() * 0.5;
        params.thresholds.beta = params.thresholds.alpha + gen.uniform() * 0.5;
        params.inertia = trial % 2 == 0 ? 0.0 : gen.uniform();
        params.state = trial % 3 == 0 ? OpinionState::Numeric : OpinionState::Linguistic;
        for (int t = 0; t < 10; ++t) {
            const auto r = step(x, net, terms, params, gen);
            for (double v : r.values) expect(v >= 0.0 && v <= 1.0);
            for (std::size_t i = 0; i < n; ++i) {
                expect(!r.network.connected(i, i));
                for (std::size_t j = 0; j < n; ++j) expect(r.network.connected(i, j) == r.network.connected(j, i));
            }
            x = r.values;
            net = r.network;
        }
    }

    // Row-stochastic DeGroot weights.
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> x(1 + gen.below(40));
        for (auto& v : x) v = gen.uniform();
        for (auto mode : {WeightMode::Uniform, WeightMode::Distance}) {
            const auto w = degroot_weights(x, mode);
            expect(w.max_row_error() <= kRowStochasticTolerance && w.entries_in_unit());
        }
    }

    // Nearest-term round trip.
    for (int phi = 1; phi <= 10; ++phi) {
        for (double a : {1.1, 1.5, 2.0, 3.0, 10.0}) {
            const auto s = build_term_set(phi, a);
            for (int j = 0; j <= 2 * phi; ++j) expect(s.nearest(s.value(j)) == j);
        }
    }

    // Acceptance probability: monotone, 1 up to alpha, continuous there, 0 from beta.
    for (int trial = 0; trial < 200; ++trial) {
        ThreeWayThresholds th;
        th.alpha = gen.uniform() * 0.8;
        th.beta = th.alpha + 1e-3 + gen.uniform() * (1.0 - th.alpha - 1e-3);
        th.lambda = gen.uniform() * 50.0;
        double prev = 1.0;
        for (int k = 0; k <= 1000; ++k) {
            const double d = k / 1000.0;
            const double p = acceptance_probability(d, th);
            expect(p <= prev && p >= 0.0 && p <= 1.0);
            if (d <= th.alpha) expect(p == 1.0);
            if (d >= th.beta) expect(p == 0.0);
            prev = p;
        }
        expect(std::abs(acceptance_probability(th.alpha + 1e-12, th) - 1.0) < 1e-9);
    }

    // bayes_region against exhaustive minimisation.
    for (int trial = 0; trial < 1000; ++trial) {
        LossMatrix m;
        for (double* f : {&m.accept_p, &m.defer_p, &m.reject_p, &m.accept_n, &m.defer_n, &m.reject_n}) {
            *f = trial % 4 == 0 ? static_cast<double>(gen.below(4)) : gen.uniform() * 10.0;
        }
        const double pr = trial % 5 == 0 ? static_cast<double>(gen.below(5)) / 4.0 : gen.uniform();
        const std::array<double, 3> risk{m.accept_p * pr + m.accept_n * (1.0 - pr),
                                         m.defer_p * pr + m.defer_n * (1.0 - pr),
                                         m.reject_p * pr + m.reject_n * (1.0 - pr)};
        const auto best = static_cast<std::size_t>(std::min_element(risk.begin(), risk.end()) - risk.begin());
        const std::array<ThreeWayRegion, 3> regions{ThreeWayRegion::Positive, ThreeWayRegion::Boundary,
                                                    ThreeWayRegion::Negative};
        expect(bayes_region(m, pr) == regions[best]);
    }

    return {violations == 0, fmt("%zu checks, %zu violations", checks, violations)};
}

Outcome complexity_contract() {
    std::string detail;
    bool ok = true;
    const auto terms = build_term_set(3, 2.0);
    for (std::size_t n : {10, 20, 40, 80}) {
        RandomSource gen(n);
        auto net = random_network(n, 0.1, gen);
        std::vector<double> x(n);
        for (auto& v : x) v = terms.value(static_cast<int>(gen.below(7)));
        DynamicsParams params;
        std::uint64_t worst_filter = 0;
        std::uint64_t worst_rewire = 0;
        std::uint64_t worst_total = 0;
        for (int t = 0; t < 10; ++t) {
            const auto r = step(x, net, terms, params, gen);
            worst_filter = std::max(worst_filter, r.counters.filter_pair_visits);
            worst_rewire = std::max(worst_rewire, r.counters.rewire_pair_visits);
            worst_total = std::max(worst_total, r.counters.total());
            x = r.values;
            net = r.network;
        }
        const auto n2 = static_cast<std::uint64_t>(n * n);
        ok = ok && worst_filter <= n2 && worst_rewire <= n2 && worst_total <= 2 * n2;
        if (!detail.empty()) detail += "; ";
        detail += fmt("N=%zu filter %llu rewire %llu (N^2 = %llu)", n, static_cast<unsigned long long>(worst_filter),
                      static_cast<unsigned long long>(worst_rewire), static_cast<unsigned long long>(n2));
    }
    return {ok, detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"scale function exactness", lsf_exactness},
        {"DeGroot uniform one-step convergence", degroot_one_step},
        {"consensus metric cross-check", metric_cross_check},
        {"HK homogeneous reproduction", hk_homogeneous_check},
        {"HK heterogeneous cases", hk_heterogeneous_check},
        {"stochastic 20-agent reproduction", stochastic_reproduction},
        {"three-way mechanism slows convergence", mechanism_effect},
        {"deterministic regime bit-reproducibility", deterministic_regime},
        {"invariant suite", invariant_suite},
        {"complexity contract", complexity_contract},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto& [name, check] = criteria[k];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::printf("criterion %2zu %s: %s (%s) [%.0f ms]\n", k + 1, o.pass ? "PASS" : "FAIL", name.c_str(),
                    o.detail.c_str(), ms);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
