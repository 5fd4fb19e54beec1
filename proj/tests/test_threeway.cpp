#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "ltwd/threeway.hpp"
#include "oracles.hpp"

using namespace ltwd;

namespace {

const ThreeWayThresholds kDefaultThresholds{0.3, 0.6, 10.0};
const LossMatrix kLoss{0.0, 2.0, 6.0, 6.0, 2.0, 0.0};

}  // namespace

TEST_CASE("acceptance probability") {
    CHECK(acceptance_probability(0.3, kDefaultThresholds) == 1.0);
    CHECK(acceptance_probability(0.4, kDefaultThresholds) ==
          doctest::Approx(static_cast<double>(oracle::taylor_exp(-1.0L))).epsilon(1e-14));
    CHECK(acceptance_probability(0.4, kDefaultThresholds) == doctest::Approx(0.367879).epsilon(1e-6));
    CHECK(acceptance_probability(0.6, kDefaultThresholds) == 0.0);
    CHECK_THROWS_AS(acceptance_probability(-0.1, kDefaultThresholds), std::invalid_argument);
}

TEST_CASE("acceptance probability shape") {
    RandomSource gen(5);
    for (int trial = 0; trial < 200; ++trial) {
        double a = gen.uniform(), b = gen.uniform();
        if (a > b) std::swap(a, b);
        const ThreeWayThresholds th{a, b, 30.0 * gen.uniform()};
        double prev = 1.0;
        for (int k = 0; k <= 400; ++k) {
            const double d = k / 400.0;
            const double p = acceptance_probability(d, th);
            CHECK(p <= prev);
            CHECK(p >= 0.0);
            if (d <= a) CHECK(p == 1.0);
            if (d >= b && d > a) CHECK(p == 0.0);
            prev = p;
        }
        if (a < b) {
            // continuity at alpha from the right
            CHECK(acceptance_probability(a + 1e-12, th) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("alpha == beta accepts at the shared boundary") {
    const ThreeWayThresholds th{0.6, 0.6, 10.0};
    CHECK(acceptance_probability(0.6, th) == 1.0);
    RandomSource rng(1);
    CHECK(classify_neighbor(0.6, th, rng));
    CHECK(rng.draws() == 0);
}

TEST_CASE("classify neighbor") {
    RandomSource rng(17);
    CHECK(classify_neighbor(0.1, kDefaultThresholds, rng));
    CHECK_FALSE(classify_neighbor(0.9, kDefaultThresholds, rng));
    CHECK(rng.draws() == 0);
    classify_neighbor(0.45, kDefaultThresholds, rng);
    CHECK(rng.draws() == 1);
    CHECK_THROWS_AS(classify_neighbor(-1.0, kDefaultThresholds, rng), std::invalid_argument);

    SUBCASE("lambda = 0 always accepts in the hesitation zone") {
        const ThreeWayThresholds flat{0.3, 0.6, 0.0};
        for (int k = 0; k < 1000; ++k) CHECK(classify_neighbor(0.5, flat, rng));
    }
}

TEST_CASE("empirical hesitation-zone acceptance rate") {
    RandomSource rng(20240601);
    int accepted = 0;
    const int trials = 100000;
    for (int k = 0; k < trials; ++k) accepted += classify_neighbor(0.4, kDefaultThresholds, rng) ? 1 : 0;
    CHECK(std::abs(static_cast<double>(accepted) / trials - 0.3679) < 0.01);
}

TEST_CASE("expected losses") {
    auto r = expected_losses(kLoss, 0.8);
    CHECK(r.accept == doctest::Approx(1.2));
    CHECK(r.defer == doctest::Approx(2.0));
    CHECK(r.reject == doctest::Approx(4.8));
    r = expected_losses(kLoss, 1.0);
    CHECK((r.accept == 0.0 && r.defer == 2.0 && r.reject == 6.0));
    r = expected_losses(kLoss, 0.0);
    CHECK((r.accept == 6.0 && r.defer == 2.0 && r.reject == 0.0));
    CHECK_THROWS_AS(expected_losses(kLoss, 1.5), std::out_of_range);
    CHECK_THROWS_AS(expected_losses(LossMatrix{-1, 0, 0, 0, 0, 0}, 0.5), std::invalid_argument);
}

TEST_CASE("bayes region") {
    CHECK(bayes_region(kLoss, 0.8) == ThreeWayRegion::Positive);
    CHECK(bayes_region(kLoss, 0.5) == ThreeWayRegion::Boundary);
    CHECK(bayes_region(kLoss, 0.0) == ThreeWayRegion::Negative);
    CHECK_THROWS_AS(bayes_region(kLoss, -0.1), std::out_of_range);
    // accept and defer tie at pr = 2/3: positive wins
    const LossMatrix tie{0, 0, 0, 0, 0, 0};
    CHECK(bayes_region(tie, 0.3) == ThreeWayRegion::Positive);
    CHECK(to_string(ThreeWayRegion::Boundary) == "BOUNDARY");
}

TEST_CASE("bayes region matches brute-force argmin; expected losses are affine") {
    RandomSource gen(99);
    for (int trial = 0; trial < 1000; ++trial) {
        LossMatrix m{10 * gen.uniform(), 10 * gen.uniform(), 10 * gen.uniform(),
                     10 * gen.uniform(), 10 * gen.uniform(), 10 * gen.uniform()};
        const double pr = gen.uniform();
        const std::array<double, 3> r{m.accept_p * pr + m.accept_n * (1 - pr), m.defer_p * pr + m.defer_n * (1 - pr),
                                      m.reject_p * pr + m.reject_n * (1 - pr)};
        const auto best = std::min_element(r.begin(), r.end()) - r.begin();  // first minimum = precedence order
        const std::array<ThreeWayRegion, 3> regions{ThreeWayRegion::Positive, ThreeWayRegion::Boundary,
                                                   ThreeWayRegion::Negative};
        CHECK(bayes_region(m, pr) == regions[best]);

        const auto at = expected_losses(m, pr);
        const auto one = expected_losses(m, 1.0);
        const auto zero = expected_losses(m, 0.0);
        CHECK(at.accept == doctest::Approx(pr * one.accept + (1 - pr) * zero.accept).epsilon(1e-12));
        CHECK(at.defer == doctest::Approx(pr * one.defer + (1 - pr) * zero.defer).epsilon(1e-12));
        CHECK(at.reject == doctest::Approx(pr * one.reject + (1 - pr) * zero.reject).epsilon(1e-12));
    }
}

TEST_CASE("threshold validation") {
    CHECK_NOTHROW(kDefaultThresholds.validate());
    CHECK_NOTHROW((ThreeWayThresholds{0.6, 0.6, 10}).validate());
    CHECK_THROWS_AS((ThreeWayThresholds{0.7, 0.6, 10}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((ThreeWayThresholds{0.3, 0.6, -1}).validate(), std::invalid_argument);
}
