#include "ltwd/threeway.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ltwd {

namespace {

void check_distance(double distance) {
    if (!(distance >= 0.0)) {
        throw std::invalid_argument("opinion distance must be >= 0, got " + std::to_string(distance));
    }
}

void check_probability(double pr_c) {
    if (!(pr_c >= 0.0 && pr_c <= 1.0)) {
        throw std::out_of_range("conditional probability " + std::to_string(pr_c) + " outside [0, 1]");
    }
}

}  // namespace

void ThreeWayThresholds::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0, 1]");
    if (!(alpha <= beta)) throw std::invalid_argument("alpha <= beta violated");
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be finite and >= 0");
}

double acceptance_probability(double distance, const ThreeWayThresholds& thresholds) {
    check_distance(distance);
    if (distance <= thresholds.alpha) return 1.0;
    if (distance >= thresholds.beta) return 0.0;
    return std::exp(-thresholds.lambda * (distance - thresholds.alpha));
}

bool classify_neighbor(double distance, const ThreeWayThresholds& thresholds, RandomSource& rng) {
    check_distance(distance);
    if (distance <= thresholds.alpha) return true;
    if (distance >= thresholds.beta) return false;
    return rng.uniform() < std::exp(-thresholds.lambda * (distance - thresholds.alpha));
}

void LossMatrix::validate() const {
    for (double v : {accept_p, defer_p, reject_p, accept_n, defer_n, reject_n}) {
        if (!(v >= 0.0)) throw std::invalid_argument("loss entries must be non-negative");
    }
}

std::string_view to_string(ThreeWayRegion region) {
    switch (region) {
        case ThreeWayRegion::Positive: return "POSITIVE";
        case ThreeWayRegion::Boundary: return "BOUNDARY";
        case ThreeWayRegion::Negative: return "NEGATIVE";
    }
    return "UNKNOWN";
}

ExpectedLosses expected_losses(const LossMatrix& loss, double pr_c) {
    check_probability(pr_c);
    loss.validate();
    const double pr_not = 1.0 - pr_c;
    return {loss.accept_p * pr_c + loss.accept_n * pr_not, loss.defer_p * pr_c + loss.defer_n * pr_not,
            loss.reject_p * pr_c + loss.reject_n * pr_not};
}

ThreeWayRegion bayes_region(const LossMatrix& loss, double pr_c) {
    const auto r = expected_losses(loss, pr_c);
    if (r.accept <= r.defer && r.accept <= r.reject) return ThreeWayRegion::Positive;
    if (r.defer <= r.reject) return ThreeWayRegion::Boundary;
    return ThreeWayRegion::Negative;
}

}  // namespace ltwd
