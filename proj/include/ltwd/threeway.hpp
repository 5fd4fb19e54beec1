#pragma once

#include <string_view>

#include "ltwd/random.hpp"

namespace ltwd {

/// Distance thresholds of the accept / hesitate / reject rule.
///
/// Distances d <= alpha are accepted outright, d >= beta rejected outright,
/// and anything in between is accepted with probability
/// exp(-lambda * (d - alpha)). alpha == beta is allowed and leaves no
/// hesitation zone.
struct ThreeWayThresholds {
    double alpha = 0.3;
    double beta = 0.6;
    double lambda = 10.0;

    void validate() const;
};

double acceptance_probability(double distance, const ThreeWayThresholds& thresholds);

// Consumes exactly one uniform draw, and only when alpha < distance < beta.
bool classify_neighbor(double distance, const ThreeWayThresholds& thresholds, RandomSource& rng);

/// Losses of accepting (A), deferring (D) and rejecting (R) under the good
/// state C (the *_p fields) and the bad state not-C (the *_n fields).
struct LossMatrix {
    double accept_p = 0.0;
    double defer_p = 0.0;
    double reject_p = 0.0;
    double accept_n = 0.0;
    double defer_n = 0.0;
    double reject_n = 0.0;

    void validate() const;
};

struct ExpectedLosses {
    double accept = 0.0;
    double defer = 0.0;
    double reject = 0.0;
};

enum class ThreeWayRegion { Positive, Boundary, Negative };

std::string_view to_string(ThreeWayRegion region);

ExpectedLosses expected_losses(const LossMatrix& loss, double pr_c);

// Minimum expected loss; ties resolve Positive, then Boundary, then Negative.
ThreeWayRegion bayes_region(const LossMatrix& loss, double pr_c);

}  // namespace ltwd
