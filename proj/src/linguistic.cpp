#include "ltwd/linguistic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ltwd {

LinguisticTermSet::LinguisticTermSet(int phi, double base) : phi_(phi), base_(base) {
    if (phi < 1) {
        throw std::invalid_argument("term set: phi must be >= 1, got " + std::to_string(phi));
    }
    if (!(base > 1.0) || !std::isfinite(base)) {
        throw std::invalid_argument("term set: base must be a finite value > 1, got " + std::to_string(base));
    }
    const double top = std::pow(base, phi);
    const double denom = 2.0 * top - 2.0;
    const auto n = static_cast<std::size_t>(2 * phi + 1);
    values_.resize(n);
    // Lower branch by the formula; the upper branch (a^t + a^{j-t} - 2) / (2a^t - 2)
    // equals 1 - theta_{2t-j} algebraically, and taking it that way keeps
    // f(neg(h)) = 1 - f(h) exact in floating point.
    for (int j = 0; j <= phi; ++j) {
        values_[j] = (top - std::pow(base, phi - j)) / denom;
    }
    for (int j = phi + 1; j <= 2 * phi; ++j) {
        values_[j] = 1.0 - values_[2 * phi - j];
    }
    values_[phi] = 0.5;
}

void LinguisticTermSet::check_index(int index) const {
    if (index < 0 || index > max_index()) {
        throw std::out_of_range("term index " + std::to_string(index) + " outside [0, " +
                                std::to_string(max_index()) + "]");
    }
}

double LinguisticTermSet::value(int index) const {
    check_index(index);
    return values_[index];
}

int LinguisticTermSet::nearest(double value) const {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::out_of_range("nearest term: value " + std::to_string(value) + " outside [0, 1]");
    }
    int best = 0;
    double best_dist = std::abs(values_[0] - value);
    for (int j = 1; j <= max_index(); ++j) {
        const double d = std::abs(values_[j] - value);
        if (d < best_dist) {  // strict: ties keep the smaller index
            best = j;
            best_dist = d;
        }
    }
    return best;
}

int LinguisticTermSet::negate(int index) const {
    check_index(index);
    return max_index() - index;
}

int LinguisticTermSet::max(int i, int j) const {
    check_index(i);
    check_index(j);
    return i >= j ? i : j;
}

int LinguisticTermSet::min(int i, int j) const {
    check_index(i);
    check_index(j);
    return i <= j ? i : j;
}

double LinguisticTermSet::min_gap() const {
    double gap = 1.0;
    for (std::size_t j = 1; j < values_.size(); ++j) {
        gap = std::min(gap, values_[j] - values_[j - 1]);
    }
    return gap;
}

LinguisticTermSet build_term_set(int phi, double base) { return LinguisticTermSet(phi, base); }

}  // namespace ltwd
