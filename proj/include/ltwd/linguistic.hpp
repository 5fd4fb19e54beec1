#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ltwd {

/// Ordered linguistic terms h_0..h_{2phi} with their numeric values under
/// the exponential scale function of base `base`.
///
/// Values are symmetric about 0.5, strictly increasing, and pinned to 0 and 1
/// at the ends. They are computed once at construction.
class LinguisticTermSet {
public:
    LinguisticTermSet(int phi, double base);

    int phi() const { return phi_; }
    double base() const { return base_; }
    int max_index() const { return 2 * phi_; }
    std::size_t size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }

    double value(int index) const;
    int nearest(double value) const;
    int negate(int index) const;
    int max(int i, int j) const;
    int min(int i, int j) const;

    // Smallest distance between adjacent term values.
    double min_gap() const;

private:
    void check_index(int index) const;

    int phi_;
    double base_;
    std::vector<double> values_;
};

LinguisticTermSet build_term_set(int phi, double base);

}  // namespace ltwd
