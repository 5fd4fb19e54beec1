#pragma once

#include <cstdint>
#include <random>

namespace ltwd {

/// Seeded uniform source shared by every stochastic decision in a run.
///
/// A (seed, stream) pair fully determines the sequence, so independent
/// streams (dynamics, initial network, initial opinions) never interleave.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    // Uniform in [0, 1) from the top 53 bits.
    double uniform() {
        ++draws_;
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Bernoulli trial; p = 0 and p = 1 are decided without a draw.
    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform() < p;
    }

    // Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        ++draws_;
        std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
        return dist(engine_);
    }

    std::uint64_t draws() const { return draws_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t draws_ = 0;
};

namespace streams {
inline constexpr std::uint64_t kDynamics = 0;
inline constexpr std::uint64_t kInitialNetwork = 1;
inline constexpr std::uint64_t kInitialOpinions = 2;
}  // namespace streams

}  // namespace ltwd
