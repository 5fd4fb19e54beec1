#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "ltwd/random.hpp"

namespace ltwd {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected, loop-free friendship graph over `size()` agents.
///
/// Stored as a dense N x N byte matrix; `connect`/`disconnect` always write
/// both directions, so symmetry holds by construction.
class SocialNetwork {
public:
    SocialNetwork() = default;
    explicit SocialNetwork(std::size_t size);

    static SocialNetwork complete(std::size_t size);
    static SocialNetwork from_edges(std::size_t size, std::span<const Edge> edges);

    std::size_t size() const { return size_; }
    bool connected(std::size_t i, std::size_t j) const { return adjacency_[i * size_ + j] != 0; }
    void connect(std::size_t i, std::size_t j);
    void disconnect(std::size_t i, std::size_t j);

    std::size_t degree(std::size_t i) const;
    std::size_t edge_count() const;

    // Ascending (i < j) pair order.
    std::vector<Edge> edges() const;

    bool operator==(const SocialNetwork&) const = default;

private:
    void check_pair(std::size_t i, std::size_t j) const;

    std::size_t size_ = 0;
    std::vector<std::uint8_t> adjacency_;
};

struct RewiringParams {
    double delta_add = 0.15;
    double delta_cut = 0.45;
    double p_add = 0.5;
    double p_cut = 0.5;

    void validate() const;
};

struct NetworkStats {
    double average_degree = 0.0;
    std::size_t isolated_count = 0;
    double density = 0.0;  // 0 when size < 2
};

// Pair visits performed by the last rewire call; used by complexity checks.
struct RewireCounters {
    std::uint64_t pair_visits = 0;
};

double density(const SocialNetwork& net);
double centrality(const SocialNetwork& net, std::size_t vertex);
NetworkStats stats(const SocialNetwork& net);

SocialNetwork random_network(std::size_t n, double edge_prob, RandomSource& rng);

/// One pass of opinion-driven link addition and removal.
///
/// Every unordered pair i < j is visited once in lexicographic order. A
/// missing link with |d| < delta_add is added with probability p_add; an
/// existing link with |d| > delta_cut is removed with probability p_cut.
/// All decisions read the input graph, so the order of changes is irrelevant
/// apart from RNG consumption (one draw per eligible pair).
SocialNetwork rewire(const SocialNetwork& net, std::span<const double> opinions, const RewiringParams& params,
                     RandomSource& rng, RewireCounters* counters = nullptr);

// Edge-list text: one "i j" per line, 0-based, '#' comments and blank lines ignored.
void write_edge_list(std::ostream& out, const SocialNetwork& net);
SocialNetwork read_edge_list(std::istream& in, std::size_t size);

}  // namespace ltwd
