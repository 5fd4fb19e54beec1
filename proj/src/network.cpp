#include "ltwd/network.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ltwd {

namespace {

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
    }
}

}  // namespace

SocialNetwork::SocialNetwork(std::size_t size) : size_(size), adjacency_(size * size, 0) {}

SocialNetwork SocialNetwork::complete(std::size_t size) {
    SocialNetwork net(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
            net.connect(i, j);
        }
    }
    return net;
}

SocialNetwork SocialNetwork::from_edges(std::size_t size, std::span<const Edge> edges) {
    SocialNetwork net(size);
    for (const auto& [i, j] : edges) {
        net.connect(i, j);
    }
    return net;
}

void SocialNetwork::check_pair(std::size_t i, std::size_t j) const {
    if (i >= size_ || j >= size_) {
        throw std::out_of_range("edge (" + std::to_string(i) + ", " + std::to_string(j) + ") outside network of size " +
                                std::to_string(size_));
    }
    if (i == j) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(i));
    }
}

void SocialNetwork::connect(std::size_t i, std::size_t j) {
    check_pair(i, j);
    adjacency_[i * size_ + j] = 1;
    adjacency_[j * size_ + i] = 1;
}

void SocialNetwork::disconnect(std::size_t i, std::size_t j) {
    check_pair(i, j);
    adjacency_[i * size_ + j] = 0;
    adjacency_[j * size_ + i] = 0;
}

std::size_t SocialNetwork::degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < size_; ++j) {
        d += adjacency_[i * size_ + j];
    }
    return d;
}

std::size_t SocialNetwork::edge_count() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = i + 1; j < size_; ++j) {
            count += adjacency_[i * size_ + j];
        }
    }
    return count;
}

std::vector<Edge> SocialNetwork::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = i + 1; j < size_; ++j) {
            if (connected(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

void RewiringParams::validate() const {
    check_probability(delta_add, "delta_add");
    check_probability(delta_cut, "delta_cut");
    check_probability(p_add, "p_add");
    check_probability(p_cut, "p_cut");
}

double density(const SocialNetwork& net) {
    const auto n = net.size();
    if (n < 2) throw std::invalid_argument("density requires at least 2 vertices");
    return static_cast<double>(net.edge_count()) / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

double centrality(const SocialNetwork& net, std::size_t vertex) {
    const auto n = net.size();
    if (n < 2) throw std::invalid_argument("centrality requires at least 2 vertices");
    if (vertex >= n) throw std::out_of_range("centrality: vertex " + std::to_string(vertex) + " out of range");
    // In- and out-degree coincide on a symmetric graph: (d + d) / (2 (n - 1)).
    const auto d = static_cast<double>(net.degree(vertex));
    return (d + d) / (2.0 * static_cast<double>(n - 1));
}

NetworkStats stats(const SocialNetwork& net) {
    NetworkStats s;
    const auto n = net.size();
    if (n == 0) return s;
    const auto edges = net.edge_count();
    s.average_degree = 2.0 * static_cast<double>(edges) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (net.degree(i) == 0) ++s.isolated_count;
    }
    s.density = n >= 2 ? density(net) : 0.0;
    return s;
}

SocialNetwork random_network(std::size_t n, double edge_prob, RandomSource& rng) {
    check_probability(edge_prob, "edge_prob");
    SocialNetwork net(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.uniform() < edge_prob) net.connect(i, j);
        }
    }
    return net;
}

SocialNetwork rewire(const SocialNetwork& net, std::span<const double> opinions, const RewiringParams& params,
                     RandomSource& rng, RewireCounters* counters) {
    const auto n = net.size();
    if (opinions.size() != n) {
        throw std::invalid_argument("rewire: " + std::to_string(opinions.size()) + " opinions for " +
                                    std::to_string(n) + " agents");
    }
    for (double v : opinions) {
        if (!(v >= 0.0 && v <= 1.0)) throw std::out_of_range("rewire: opinion outside [0, 1]");
    }
    params.validate();

    SocialNetwork next = net;
    std::uint64_t visits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            ++visits;
            const double d = std::abs(opinions[i] - opinions[j]);
            if (!net.connected(i, j)) {
                if (d < params.delta_add && rng.chance(params.p_add)) next.connect(i, j);
            } else if (d > params.delta_cut && rng.chance(params.p_cut)) {
                next.disconnect(i, j);
            }
        }
    }
    if (counters != nullptr) counters->pair_visits = visits;
    return next;
}

void write_edge_list(std::ostream& out, const SocialNetwork& net) {
    for (const auto& [i, j] : net.edges()) {
        out << i << ' ' << j << '\n';
    }
}

SocialNetwork read_edge_list(std::istream& in, std::size_t size) {
    SocialNetwork net(size);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        long long i = -1;
        long long j = -1;
        std::string rest;
        if (!(fields >> i >> j) || (fields >> rest) || i < 0 || j < 0) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected \"i j\"");
        }
        net.connect(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    return net;
}

}  // namespace ltwd
