#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>

#include "leafspan/graph.hpp"

namespace leafspan {

/// Largest order for exhaustive labelled enumeration (2^21 masks at n = 7).
inline constexpr int kMaxExhaustiveOrder = 7;

/// Seeded engine. The draw helpers below avoid std distributions so that
/// a seed yields the same graphs on every standard library.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound), bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

/// Erdos-Renyi G(n, p).
Graph random_graph(Rng& rng, int n, double p);

/// G(n, p) with p drawn from {0.3, 0.5, 0.7} per attempt, rejected until the
/// sample is connected with minimum degree >= min_deg. Empty after
/// max_attempts failures.
std::optional<Graph> random_connected_graph(Rng& rng, int n, int min_deg, int max_attempts = 100000);

/// Labelled graph whose upper-triangle bits (pairs in (0,1), (0,2), (1,2),
/// (0,3), ... order) are given by mask.
Graph graph_from_mask(int n, std::uint64_t mask);

/// Calls f(g) for every connected labelled graph of order n, in increasing
/// mask order. n must be in [1, kMaxExhaustiveOrder].
template <typename F>
void for_each_connected_graph(int n, F&& f);

std::uint64_t connected_graph_count(int n);

// ---------------------------------------------------------------------------

template <typename F>
void for_each_connected_graph(int n, F&& f) {
    if (n < 1 || n > kMaxExhaustiveOrder) throw std::invalid_argument("exhaustive enumeration needs 1 <= n <= 7");
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t limit = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (pairs > 0 && std::popcount(mask) < n - 1) continue;
        Graph g = graph_from_mask(n, mask);
        if (is_connected(g)) f(g);
    }
}

}  // namespace leafspan
