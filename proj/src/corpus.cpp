#include "leafspan/corpus.hpp"

#include <array>
#include <stdexcept>

namespace leafspan {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph random_graph(Rng& rng, int n, double p) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (uniform_unit(rng) < p) g.add_edge(i, j);
    return g;
}

std::optional<Graph> random_connected_graph(Rng& rng, int n, int min_deg, int max_attempts) {
    static constexpr std::array<double, 3> kDensities{0.3, 0.5, 0.7};
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const double p = kDensities[uniform_below(rng, kDensities.size())];
        Graph g = random_graph(rng, n, p);
        if (min_degree(g) >= min_deg && is_connected(g)) return g;
    }
    return std::nullopt;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1U) g.add_edge(i, j);
    return g;
}

std::uint64_t connected_graph_count(int n) {
    std::uint64_t count = 0;
    for_each_connected_graph(n, [&](const Graph&) { ++count; });
    return count;
}

}  // namespace leafspan
