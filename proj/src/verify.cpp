#include "leafspan/verify.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "leafspan/corpus.hpp"

namespace leafspan {

std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::EdgeCount: return "edges";
        case TheoremId::DistanceRadius: return "distance";
        case TheoremId::DistanceSignlessRadius: return "distance-signless";
        case TheoremId::AdjacencyRadius: return "adjacency";
        case TheoremId::SignlessRadius: return "signless";
    }
    return "unknown";
}

TheoremId parse_theorem(std::string_view name) {
    for (auto id : kAllTheorems) {
        if (to_string(id) == name) return id;
    }
    throw std::invalid_argument("unknown theorem '" + std::string(name) + "'");
}

int minimal_order(TheoremId id, int t) {
    switch (id) {
        case TheoremId::EdgeCount: return 5;
        case TheoremId::DistanceRadius: return 7 * t + 2;
        case TheoremId::DistanceSignlessRadius: return 9 * t + 3;
        case TheoremId::AdjacencyRadius: return 5 * t + 2;
        case TheoremId::SignlessRadius: return 7 * t + 1;
    }
    return 0;
}

std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::Exceeds: return "exceeds";
        case Direction::AtMost: return "at_most";
        case Direction::AtLeast: return "at_least";
    }
    return "unknown";
}

Direction direction_of(TheoremId id) {
    switch (id) {
        case TheoremId::EdgeCount: return Direction::Exceeds;
        case TheoremId::DistanceRadius:
        case TheoremId::DistanceSignlessRadius: return Direction::AtMost;
        case TheoremId::AdjacencyRadius:
        case TheoremId::SignlessRadius: return Direction::AtLeast;
    }
    return Direction::Exceeds;
}

MatrixKind matrix_of(TheoremId id) {
    switch (id) {
        case TheoremId::DistanceRadius: return MatrixKind::Distance;
        case TheoremId::DistanceSignlessRadius: return MatrixKind::DistanceSignlessLaplacian;
        case TheoremId::AdjacencyRadius: return MatrixKind::Adjacency;
        case TheoremId::SignlessRadius: return MatrixKind::SignlessLaplacian;
        case TheoremId::EdgeCount: break;
    }
    throw std::invalid_argument("edge-count condition has no matrix");
}

Rational edge_bound(int n, int t) {
    if (n < 5) throw std::invalid_argument("edge bound needs n >= 5");
    if (t < 1) throw std::invalid_argument("edge bound needs t >= 1");
    const std::int64_t m = n - t;
    const std::int64_t tt = t;
    // Twice the bound, so the halves stay integral.
    const bool first_case = n == 5 || n >= 6 * t + 1;
    std::int64_t twice = m * (m - 1) + 3 * tt * tt + (first_case ? -2 * tt + 1 : tt);
    if (twice % 2 == 0) return {twice / 2, 1};
    return {twice, 2};
}

bool is_extremal_copy(const Graph& g, int t) {
    const int n = g.order();
    if (t < 1 || n < 2 * t) return false;
    VertexSet universal;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) universal.insert(v);
    }
    if (universal.size() < t) return false;
    VertexSet core;
    for_each_vertex(universal, [&](int v) {
        if (core.size() < t) core.insert(v);
    });
    const VertexSet rest = g.vertices() - core;
    VertexSet isolated;
    for_each_vertex(rest, [&](int v) {
        if ((g.neighbors(v) & rest).empty()) isolated.insert(v);
    });
    const VertexSet clique = rest - isolated;
    const int clique_size = n - 2 * t;
    if (clique_size <= 1) return isolated.size() == n - t && clique.empty();
    if (isolated.size() != t || clique.size() != clique_size) return false;
    bool complete_part = true;
    for_each_vertex(clique, [&](int v) {
        if ((g.neighbors(v) & rest) != clique - VertexSet::single(v)) complete_part = false;
    });
    return complete_part;
}

double extremal_threshold(ExtremalParams params, MatrixKind kind) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, MatrixKind>, double> cache;
    const auto key = std::make_tuple(params.n, params.t, kind);
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const double root = extremal_radius(params, kind);
    const double direct = spectral_radius(build_matrix(build_extremal(params), kind));
    if (std::abs(root - direct) > kComparisonSlack) {
        throw std::logic_error("characteristic polynomial root disagrees with the eigensolver for H(" +
                               std::to_string(params.n) + ", " + std::to_string(params.t) + ")");
    }
    std::lock_guard lock(mu);
    cache.emplace(key, root);
    return root;
}

Verdict evaluate(const Graph& g, int t, TheoremId id) {
    if (t < 1) throw std::invalid_argument("theorem parameter t must be >= 1");
    if (!is_connected(g)) throw std::domain_error("theorem conditions need a connected graph");

    Verdict v;
    v.theorem = id;
    v.t = t;
    v.n = g.order();
    v.connected = true;
    v.order_ok = v.n >= minimal_order(id, t);
    v.delta_ok = t <= min_degree(g);
    v.direction = direction_of(id);

    if (id == TheoremId::EdgeCount) {
        v.condition_value = g.edge_count();
        if (v.n >= 5) {
            const Rational bound = edge_bound(v.n, t);
            v.threshold = bound.value();
            v.margin = v.condition_value - bound.value();
            v.condition_ok = static_cast<std::int64_t>(g.edge_count()) * bound.den > bound.num;
        }
    } else {
        const MatrixKind kind = matrix_of(id);
        v.condition_value = spectral_radius(build_matrix(g, kind));
        if (v.n >= 2 * t) {
            const double h = extremal_threshold({v.n, t}, kind);
            v.threshold = h;
            v.margin = v.direction == Direction::AtMost ? h - v.condition_value : v.condition_value - h;
            if (*v.margin > kComparisonSlack) {
                v.condition_ok = true;
            } else if (std::abs(*v.margin) <= kComparisonSlack && is_extremal_copy(g, t)) {
                v.condition_ok = true;
                v.equality_case = true;
            }
        }
    }
    v.hypotheses_met = v.order_ok && v.connected && v.delta_ok && v.condition_ok;
    v.guarantee = v.hypotheses_met;
    return v;
}

Verdict evaluate_best(const Graph& g, TheoremId id) {
    const int top = std::max(1, min_degree(g));
    Verdict first = evaluate(g, 1, id);
    if (first.guarantee) return first;
    for (int t = 2; t <= top; ++t) {
        Verdict v = evaluate(g, t, id);
        if (v.guarantee) return v;
    }
    return first;
}

Verdict oracle_confirm(Verdict verdict, const Graph& g, std::uint64_t budget) {
    const auto result = find_spanning_tree_leaf_distance(g, 4, budget);
    switch (result.status) {
        case SearchStatus::Found: verdict.oracle_confirmed = true; break;
        case SearchStatus::None: verdict.oracle_confirmed = false; break;
        case SearchStatus::Inconclusive: verdict.oracle_confirmed.reset(); break;
    }
    return verdict;
}

bool LemmaSuiteReport::passed() const {
    for (const auto& r : relations) {
        if (r.violations > 0) return false;
    }
    return !relations.empty();
}

LemmaSuiteReport lemma_suite(std::uint64_t seed, int trials) {
    if (trials < 1) throw std::invalid_argument("lemma suite needs at least one trial");
    LemmaSuiteReport report{seed, trials, {}};
    report.relations = {
        {"distance", "distance radius of G < that of G - e", 0, 0, INFINITY},
        {"distance-signless", "distance signless radius of G < that of G - e", 0, 0, INFINITY},
        {"adjacency", "adjacency radius of G - e < that of G", 0, 0, INFINITY},
        {"signless", "signless radius of G - e < that of G", 0, 0, INFINITY},
    };
    const MatrixKind kinds[] = {MatrixKind::Distance, MatrixKind::DistanceSignlessLaplacian, MatrixKind::Adjacency,
                                MatrixKind::SignlessLaplacian};

    Rng rng(seed);
    for (int trial = 0; trial < trials;) {
        const int n = 5 + static_cast<int>(uniform_below(rng, 8));
        auto g = random_connected_graph(rng, n, 1);
        if (!g) continue;
        std::vector<Edge> removable;
        for (auto e : g->edges()) {
            Graph h = *g;
            h.remove_edge(e.first, e.second);
            if (is_connected(h)) removable.push_back(e);
        }
        if (removable.empty()) continue;
        const Edge e = removable[uniform_below(rng, removable.size())];
        Graph minus = *g;
        minus.remove_edge(e.first, e.second);

        for (std::size_t i = 0; i < report.relations.size(); ++i) {
            const double whole = spectral_radius(build_matrix(*g, kinds[i]));
            const double cut = spectral_radius(build_matrix(minus, kinds[i]));
            const double margin = i < 2 ? cut - whole : whole - cut;
            auto& rel = report.relations[i];
            ++rel.trials;
            rel.min_margin = std::min(rel.min_margin, margin);
            if (!(margin > kMonotonicityMargin)) ++rel.violations;
        }
        ++trial;
    }
    return report;
}

}  // namespace leafspan
