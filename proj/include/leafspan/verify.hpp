#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leafspan/extremal.hpp"
#include "leafspan/graph.hpp"
#include "leafspan/spectra.hpp"
#include "leafspan/trees.hpp"

namespace leafspan {

/// Sufficient conditions for a spanning tree with leaf distance at least
/// four, each relative to the threshold graph H(n, t).
enum class TheoremId {
    EdgeCount,               // |E(G)| > edge_bound(n, t),          n >= 5
    DistanceRadius,          // distance radius of G <= that of H,   n >= 7t + 2
    DistanceSignlessRadius,  // distance signless radius <= H's,     n >= 9t + 3
    AdjacencyRadius,         // adjacency radius of G >= that of H,  n >= 5t + 2
    SignlessRadius,          // signless radius >= H's,              n >= 7t + 1
};

inline constexpr TheoremId kAllTheorems[] = {TheoremId::EdgeCount, TheoremId::DistanceRadius,
                                             TheoremId::DistanceSignlessRadius, TheoremId::AdjacencyRadius,
                                             TheoremId::SignlessRadius};

/// "edges", "distance", "distance-signless", "adjacency", "signless".
std::string_view to_string(TheoremId id);
TheoremId parse_theorem(std::string_view name);

/// Smallest admissible order for the theorem at parameter t.
int minimal_order(TheoremId id, int t);

/// Which side of the threshold grants the guarantee.
enum class Direction { Exceeds, AtMost, AtLeast };
std::string_view to_string(Direction d);
Direction direction_of(TheoremId id);

/// Nonnegative rational with a small denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

/// C(n-t, 2) + 3t^2/2 - t + 1/2   when n = 5 or n >= 6t + 1,
/// C(n-t, 2) + 3t^2/2 + t/2       when 6 <= n <= 6t.
/// Requires n >= 5 and t >= 1.
Rational edge_bound(int n, int t);

struct Verdict {
    TheoremId theorem = TheoremId::EdgeCount;
    int t = 0;
    int n = 0;
    bool order_ok = false;
    bool connected = false;
    bool delta_ok = false;
    Direction direction = Direction::Exceeds;
    double condition_value = 0.0;
    /// Unset when H(n, t) (or the edge bound) is undefined for this n.
    std::optional<double> threshold;
    /// Signed distance to the threshold, positive on the granting side.
    std::optional<double> margin;
    bool condition_ok = false;
    /// Granted only through an exact recognition of H(n, t) when the
    /// numeric comparison is within kComparisonSlack.
    bool equality_case = false;
    bool hypotheses_met = false;
    bool guarantee = false;
    std::optional<bool> oracle_confirmed;

    /// A granted guarantee whose graph has no such tree.
    bool falsified() const { return guarantee && oracle_confirmed == false; }
};

/// True when g is a relabelling of H(n, t).
bool is_extremal_copy(const Graph& g, int t);

/// Spectral radius of H(n, t) from its characteristic polynomial, checked
/// against the eigensolver on H itself to within kComparisonSlack (throws
/// std::logic_error otherwise). Memoised; safe to call concurrently.
double extremal_threshold(ExtremalParams params, MatrixKind kind);

MatrixKind matrix_of(TheoremId id);

/// Throws std::domain_error for a disconnected graph.
Verdict evaluate(const Graph& g, int t, TheoremId id);
/// Tries t = 1..max(1, min_degree(g)) and keeps the first granted verdict,
/// else the t = 1 verdict.
Verdict evaluate_best(const Graph& g, TheoremId id);

/// Runs the leaf-distance-4 tree search and records the outcome; an
/// inconclusive search leaves oracle_confirmed unset.
Verdict oracle_confirm(Verdict verdict, const Graph& g, std::uint64_t budget = default_branch_budget());

struct MonotonicityRelation {
    std::string name;
    std::string statement;
    int trials = 0;
    int violations = 0;
    double min_margin = 0.0;
};

struct LemmaSuiteReport {
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<MonotonicityRelation> relations;
    bool passed() const;
};

/// Strict margin required by the edge-monotonicity relations.
inline constexpr double kMonotonicityMargin = 1e-10;

/// Random connected graphs (n in [5, 12]) with a random non-bridge edge e:
///   distance radius and distance signless radius strictly grow from G to G - e,
///   adjacency and signless radius strictly shrink.
LemmaSuiteReport lemma_suite(std::uint64_t seed, int trials);

}  // namespace leafspan
