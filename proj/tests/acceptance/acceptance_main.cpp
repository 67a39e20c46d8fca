// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "leafspan/commands.hpp"
#include "leafspan/corpus.hpp"
#include "leafspan/extremal.hpp"
#include "leafspan/spectra.hpp"
#include "leafspan/structural.hpp"
#include "leafspan/trees.hpp"
#include "leafspan/verify.hpp"

using namespace leafspan;

namespace {

constexpr double kAgreement = 1e-8;

const MatrixKind kFourKinds[] = {MatrixKind::Adjacency, MatrixKind::SignlessLaplacian, MatrixKind::Distance,
                                 MatrixKind::DistanceSignlessLaplacian};

struct Outcome {
    bool pass = false;
    std::string detail;
    // Graphs behind a failure, as "graph6/target" keys.
    std::vector<std::string> exceptions;
};

// Failures recorded in README.md under "Known deviations". A criterion listed
// here still prints FAIL; the run only exits nonzero if its exception set
// changes or another criterion fails.
const std::vector<std::pair<std::string, std::vector<std::string>>> kKnownDeviations = {
    // K_3 passes i(G - S) < 2|S| for every S, but its only spanning trees are
    // paths on three vertices whose centre sees two leaves.
    {"leaf-degree-biconditional", {"Bw/k=1"}},
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome radius_agreement(int t_min, int t_max, bool quadratic) {
    int instances = 0, failures = 0;
    double worst = 0.0;
    for (int t = t_min; t <= t_max; ++t) {
        const int n_lo = quadratic ? 2 * t : 2 * t + 1;
        const int n_hi = quadratic ? 2 * t : 40;
        for (int n = n_lo; n <= n_hi; ++n) {
            const Graph h = build_extremal({n, t});
            for (MatrixKind k : kFourKinds) {
                const double root = largest_root(char_poly({n, t}, k), root_hint({n, t}, k));
                const double gap = std::abs(root - spectral_radius(build_matrix(h, k)));
                worst = std::max(worst, gap);
                ++instances;
                failures += gap > kAgreement;
            }
        }
    }
    return {failures == 0, fmt("%d instances, %d over 1e-8, worst gap %.3g", instances, failures, worst)};
}

Outcome cubic_agreement() { return radius_agreement(1, 3, false); }

Outcome quadratic_agreement() { return radius_agreement(1, 10, true); }

Outcome extremal_bounds() {
    int applicable = 0, failures = 0;
    double worst = INFINITY;
    for (int t = 1; t <= 4; ++t)
        for (int n = 2 * t + 1; n <= 60; ++n)
            for (const auto& b : check_bounds({n, t})) {
                if (!b.applicable) continue;
                ++applicable;
                failures += !(b.holds && b.margin > 0.0);
                worst = std::min(worst, b.margin);
            }
    double eta12 = 0.0;
    for (const auto& b : check_bounds({12, 1}))
        if (b.name == "distance-signless") eta12 = b.radius;
    const bool example = eta12 > 27.0 && eta12 < 28.0;
    return {failures == 0 && example && applicable > 0,
            fmt("%d applicable inequalities, %d failed, smallest margin %.4g; (12,1) distance-signless radius %.6f in (27,28)",
                applicable, failures, worst, eta12)};
}

Outcome proof_anchors() {
    int instances = 0, failures = 0;
    for (std::int64_t t = 1; t <= 3; ++t)
        for (std::int64_t n = 2 * t + 1; n <= 40; ++n) {
            const auto p = std::get<CubicPoly>(char_poly({int(n), int(t)}, MatrixKind::Adjacency));
            const auto r = std::get<CubicPoly>(char_poly({int(n), int(t)}, MatrixKind::SignlessLaplacian));
            failures += p(n - t - 1) != -t * t * t;
            failures += r(2 * n - 2 * t - 2) != 2 * t * t * (t + 1 - n);
            instances += 2;
        }
    return {failures == 0, fmt("%d exact identities, %d mismatches", instances, failures)};
}

Outcome quotient_radius() {
    int instances = 0, failures = 0;
    double worst = 0.0;
    for (int t = 1; t <= 3; ++t)
        for (int n = 2 * t + 1; n <= 40; ++n) {
            const Graph h = build_extremal({n, t});
            const Partition p = canonical_partition({n, t});
            auto one = [&](MatrixKind k, double alpha) {
                const auto m = build_matrix(h, k, alpha);
                ++instances;
                if (!quotient(m, p).equitable) {
                    ++failures;
                    return;
                }
                const double gap = quotient_radii(m, p).gap();
                worst = std::max(worst, gap);
                failures += gap > kAgreement;
            };
            for (MatrixKind k : kFourKinds) one(k, 0.0);
            for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) one(MatrixKind::AAlpha, a);
        }
    return {failures == 0, fmt("%d instances, %d failures, worst gap %.3g", instances, failures, worst)};
}

Outcome leaf_degree_biconditional() {
    std::uint64_t graphs = 0, disagreements = 0, inconclusive = 0, pass_count = 0, from_four = 0;
    std::vector<std::string> exceptions;
    for (int n = 2; n <= 7; ++n)
        for_each_connected_graph(n, [&](const Graph& g) {
            ++graphs;
            for (int k : {1, 2}) {
                const bool pass = check_condition(g, ConditionSpec::leaf_degree(k)).passed();
                const auto r = find_spanning_tree_leaf_degree(g, k);
                pass_count += pass;
                if (r.status == SearchStatus::Inconclusive) {
                    ++inconclusive;
                    exceptions.push_back(format_graph6(g) + "/k=" + std::to_string(k) + "/inconclusive");
                    continue;
                }
                if (pass != (r.status == SearchStatus::Found)) {
                    ++disagreements;
                    from_four += n >= 4;
                    exceptions.push_back(format_graph6(g) + "/k=" + std::to_string(k));
                }
            }
        });
    std::string listed;
    for (const auto& e : exceptions) listed += (listed.empty() ? "" : " ") + e;
    return {disagreements == 0 && inconclusive == 0,
            fmt("%llu graphs x 2 targets, %llu condition passes, %llu disagreements [%s] (%llu with n >= 4), "
                "%llu inconclusive",
                (unsigned long long)graphs, (unsigned long long)pass_count, (unsigned long long)disagreements,
                listed.c_str(), (unsigned long long)from_four, (unsigned long long)inconclusive),
            exceptions};
}

Outcome leaf_distance_sufficiency() {
    std::uint64_t graphs = 0, passes = 0, counterexamples = 0, inconclusive = 0;
    for (int n = 5; n <= 7; ++n)
        for_each_connected_graph(n, [&](const Graph& g) {
            ++graphs;
            if (!check_condition(g, {1, 1}).passed()) return;
            ++passes;
            const auto r = find_spanning_tree_leaf_distance(g, 4);
            if (r.status == SearchStatus::Inconclusive) ++inconclusive;
            if (r.status == SearchStatus::None) ++counterexamples;
        });
    return {counterexamples == 0 && inconclusive == 0 && passes > 0,
            fmt("%llu graphs, %llu pass the condition, %llu counterexamples, %llu inconclusive",
                (unsigned long long)graphs, (unsigned long long)passes, (unsigned long long)counterexamples,
                (unsigned long long)inconclusive)};
}

// Near-complete graphs: K_n minus a few random edges, kept if connected.
Graph dense_sample(Rng& rng, int n) {
    for (;;) {
        Graph g = complete(n);
        const int drop = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(2 * n)));
        for (int i = 0; i < drop; ++i) {
            const int u = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
            const int v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
            if (u != v && g.adjacent(u, v)) g.remove_edge(u, v);
        }
        if (is_connected(g)) return g;
    }
}

Outcome falsification_hunt() {
    constexpr int kSamples = 10000;
    constexpr int kMaxOrder = 12;
    std::uint64_t graphs = 0, guarantees[5] = {}, falsified = 0, inconclusive = 0, extremal_granted = 0;
    Rng rng(20240601);
    auto test = [&](const Graph& g) {
        ++graphs;
        std::optional<SearchStatus> oracle;
        for (std::size_t i = 0; i < std::size(kAllTheorems); ++i) {
            const TheoremId id = kAllTheorems[i];
            if (g.order() < minimal_order(id, 1)) continue;
            const Verdict v = evaluate(g, 1, id);
            if (!v.guarantee) continue;
            ++guarantees[i];
            if (!oracle) oracle = find_spanning_tree_leaf_distance(g, 4).status;
            if (*oracle == SearchStatus::None) ++falsified;
            if (*oracle == SearchStatus::Inconclusive) ++inconclusive;
        }
    };
    for (int n = 5; n <= kMaxOrder; ++n) {
        for (int i = 0; i < kSamples; ++i) test(*random_connected_graph(rng, n, 1));
        for (int i = 0; i < kSamples; ++i) test(dense_sample(rng, n));
        const Graph h = build_extremal({n, 1});
        for (TheoremId id : kAllTheorems)
            if (id != TheoremId::EdgeCount && n >= minimal_order(id, 1)) extremal_granted += evaluate(h, 1, id).guarantee;
        test(h);
    }
    return {falsified == 0 && inconclusive == 0,
            fmt("%llu graphs; guarantees edges=%llu distance=%llu distance-signless=%llu adjacency=%llu signless=%llu; "
                "extremal equality grants %llu; %llu falsifications, %llu inconclusive",
                (unsigned long long)graphs, (unsigned long long)guarantees[0], (unsigned long long)guarantees[1],
                (unsigned long long)guarantees[2], (unsigned long long)guarantees[3], (unsigned long long)guarantees[4],
                (unsigned long long)extremal_granted, (unsigned long long)falsified, (unsigned long long)inconclusive)};
}

Outcome extremal_hamilton_path() {
    int instances = 0, failures = 0;
    for (int t = 1; t <= 5; ++t)
        for (int n = std::max(5, 2 * t); n <= 30; ++n) {
            const TreeCert c = hamilton_path_extremal({n, t});
            ++instances;
            failures += !(is_spanning_tree_of(c, build_extremal({n, t})) && c.leaf_distance == n - 1 &&
                          c.leaf_distance >= 4);
        }
    return {failures == 0, fmt("%d certificates, %d invalid", instances, failures)};
}

Outcome monotonicity() {
    const auto r = lemma_suite(1, 1000);
    std::ostringstream s;
    bool ok = r.passed();
    for (const auto& rel : r.relations) {
        ok &= rel.trials == 1000 && rel.violations == 0 && rel.min_margin > kMonotonicityMargin;
        s << rel.name << ": " << rel.violations << "/" << rel.trials << " violations, min margin " << rel.min_margin
          << "; ";
    }
    return {ok, s.str()};
}

Outcome sweep_determinism() {
    auto run = [](cli::SweepOptions o) {
        std::ostringstream out;
        cli::sweep(o, out);
        return out.str();
    };
    cli::SweepOptions o;
    o.n_min = 8;
    o.n_max = 10;
    o.samples = 300;
    o.seed = 7;
    o.threads = 4;
    const std::string a = run(o);
    const std::string b = run(o);
    o.threads = 1;
    const std::string c = run(o);
    cli::SweepOptions e;
    e.n_min = 5;
    e.n_max = 6;
    const bool exhaustive_same = run(e) == run(e);
    return {a == b && a == c && exhaustive_same,
            fmt("random sweep %zu bytes identical across runs and thread counts: %s; exhaustive n=5..6 identical: %s",
                a.size(), (a == b && a == c) ? "yes" : "no", exhaustive_same ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"extremal-cubic-agreement", cubic_agreement},
        {"extremal-quadratic-agreement", quadratic_agreement},
        {"extremal-radius-bounds", extremal_bounds},
        {"exact-proof-anchors", proof_anchors},
        {"equitable-quotient-radius", quotient_radius},
        {"leaf-degree-biconditional", leaf_degree_biconditional},
        {"leaf-distance-sufficiency", leaf_distance_sufficiency},
        {"theorem-falsification-hunt", falsification_hunt},
        {"extremal-hamilton-path", extremal_hamilton_path},
        {"edge-monotonicity", monotonicity},
        {"sweep-determinism", sweep_determinism},
    };
    int failed = 0;
    int unexpected = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what(), {}};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string note;
        if (!o.pass) {
            ++failed;
            const auto known = std::find_if(kKnownDeviations.begin(), kKnownDeviations.end(),
                                            [&](const auto& k) { return k.first == name; });
            if (known != kKnownDeviations.end() && known->second == o.exceptions) {
                note = " [known deviation]";
            } else {
                ++unexpected;
            }
        }
        std::printf("%s [%2d] %s: %s (%.1fs)%s\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str(), secs,
                    note.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed, %d known deviation(s), %d unexpected failure(s)\n",
                static_cast<int>(criteria.size()) - failed, criteria.size(), failed - unexpected, unexpected);
    return unexpected == 0 ? 0 : 1;
}
