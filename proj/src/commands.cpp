#include "leafspan/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "leafspan/corpus.hpp"
#include "leafspan/extremal.hpp"
#include "leafspan/report.hpp"
#include "leafspan/structural.hpp"
#include "leafspan/trees.hpp"

namespace leafspan::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_commas(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

Graph load_graph(const GraphSource& source) {
    const int given = int(source.g6.has_value()) + int(source.g6_file.has_value()) + int(source.edges_file.has_value());
    if (given != 1) throw InputError("exactly one of --g6, --g6-file, --edges is required");
    try {
        if (source.g6) return parse_graph6(*source.g6);
        if (source.g6_file) {
            const std::string text = read_file(*source.g6_file);
            return parse_graph6(text.substr(0, text.find('\n')));
        }
        return parse_edge_list(read_file(*source.edges_file));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::vector<TheoremId> parse_theorem_list(const std::string& list) {
    if (list == "all") return {std::begin(kAllTheorems), std::end(kAllTheorems)};
    if (list == "none") return {};
    std::vector<TheoremId> out;
    try {
        for (const auto& name : split_commas(list)) out.push_back(parse_theorem(name));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return out;
}

std::vector<MatrixKind> parse_kind_list(const std::string& list) {
    if (list == "all") return LemmaOptions{}.kinds;
    std::vector<MatrixKind> out;
    try {
        for (const auto& name : split_commas(list)) out.push_back(parse_matrix_kind(name));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (out.empty()) throw InputError("--kinds selects nothing");
    return out;
}

// check ----------------------------------------------------------------------

namespace {

struct Target {
    ConditionSpec condition;
    bool leaf_degree_mode = false;
    int bound = 4;

    std::string describe() const {
        return leaf_degree_mode ? "leaf_degree<=" + std::to_string(bound) : "leaf_distance>=" + std::to_string(bound);
    }
    TreeSearchResult search(const Graph& g, std::uint64_t budget) const {
        return leaf_degree_mode ? find_spanning_tree_leaf_degree(g, bound, budget)
                                : find_spanning_tree_leaf_distance(g, bound, budget);
    }
};

Target make_target(std::optional<int> d, std::optional<int> k) {
    if (d && k) throw InputError("--d and --k are mutually exclusive");
    if (k) {
        if (*k < 1) throw InputError("--k must be >= 1");
        return {ConditionSpec::leaf_degree(*k), true, *k};
    }
    const int dd = d.value_or(4);
    if (dd < 3) throw InputError("--d must be >= 3");
    return {ConditionSpec::leaf_distance(dd), false, dd};
}

json search_json(const TreeSearchResult& r) {
    json j{{"status", to_string(r.status)}, {"nodes", r.nodes}};
    j["tree"] = r.tree ? to_json(*r.tree) : json(nullptr);
    return j;
}

}  // namespace

int check(const CheckOptions& opts, json& report) {
    const Target target = make_target(opts.d, opts.k);
    if (opts.t && *opts.t < 1) throw InputError("--t must be >= 1");
    const Graph g = load_graph(opts.source);

    report = json::object();
    report["graph6"] = format_graph6(g);
    report["n"] = g.order();
    report["m"] = g.edge_count();
    report["min_degree"] = min_degree(g);
    if (!is_connected(g)) {
        report["error"] = "graph is disconnected";
        return kExitDisconnected;
    }
    if (g.order() < 2) throw InputError("graph needs at least two vertices");

    const auto outcome = check_condition(g, target.condition);
    report["structural"] = {{"num", target.condition.num},
                            {"den", target.condition.den},
                            {"passed", outcome.passed()},
                            {"witness", outcome.witness ? to_json(*outcome.witness) : json(nullptr)}};

    bool inconclusive = false;
    std::optional<TreeSearchResult> four;
    if (opts.oracle) {
        const auto r = target.search(g, opts.budget);
        report["oracle"] = search_json(r);
        report["oracle"]["target"] = target.describe();
        inconclusive |= r.status == SearchStatus::Inconclusive;
        if (!target.leaf_degree_mode && target.bound == 4) four = r;
    } else {
        report["oracle"] = nullptr;
    }

    int falsifications = 0;
    json verdicts = json::array();
    for (auto id : opts.theorems) {
        Verdict v = opts.t ? evaluate(g, *opts.t, id) : evaluate_best(g, id);
        if (opts.oracle) {
            if (!four) four = find_spanning_tree_leaf_distance(g, 4, opts.budget);
            if (four->status == SearchStatus::Found) v.oracle_confirmed = true;
            if (four->status == SearchStatus::None) v.oracle_confirmed = false;
            inconclusive |= four->status == SearchStatus::Inconclusive;
        }
        if (v.falsified()) ++falsifications;
        verdicts.push_back(to_json(v));
    }
    report["verdicts"] = verdicts;
    report["falsifications"] = falsifications;

    if (falsifications > 0) return kExitFailure;
    if (inconclusive) return kExitInconclusive;
    return kExitOk;
}

// verify-lemmas --------------------------------------------------------------

namespace {

bool wants(const LemmaOptions& o, MatrixKind k) {
    return std::find(o.kinds.begin(), o.kinds.end(), k) != o.kinds.end();
}

constexpr MatrixKind kPolyKinds[] = {MatrixKind::Distance, MatrixKind::DistanceSignlessLaplacian,
                                     MatrixKind::Adjacency, MatrixKind::SignlessLaplacian};
constexpr double kAlphas[] = {0.0, 0.25, 0.5, 0.75, 1.0};

void record_gap(LemmaClause& c, double gap, double tol) {
    ++c.instances;
    c.worst = std::max(c.worst, gap);
    if (!(gap <= tol)) ++c.failures;
}

}  // namespace

std::vector<LemmaClause> verify_lemmas(const LemmaOptions& o) {
    std::vector<LemmaClause> out;

    for (auto kind : kPolyKinds) {
        if (!wants(o, kind)) continue;
        LemmaClause cubic{"extremal_cubic_agreement", std::string(to_string(kind))};
        for (int t = 1; t <= o.t_max; ++t) {
            for (int n = 2 * t + 1; n <= o.n_max; ++n) {
                const ExtremalParams p{n, t};
                const double root = extremal_radius(p, kind);
                record_gap(cubic, std::abs(root - spectral_radius(build_matrix(build_extremal(p), kind))),
                           kComparisonSlack);
            }
        }
        out.push_back(cubic);

        LemmaClause quad{"extremal_quadratic_agreement", std::string(to_string(kind))};
        for (int s = 1; s <= o.s_max; ++s) {
            const ExtremalParams p{2 * s, s};
            record_gap(quad, std::abs(extremal_radius(p, kind) - spectral_radius(build_matrix(build_extremal(p), kind))),
                       kComparisonSlack);
        }
        out.push_back(quad);
    }

    {
        std::vector<LemmaClause> bounds;
        for (const char* name : {"distance", "distance-signless", "adjacency", "signless"}) {
            if (wants(o, parse_matrix_kind(name))) bounds.push_back({"extremal_bounds", name, 0, 0, INFINITY});
        }
        for (int t = 1; t <= o.bounds_t_max; ++t) {
            for (int n = 2 * t + 1; n <= o.bounds_n_max; ++n) {
                for (const auto& b : check_bounds({n, t})) {
                    auto it = std::find_if(bounds.begin(), bounds.end(), [&](auto& c) { return c.kind == b.name; });
                    if (it == bounds.end() || !b.applicable) continue;
                    ++it->instances;
                    it->worst = std::min(it->worst, b.margin);
                    if (!b.holds) ++it->failures;
                }
            }
        }
        out.insert(out.end(), bounds.begin(), bounds.end());
    }

    if (wants(o, MatrixKind::Adjacency) || wants(o, MatrixKind::SignlessLaplacian)) {
        LemmaClause anchors{"proof_anchor_identities", "adjacency+signless"};
        for (int t = 1; t <= o.t_max; ++t) {
            for (int n = 2 * t + 1; n <= o.n_max; ++n) {
                const std::int64_t tt = t;
                const std::int64_t nn = n;
                const auto p = std::get<CubicPoly>(char_poly({n, t}, MatrixKind::Adjacency));
                const auto r = std::get<CubicPoly>(char_poly({n, t}, MatrixKind::SignlessLaplacian));
                ++anchors.instances;
                const bool ok = p(nn - tt - 1) == -tt * tt * tt && r(2 * nn - 2 * tt - 2) == 2 * tt * tt * (tt + 1 - nn);
                if (!ok) ++anchors.failures;
            }
        }
        out.push_back(anchors);
    }

    for (auto kind : {MatrixKind::Adjacency, MatrixKind::SignlessLaplacian, MatrixKind::Distance,
                      MatrixKind::DistanceSignlessLaplacian, MatrixKind::AAlpha}) {
        if (!wants(o, kind)) continue;
        LemmaClause q{"equitable_quotient_radius", std::string(to_string(kind))};
        auto run = [&](ExtremalParams p) {
            const Graph h = build_extremal(p);
            const Partition part = canonical_partition(p);
            if (kind == MatrixKind::AAlpha) {
                for (double a : kAlphas) record_gap(q, quotient_radii(build_matrix(h, kind, a), part).gap(), kComparisonSlack);
            } else {
                record_gap(q, quotient_radii(build_matrix(h, kind), part).gap(), kComparisonSlack);
            }
        };
        for (int t = 1; t <= o.t_max; ++t)
            for (int n = 2 * t + 1; n <= o.n_max; ++n) run({n, t});
        for (int s = 1; s <= o.s_max; ++s) run({2 * s, s});
        out.push_back(q);
    }

    if (o.trials > 0) {
        const LemmaSuiteReport suite = lemma_suite(o.seed, o.trials);
        for (const auto& rel : suite.relations) {
            if (!wants(o, parse_matrix_kind(rel.name))) continue;
            out.push_back({"edge_monotonicity", rel.name, rel.trials, rel.violations, rel.min_margin});
        }
    }
    return out;
}

int verify_lemmas(const LemmaOptions& opts, json& report) {
    if (opts.kinds.empty()) throw InputError("--kinds selects nothing");
    const auto clauses = verify_lemmas(opts);
    json arr = json::array();
    bool all = true;
    for (const auto& c : clauses) {
        all &= c.passed();
        arr.push_back({{"name", c.name},
                       {"kind", c.kind},
                       {"instances", c.instances},
                       {"failures", c.failures},
                       {"worst", c.worst},
                       {"passed", c.passed()}});
    }
    report = {{"seed", opts.seed}, {"trials", opts.trials}, {"clauses", arr}, {"passed", all}};
    return all ? kExitOk : kExitFailure;
}

// sweep ----------------------------------------------------------------------

int SweepSummary::exit_code() const {
    if (falsifications > 0 || counterexamples > 0) return kExitFailure;
    if (inconclusive > 0) return kExitInconclusive;
    return kExitOk;
}

namespace {

struct Row {
    std::string line;
    bool pass = false;
    std::optional<SearchStatus> oracle;
    bool counterexample = false;
    int guarantees = 0;
    bool falsified = false;
    bool inconclusive = false;
};

Row evaluate_row(const Graph& g, const SweepOptions& o, const Target& target) {
    Row row;
    row.pass = check_condition(g, target.condition).passed();

    std::optional<TreeSearchResult> four;
    std::string agree = "-";
    if (o.oracle) {
        const auto r = target.search(g, o.budget);
        row.oracle = r.status;
        row.inconclusive |= r.status == SearchStatus::Inconclusive;
        if (!target.leaf_degree_mode && target.bound == 4) four = r;
        if (r.status != SearchStatus::Inconclusive) {
            const bool found = r.status == SearchStatus::Found;
            row.counterexample = target.leaf_degree_mode ? found != row.pass : (row.pass && !found);
            agree = row.counterexample ? "0" : "1";
        }
    }

    std::string flags;
    for (auto id : o.theorems) {
        Verdict v = evaluate(g, o.t, id);
        if (v.guarantee) {
            ++row.guarantees;
            if (o.oracle) {
                if (!four) four = find_spanning_tree_leaf_distance(g, 4, o.budget);
                row.inconclusive |= four->status == SearchStatus::Inconclusive;
                if (four->status == SearchStatus::None) row.falsified = true;
            }
        }
        flags += v.guarantee ? ",1" : ",0";
    }

    std::ostringstream line;
    line << format_graph6(g) << ',' << g.order() << ',' << g.edge_count() << ',' << min_degree(g) << ','
         << (row.pass ? "pass" : "fail") << ',' << (row.oracle ? to_string(*row.oracle) : std::string("off")) << ','
         << agree << flags << ',' << (row.falsified ? 1 : 0);
    row.line = line.str();
    return row;
}

template <typename F>
void parallel_indices(std::size_t count, unsigned threads, F&& f) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

constexpr std::size_t kBatch = 4096;

}  // namespace

SweepSummary sweep(const SweepOptions& o, std::ostream& csv) {
    const Target target = make_target(o.d, o.k);
    if (o.n_min < 2 || o.n_max < o.n_min) throw InputError("sweep needs 2 <= n_min <= n_max");
    if (o.n_max > kMaxVertices) throw InputError("sweep order exceeds 64");
    if (o.t < 1) throw InputError("--t must be >= 1");
    SweepMode mode = o.mode;
    if (mode == SweepMode::Auto) mode = o.n_max <= kMaxExhaustiveOrder ? SweepMode::Exhaustive : SweepMode::Random;
    if (mode == SweepMode::Exhaustive && o.n_max > kMaxExhaustiveOrder) {
        throw InputError("exhaustive sweeps are limited to n <= 7");
    }
    if (mode == SweepMode::Random && o.samples < 1) throw InputError("--samples must be >= 1");
    const unsigned threads = o.threads ? o.threads : std::max(1U, std::thread::hardware_concurrency());

    csv << "# " << kSweepSchema << " mode=" << (mode == SweepMode::Exhaustive ? "exhaustive" : "random")
        << " n=" << o.n_min << ".." << o.n_max << " t=" << o.t << " condition=" << target.condition.num << '/'
        << target.condition.den << " oracle=" << (o.oracle ? target.describe() : std::string("off"));
    if (mode == SweepMode::Random) csv << " seed=" << o.seed << " samples=" << o.samples;
    csv << '\n' << "graph6,n,m,min_degree,condition,oracle,agree";
    for (auto id : o.theorems) csv << ',' << to_string(id);
    csv << ",falsified\n";

    SweepSummary sum;
    std::vector<Graph> batch;
    std::vector<Row> rows;
    auto flush = [&] {
        rows.assign(batch.size(), Row{});
        parallel_indices(batch.size(), threads, [&](std::size_t i) { rows[i] = evaluate_row(batch[i], o, target); });
        for (const auto& r : rows) {
            csv << r.line << '\n';
            ++sum.graphs;
            sum.condition_pass += r.pass;
            if (r.oracle == SearchStatus::Found) ++sum.oracle_found;
            if (r.oracle == SearchStatus::None) ++sum.oracle_none;
            sum.inconclusive += r.inconclusive;
            sum.counterexamples += r.counterexample;
            sum.guarantees += static_cast<std::uint64_t>(r.guarantees);
            sum.falsifications += r.falsified;
        }
        batch.clear();
    };
    auto push = [&](Graph g) {
        batch.push_back(std::move(g));
        if (batch.size() == kBatch) flush();
    };

    if (mode == SweepMode::Exhaustive) {
        for (int n = o.n_min; n <= o.n_max; ++n) for_each_connected_graph(n, push);
    } else {
        Rng rng(o.seed);
        for (int n = o.n_min; n <= o.n_max; ++n) {
            for (int i = 0; i < o.samples; ++i) {
                auto g = random_connected_graph(rng, n, o.t);
                if (!g) throw InputError("could not sample a connected graph with the requested minimum degree");
                push(std::move(*g));
            }
            if (n >= 2 * o.t) push(build_extremal({n, o.t}));
        }
    }
    flush();

    csv << "# summary graphs=" << sum.graphs << " condition_pass=" << sum.condition_pass
        << " oracle_found=" << sum.oracle_found << " oracle_none=" << sum.oracle_none
        << " inconclusive=" << sum.inconclusive << " counterexamples=" << sum.counterexamples
        << " guarantees=" << sum.guarantees << " falsifications=" << sum.falsifications << '\n';
    return sum;
}

}  // namespace leafspan::cli
