#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "leafspan/graph.hpp"
#include "leafspan/spectra.hpp"
#include "leafspan/verify.hpp"

namespace leafspan::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,       // falsification, counterexample or failed lemma clause
    kExitInputError = 2,    // unreadable or malformed graph / options
    kExitInconclusive = 3,  // some tree search ran out of budget
    kExitDisconnected = 4,  // input graph is disconnected
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::optional<std::string> g6;
    std::optional<std::string> g6_file;
    std::optional<std::string> edges_file;
};

/// Exactly one source must be set. Throws InputError.
Graph load_graph(const GraphSource& source);

/// Comma-separated names, or "all" / "none".
std::vector<TheoremId> parse_theorem_list(const std::string& list);
/// Comma-separated matrix kind names, or "all".
std::vector<MatrixKind> parse_kind_list(const std::string& list);

// check ----------------------------------------------------------------------

struct CheckOptions {
    GraphSource source;
    /// Unset: try every t up to the minimum degree.
    std::optional<int> t;
    std::vector<TheoremId> theorems{std::begin(kAllTheorems), std::end(kAllTheorems)};
    std::optional<int> d;  // leaf-distance target (default 4)
    std::optional<int> k;  // leaf-degree target; replaces the leaf-distance check
    bool oracle = true;
    std::uint64_t budget = default_branch_budget();
};

/// Returns the exit code; the JSON report is written to `report`.
int check(const CheckOptions& opts, nlohmann::json& report);

// verify-lemmas --------------------------------------------------------------

struct LemmaOptions {
    int t_max = 3;
    int n_max = 40;
    int s_max = 10;
    int bounds_t_max = 4;
    int bounds_n_max = 60;
    std::vector<MatrixKind> kinds{MatrixKind::Adjacency, MatrixKind::SignlessLaplacian, MatrixKind::Distance,
                                  MatrixKind::DistanceSignlessLaplacian, MatrixKind::AAlpha};
    std::uint64_t seed = 1;
    int trials = 1000;
};

struct LemmaClause {
    std::string name;
    std::string kind;
    int instances = 0;
    int failures = 0;
    /// Largest error for agreement clauses, smallest slack for inequalities.
    double worst = 0.0;
    bool passed() const { return failures == 0 && instances > 0; }
};

std::vector<LemmaClause> verify_lemmas(const LemmaOptions& opts);
int verify_lemmas(const LemmaOptions& opts, nlohmann::json& report);

// sweep ----------------------------------------------------------------------

enum class SweepMode { Auto, Exhaustive, Random };

struct SweepOptions {
    int n_min = 5;
    int n_max = 5;
    int t = 1;
    SweepMode mode = SweepMode::Auto;
    std::optional<int> d;
    std::optional<int> k;
    std::vector<TheoremId> theorems{std::begin(kAllTheorems), std::end(kAllTheorems)};
    std::uint64_t seed = 1;
    int samples = 1000;
    bool oracle = true;
    std::uint64_t budget = default_branch_budget();
    unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepSummary {
    std::uint64_t graphs = 0;
    std::uint64_t condition_pass = 0;
    std::uint64_t oracle_found = 0;
    std::uint64_t oracle_none = 0;
    std::uint64_t inconclusive = 0;
    std::uint64_t counterexamples = 0;
    std::uint64_t guarantees = 0;
    std::uint64_t falsifications = 0;

    int exit_code() const;
};

inline constexpr const char* kSweepSchema = "leafspan-sweep-v1";

/// Writes the CSV (header comment, column line, rows in input order, summary
/// comment) to `csv`.
SweepSummary sweep(const SweepOptions& opts, std::ostream& csv);

}  // namespace leafspan::cli
