// leafspan: check graphs against the leaf-distance spanning tree conditions,
// verify the extremal-graph identities, and sweep graph corpora.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "leafspan/commands.hpp"

namespace {

using namespace leafspan;
using namespace leafspan::cli;

int emit_json(const nlohmann::json& report, const std::optional<std::string>& path) {
    if (!path) {
        std::cout << report.dump(2) << '\n';
        return 0;
    }
    std::ofstream out(*path);
    if (!out) {
        std::cerr << "error: cannot write '" << *path << "'\n";
        return kExitInputError;
    }
    out << report.dump(2) << '\n';
    return 0;
}

std::optional<std::uint64_t> budget_flag;

std::uint64_t budget() { return budget_flag.value_or(default_branch_budget()); }

bool oracle_on(const std::string& flag) { return flag == "on"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spanning trees with large leaf distance: condition checks, oracles and sweeps"};
    app.require_subcommand(1);
    app.add_option("--budget", budget_flag, "Branch-node budget per tree search (default 1e8, env LEAFSPAN_BUDGET)");

    // check
    CheckOptions check_opts;
    std::string check_theorems = "all";
    std::string check_oracle = "on";
    std::optional<std::string> check_json;
    auto* check_cmd = app.add_subcommand("check", "Evaluate every condition on one graph");
    auto* g6_opt = check_cmd->add_option("--g6", check_opts.source.g6, "graph6 string");
    auto* g6f_opt = check_cmd->add_option("--g6-file", check_opts.source.g6_file, "File whose first line is graph6");
    auto* edges_opt = check_cmd->add_option("--edges", check_opts.source.edges_file, "Edge list file, 'u v' per line");
    g6_opt->excludes(g6f_opt, edges_opt);
    g6f_opt->excludes(edges_opt);
    check_cmd->add_option("--t", check_opts.t, "Minimum-degree parameter (default: try 1..min degree)");
    check_cmd->add_option("--theorems", check_theorems, "Comma list of edges,distance,distance-signless,adjacency,signless or all");
    check_cmd->add_option("--d", check_opts.d, "Leaf-distance target for the structural check and oracle (default 4)");
    check_cmd->add_option("--k", check_opts.k, "Leaf-degree target instead of leaf distance");
    check_cmd->add_option("--oracle", check_oracle, "Run the tree search")->check(CLI::IsMember({"on", "off"}));
    check_cmd->add_option("--json", check_json, "Write the report here instead of stdout");

    // verify-lemmas
    LemmaOptions lemma_opts;
    std::string lemma_kinds = "all";
    std::optional<std::string> lemma_json;
    auto* lemma_cmd = app.add_subcommand("verify-lemmas", "Check the extremal-graph identities and monotonicity relations");
    lemma_cmd->add_option("--t-max", lemma_opts.t_max, "Largest t in the polynomial grid");
    lemma_cmd->add_option("--n-max", lemma_opts.n_max, "Largest n in the polynomial grid");
    lemma_cmd->add_option("--s-max", lemma_opts.s_max, "Largest s for the n = 2s family");
    lemma_cmd->add_option("--kinds", lemma_kinds, "Comma list of adjacency,signless,distance,distance-signless,aalpha or all");
    lemma_cmd->add_option("--seed", lemma_opts.seed, "Seed for the monotonicity trials");
    lemma_cmd->add_option("--samples", lemma_opts.trials, "Number of monotonicity trials");
    lemma_cmd->add_option("--json", lemma_json, "Write the report here instead of stdout");

    // sweep
    SweepOptions sweep_opts;
    std::string sweep_n = "5";
    std::string sweep_mode = "auto";
    std::string sweep_theorems = "all";
    std::string sweep_oracle = "on";
    std::optional<std::string> sweep_csv;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run conditions and oracles over a graph corpus, CSV out");
    sweep_cmd->add_option("--n", sweep_n, "Order or range, e.g. 6 or 8-12");
    sweep_cmd->add_option("--mode", sweep_mode, "exhaustive (n <= 7), random, or auto")
        ->check(CLI::IsMember({"auto", "exhaustive", "random"}));
    sweep_cmd->add_option("--t", sweep_opts.t, "Minimum-degree parameter");
    sweep_cmd->add_option("--d", sweep_opts.d, "Leaf-distance target (default 4)");
    sweep_cmd->add_option("--k", sweep_opts.k, "Leaf-degree target instead of leaf distance");
    sweep_cmd->add_option("--theorems", sweep_theorems, "Comma list, all, or none");
    sweep_cmd->add_option("--seed", sweep_opts.seed, "Random corpus seed");
    sweep_cmd->add_option("--samples", sweep_opts.samples, "Random graphs per order");
    sweep_cmd->add_option("--oracle", sweep_oracle, "Run the tree search")->check(CLI::IsMember({"on", "off"}));
    sweep_cmd->add_option("--threads", sweep_opts.threads, "Worker threads (default: all cores)");
    sweep_cmd->add_option("--csv", sweep_csv, "Write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInputError;
    }

    try {
        if (check_cmd->parsed()) {
            check_opts.theorems = parse_theorem_list(check_theorems);
            check_opts.oracle = oracle_on(check_oracle);
            check_opts.budget = budget();
            nlohmann::json report;
            const int rc = check(check_opts, report);
            if (const int io = emit_json(report, check_json)) return io;
            if (rc == kExitFailure) std::cerr << "FALSIFICATION: a granted guarantee has no leaf-distance-4 spanning tree\n";
            if (rc == kExitDisconnected) std::cerr << "error: input graph is disconnected\n";
            return rc;
        }
        if (lemma_cmd->parsed()) {
            lemma_opts.kinds = parse_kind_list(lemma_kinds);
            nlohmann::json report;
            const int rc = verify_lemmas(lemma_opts, report);
            if (const int io = emit_json(report, lemma_json)) return io;
            return rc;
        }
        if (sweep_cmd->parsed()) {
            const auto dash = sweep_n.find('-');
            try {
                sweep_opts.n_min = std::stoi(sweep_n.substr(0, dash));
                sweep_opts.n_max = dash == std::string::npos ? sweep_opts.n_min : std::stoi(sweep_n.substr(dash + 1));
            } catch (const std::exception&) {
                throw InputError("--n expects an order or a range like 8-12");
            }
            sweep_opts.mode = sweep_mode == "exhaustive" ? SweepMode::Exhaustive
                              : sweep_mode == "random"   ? SweepMode::Random
                                                         : SweepMode::Auto;
            sweep_opts.theorems = parse_theorem_list(sweep_theorems);
            sweep_opts.oracle = oracle_on(sweep_oracle);
            sweep_opts.budget = budget();

            SweepSummary sum;
            if (sweep_csv) {
                std::ofstream out(*sweep_csv);
                if (!out) throw InputError("cannot write '" + *sweep_csv + "'");
                sum = sweep(sweep_opts, out);
            } else {
                sum = sweep(sweep_opts, std::cout);
            }
            if (sum.falsifications > 0) std::cerr << "FALSIFICATION: " << sum.falsifications << " graph(s)\n";
            if (sum.counterexamples > 0) std::cerr << "COUNTEREXAMPLE: " << sum.counterexamples << " graph(s)\n";
            return sum.exit_code();
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}
