#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "leafspan/extremal.hpp"
#include "leafspan/graph.hpp"

namespace leafspan {

/// Leaf distance of a tree with fewer than two leaves (the single vertex).
inline constexpr int kInfiniteLeafDistance = std::numeric_limits<int>::max();
inline constexpr int kNoParent = -1;
inline constexpr std::uint64_t kDefaultBranchBudget = 100'000'000;

/// Spanning tree as a parent array (exactly one root, marked kNoParent),
/// with its metrics computed at construction.
struct TreeCert {
    std::vector<int> parent;
    int leaf_distance = kInfiniteLeafDistance;
    int leaf_degree = 0;

    int order() const { return static_cast<int>(parent.size()); }
    std::vector<Edge> edges() const;
};

/// Validates the parent array (single root, acyclic, in range) and fills in
/// the metrics. Throws std::invalid_argument.
TreeCert make_tree_cert(std::vector<int> parent);
/// Builds a certificate for the path visiting `order` in sequence.
TreeCert path_cert(const std::vector<int>& order);

/// Minimum tree distance between two leaves; kInfiniteLeafDistance for n = 1.
int leaf_distance(const TreeCert& tree);
/// Maximum over vertices of the number of adjacent leaves.
int leaf_degree(const TreeCert& tree);

/// True when every tree edge is an edge of g and the orders agree.
bool is_spanning_tree_of(const TreeCert& tree, const Graph& g);

enum class SearchStatus { Found, None, Inconclusive };
std::string to_string(SearchStatus status);

struct TreeSearchResult {
    SearchStatus status = SearchStatus::None;
    std::optional<TreeCert> tree;
    std::uint64_t nodes = 0;
};

/// LEAFSPAN_BUDGET when set to a positive integer, else kDefaultBranchBudget.
std::uint64_t default_branch_budget();

/// Exhaustive search for a spanning tree whose leaf distance is at least d.
/// Requires g connected and n >= 2. Deterministic.
TreeSearchResult find_spanning_tree_leaf_distance(const Graph& g, int d,
                                                  std::uint64_t budget = default_branch_budget());
/// Exhaustive search for a spanning tree whose leaf degree is at most k.
TreeSearchResult find_spanning_tree_leaf_degree(const Graph& g, int k,
                                                std::uint64_t budget = default_branch_budget());

/// The Hamilton path u1 s1 u2 s2 ... ut st w1 ... w_{n-2t} of H(n, t), where
/// u are the isolated-class vertices, s the K_t class and w the K_{n-2t}
/// class. Requires n >= max(5, 2t).
TreeCert hamilton_path_extremal(ExtremalParams params);

}  // namespace leafspan
