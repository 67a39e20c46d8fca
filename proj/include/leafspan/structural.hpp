#pragma once

#include <optional>

#include "leafspan/graph.hpp"

namespace leafspan {

/// The isolated-vertex condition  den * i(G - S) < num * |S|  for every
/// nonempty S.
struct ConditionSpec {
    int num = 1;
    int den = 1;

    /// Leaf degree at most k: i(G - S) < (k + 1)|S|.
    static ConditionSpec leaf_degree(int k);
    /// Leaf distance at least d (d >= 3): i(G - S) < 2|S| / (d - 2).
    static ConditionSpec leaf_distance(int d);

    void validate() const;
};

struct ViolationWitness {
    VertexSet removed;   // S
    VertexSet isolated;  // isolated vertices of G - S
    int i_count = 0;
    int s_count = 0;
};

/// Number of vertices outside s whose neighbourhood lies inside s.
int isolated_count(const Graph& g, VertexSet s);
VertexSet isolated_vertices(const Graph& g, VertexSet s);

enum class SubsetSearch {
    /// S = N(I) over independent sets I, in increasing bitmask order.
    IndependentSets,
    /// Every nonempty S in increasing bitmask order (n <= 24).
    AllSubsets,
};

/// Empty optional when the condition holds.
struct ConditionOutcome {
    std::optional<ViolationWitness> witness;
    bool passed() const { return !witness.has_value(); }
};

/// Requires a connected graph with n >= 2 (std::domain_error otherwise).
ConditionOutcome check_condition(const Graph& g, ConditionSpec spec,
                                 SubsetSearch search = SubsetSearch::IndependentSets);

}  // namespace leafspan
