#include "leafspan/structural.hpp"

#include <stdexcept>

namespace leafspan {

ConditionSpec ConditionSpec::leaf_degree(int k) {
    if (k < 1) throw std::invalid_argument("leaf degree bound k must be >= 1");
    return {k + 1, 1};
}

ConditionSpec ConditionSpec::leaf_distance(int d) {
    if (d < 3) throw std::invalid_argument("leaf distance condition needs d >= 3");
    return {2, d - 2};
}

void ConditionSpec::validate() const {
    if (num < 1 || den < 1) throw std::invalid_argument("condition ratio must be positive");
}

VertexSet isolated_vertices(const Graph& g, VertexSet s) {
    VertexSet out;
    for_each_vertex(g.vertices() - s, [&](int v) {
        if (g.neighbors(v).subset_of(s)) out.insert(v);
    });
    return out;
}

int isolated_count(const Graph& g, VertexSet s) { return isolated_vertices(g, s).size(); }

namespace {

std::optional<ViolationWitness> test_subset(const Graph& g, ConditionSpec spec, VertexSet s) {
    const VertexSet iso = isolated_vertices(g, s);
    if (static_cast<long>(spec.den) * iso.size() >= static_cast<long>(spec.num) * s.size()) {
        return ViolationWitness{s, iso, iso.size(), s.size()};
    }
    return std::nullopt;
}

// Visits independent sets in increasing bitmask order by deciding the highest
// vertex first (exclude before include).
class IndependentSetSearch {
public:
    IndependentSetSearch(const Graph& g, ConditionSpec spec) : g_(g), spec_(spec) {}

    std::optional<ViolationWitness> run() {
        descend(g_.order() - 1, VertexSet{}, VertexSet{});
        return found_;
    }

private:
    bool descend(int v, VertexSet chosen, VertexSet blocked) {
        if (v < 0) {
            if (chosen.empty()) return false;
            VertexSet s;
            for_each_vertex(chosen, [&](int u) { s = s | g_.neighbors(u); });
            found_ = test_subset(g_, spec_, s);
            return found_.has_value();
        }
        if (descend(v - 1, chosen, blocked)) return true;
        if (blocked.contains(v)) return false;
        VertexSet with = chosen;
        with.insert(v);
        return descend(v - 1, with, blocked | g_.neighbors(v));
    }

    const Graph& g_;
    ConditionSpec spec_;
    std::optional<ViolationWitness> found_;
};

}  // namespace

ConditionOutcome check_condition(const Graph& g, ConditionSpec spec, SubsetSearch search) {
    spec.validate();
    if (g.order() < 2) throw std::domain_error("condition check needs at least two vertices");
    if (!is_connected(g)) throw std::domain_error("condition check needs a connected graph");

    if (search == SubsetSearch::IndependentSets) return {IndependentSetSearch(g, spec).run()};

    if (g.order() > 24) throw std::invalid_argument("exhaustive subset search is limited to n <= 24");
    const std::uint64_t limit = std::uint64_t{1} << g.order();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        if (auto w = test_subset(g, spec, VertexSet{mask})) return {w};
    }
    return {};
}

}  // namespace leafspan
