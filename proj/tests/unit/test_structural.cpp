#include <doctest.h>

#include "leafspan/corpus.hpp"
#include "leafspan/extremal.hpp"
#include "leafspan/structural.hpp"
#include "support/oracles.hpp"

using namespace leafspan;

TEST_CASE("condition specs") {
    CHECK(ConditionSpec::leaf_degree(2).num == 3);
    CHECK(ConditionSpec::leaf_degree(2).den == 1);
    CHECK(ConditionSpec::leaf_distance(4).num == 2);
    CHECK(ConditionSpec::leaf_distance(4).den == 2);
    CHECK_THROWS(ConditionSpec::leaf_distance(2));
    CHECK_THROWS(ConditionSpec{0, 1}.validate());
}

TEST_CASE("isolated count") {
    CHECK(isolated_count(star(4), VertexSet::single(0)) == 4);
    CHECK(isolated_count(complete(6), VertexSet{0b1011}) == 0);
    for (int t = 1; t <= 4; ++t) {
        const int n = 2 * t + 3;
        CHECK(isolated_count(build_extremal({n, t}), canonical_partition({n, t}).classes().front()) == t);
    }
}

TEST_CASE("condition examples") {
    CHECK(check_condition(complete(5), {1, 1}).passed());
    const auto star_out = check_condition(star(4), {1, 1});
    REQUIRE(star_out.witness);
    CHECK(star_out.witness->removed == VertexSet::single(0));
    CHECK(star_out.witness->i_count == 4);
    CHECK(check_condition(cycle(5), {1, 1}).passed());
    CHECK(oracle::condition_holds(cycle(5), 1, 1));
    for (int t = 1; t <= 3; ++t) {
        const int n = 2 * t + 4;
        const auto out = check_condition(build_extremal({n, t}), {1, 1});
        REQUIRE(out.witness);
        CHECK(out.witness->i_count >= out.witness->s_count);
    }
    const auto h = check_condition(build_extremal({5, 1}), {1, 1});
    REQUIRE(h.witness);
    CHECK(h.witness->removed == VertexSet::single(0));
    CHECK(h.witness->i_count == 1);
    CHECK_THROWS_AS(check_condition(edgeless(3), {1, 1}), std::domain_error);
    CHECK_THROWS_AS(check_condition(complete(1), {1, 1}), std::domain_error);
}

TEST_CASE("property: witnesses replay and the reduction is sound") {
    const ConditionSpec specs[] = {{1, 1}, {2, 1}, {3, 1}, {2, 3}};
    for (int n = 2; n <= 6; ++n)
        for_each_connected_graph(n, [&](const Graph& g) {
            for (const auto& spec : specs) {
                const auto fast = check_condition(g, spec);
                const auto slow = check_condition(g, spec, SubsetSearch::AllSubsets);
                REQUIRE(fast.passed() == slow.passed());
                REQUIRE(fast.passed() == oracle::condition_holds(g, spec.num, spec.den));
                if (fast.witness) {
                    const auto& w = *fast.witness;
                    REQUIRE_FALSE(w.removed.empty());
                    REQUIRE(isolated_count(g, w.removed) == w.i_count);
                    REQUIRE(w.isolated.size() == w.i_count);
                    REQUIRE(w.removed.size() == w.s_count);
                    REQUIRE(spec.den * w.i_count >= spec.num * w.s_count);
                    for_each_vertex(w.isolated, [&](int v) { REQUIRE(g.neighbors(v).subset_of(w.removed)); });
                }
            }
        });
}
