#include <doctest.h>

#include "leafspan/extremal.hpp"
#include "leafspan/report.hpp"

using namespace leafspan;

TEST_CASE("tree certificate json") {
    const TreeCert p = hamilton_path_extremal({5, 1});
    const auto j = to_json(p);
    CHECK(j.at("leaf_distance") == 4);
    CHECK(j.at("leaf_degree") == 1);
    CHECK(tree_from_json(j).parent == p.parent);
    const auto single = to_json(make_tree_cert({kNoParent}));
    CHECK(single.at("leaf_distance") == "inf");
    CHECK(tree_from_json(single).leaf_distance == kInfiniteLeafDistance);
    auto bad = j;
    bad["leaf_distance"] = 3;
    CHECK_THROWS(tree_from_json(bad));
}

TEST_CASE("verdict json uses the fixed field names") {
    const auto j = to_json(evaluate(build_extremal({8, 1}), 1, TheoremId::AdjacencyRadius));
    for (const char* key : {"theorem", "t", "n", "order_ok", "connected", "delta_ok", "condition_value", "threshold",
                            "margin", "guarantee", "oracle_confirmed", "direction"})
        CHECK(j.contains(key));
    CHECK(j.at("theorem") == "adjacency");
    CHECK(j.at("direction") == "at_least");
    CHECK(j.at("oracle_confirmed").is_null());
}

TEST_CASE("witness json") {
    const auto j = to_json(ViolationWitness{VertexSet{0b1}, VertexSet{0b11110}, 4, 1});
    CHECK(j.at("S") == nlohmann::json::array({0}));
    CHECK(j.at("isolated") == nlohmann::json::array({1, 2, 3, 4}));
    CHECK(j.at("i_count") == 4);
}
