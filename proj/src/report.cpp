#include "leafspan/report.hpp"

#include <stdexcept>

namespace leafspan {

using nlohmann::json;

json to_json(const TreeCert& tree) {
    json j;
    j["parent"] = tree.parent;
    if (tree.leaf_distance == kInfiniteLeafDistance) {
        j["leaf_distance"] = "inf";
    } else {
        j["leaf_distance"] = tree.leaf_distance;
    }
    j["leaf_degree"] = tree.leaf_degree;
    return j;
}

TreeCert tree_from_json(const json& j) {
    TreeCert tree = make_tree_cert(j.at("parent").get<std::vector<int>>());
    const auto& ld = j.at("leaf_distance");
    const int stated = ld.is_string() && ld.get<std::string>() == "inf" ? kInfiniteLeafDistance : ld.get<int>();
    if (stated != tree.leaf_distance || j.at("leaf_degree").get<int>() != tree.leaf_degree) {
        throw std::invalid_argument("tree certificate metrics do not match its parent array");
    }
    return tree;
}

namespace {

template <typename T>
json optional_json(const std::optional<T>& x) {
    return x ? json(*x) : json(nullptr);
}

json vertex_list(VertexSet s) { return s.members(); }

}  // namespace

json to_json(const Verdict& v) {
    return json{
        {"theorem", std::string(to_string(v.theorem))},
        {"t", v.t},
        {"n", v.n},
        {"order_ok", v.order_ok},
        {"connected", v.connected},
        {"delta_ok", v.delta_ok},
        {"direction", std::string(to_string(v.direction))},
        {"condition_value", v.condition_value},
        {"threshold", optional_json(v.threshold)},
        {"margin", optional_json(v.margin)},
        {"condition_ok", v.condition_ok},
        {"equality_case", v.equality_case},
        {"hypotheses_met", v.hypotheses_met},
        {"guarantee", v.guarantee},
        {"oracle_confirmed", optional_json(v.oracle_confirmed)},
    };
}

json to_json(const ViolationWitness& w) {
    return json{{"S", vertex_list(w.removed)},
                {"isolated", vertex_list(w.isolated)},
                {"i_count", w.i_count},
                {"s_count", w.s_count}};
}

json to_json(const BoundCheck& b) {
    return json{{"name", b.name},     {"applicable", b.applicable}, {"radius", b.radius}, {"lower", b.lower},
                {"upper", optional_json(b.upper)}, {"holds", b.holds}, {"margin", b.margin}};
}

json to_json(const LemmaSuiteReport& r) {
    json rel = json::array();
    for (const auto& m : r.relations) {
        rel.push_back({{"name", m.name},
                       {"statement", m.statement},
                       {"trials", m.trials},
                       {"violations", m.violations},
                       {"min_margin", m.min_margin}});
    }
    return json{{"seed", r.seed}, {"trials", r.trials}, {"passed", r.passed()}, {"relations", rel}};
}

}  // namespace leafspan
