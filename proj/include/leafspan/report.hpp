#pragma once

#include <json.hpp>

#include "leafspan/extremal.hpp"
#include "leafspan/structural.hpp"
#include "leafspan/trees.hpp"
#include "leafspan/verify.hpp"

namespace leafspan {

/// {"parent": [...], "leaf_distance": int | "inf", "leaf_degree": int}
nlohmann::json to_json(const TreeCert& tree);
/// Inverse of to_json(TreeCert); metrics are recomputed and must match.
TreeCert tree_from_json(const nlohmann::json& j);

/// Fixed fields: theorem, t, n, order_ok, connected, delta_ok,
/// condition_value, threshold, margin, guarantee, oracle_confirmed; plus
/// direction, condition_ok, equality_case, hypotheses_met. Absent optional
/// values serialise as null.
nlohmann::json to_json(const Verdict& v);

nlohmann::json to_json(const ViolationWitness& w);
nlohmann::json to_json(const BoundCheck& b);
nlohmann::json to_json(const LemmaSuiteReport& r);

}  // namespace leafspan
