#pragma once

#include <json.hpp>

#include "precompact/oracle.hpp"
#include "precompact/topology.hpp"
#include "precompact/zee.hpp"

namespace precompact {

// Fixed JSON shapes: integers stay exact, subgroups serialize as sorted
// generator lists, supernaturals as their grammar strings. ordered_json keeps
// the field order stable so identical invocations emit identical bytes.
using Json = nlohmann::ordered_json;

Json element_to_json(const Vec& x);
Json subgroup_to_json(const Subgroup& h);
Json dual_subgroup_to_json(const DualSubgroup& s);
Json classify_to_json(const ClassifyReport& rep);
Json suite_to_json(const TheoremReport& rep);

/// {"version":1,"command":...,"input":...,"result":...,"witness":...}
Json report_envelope(const std::string& command, Json input, Json result, Json witness);

/// Compact single-line dump with trailing newline.
std::string dump_json(const Json& j);

}  // namespace precompact
