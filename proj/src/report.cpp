#include "precompact/report.hpp"

namespace precompact {

Json element_to_json(const Vec& x) {
  Json out = Json::array();
  for (Int i = 0; i < x.size(); ++i) out.push_back(x[i]);
  return out;
}

Json subgroup_to_json(const Subgroup& h) {
  Json out = Json::array();
  for (const Vec& g : reduced_generators(h)) out.push_back(element_to_json(g));
  return out;
}

Json dual_subgroup_to_json(const DualSubgroup& s) { return subgroup_to_json(s.sub); }

Json classify_to_json(const ClassifyReport& rep) {
  Json verdicts;
  verdicts["hausdorff"] = rep.hausdorff;
  verdicts["sc"] = rep.sc;
  verdicts["totally_dense"] = rep.totally_dense;
  verdicts["simple"] = rep.simple;
  verdicts["essential"] = rep.essential;

  Json family = Json::array();
  for (const Subgroup& h : rep.closed_family) family.push_back(subgroup_to_json(h));

  Json witnesses;
  witnesses["hausdorff"] = rep.hausdorff_witness ? element_to_json(*rep.hausdorff_witness) : Json();
  witnesses["sc"] = rep.sc_witness ? subgroup_to_json(*rep.sc_witness) : Json();
  witnesses["totally_dense"] =
      rep.totally_dense_witness ? subgroup_to_json(*rep.totally_dense_witness) : Json();
  witnesses["simple"] = rep.simple_witness ? subgroup_to_json(*rep.simple_witness) : Json();
  witnesses["essential"] = rep.essential_witness ? subgroup_to_json(*rep.essential_witness) : Json();

  Json out;
  out["group"] = format_group(rep.group);
  out["s_generators"] = dual_subgroup_to_json(rep.s);
  out["verdicts"] = verdicts;
  out["kernel"] = subgroup_to_json(rep.kernel);
  out["closed_family"] = family;
  out["witnesses"] = witnesses;
  return out;
}

Json suite_to_json(const TheoremReport& rep) {
  Json out;
  out["id"] = rep.theorem_id;
  out["checked"] = rep.instances_checked;
  out["failures"] = static_cast<Int>(rep.failures.size());
  if (rep.failures.empty()) {
    out["witness"] = Json();
  } else {
    const SuiteFailure& f = rep.failures.front();
    Json w;
    w["group"] = f.group;
    w["H"] = f.h;
    w["S"] = f.s;
    w["detail"] = f.detail;
    out["witness"] = w;
  }
  return out;
}

Json report_envelope(const std::string& command, Json input, Json result, Json witness) {
  Json out;
  out["version"] = 1;
  out["command"] = command;
  out["input"] = std::move(input);
  out["result"] = std::move(result);
  out["witness"] = std::move(witness);
  return out;
}

std::string dump_json(const Json& j) { return j.dump() + "\n"; }

}  // namespace precompact
