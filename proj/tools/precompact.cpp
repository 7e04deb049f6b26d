// Command-line front end: group/topology queries, the Z model, and the
// exhaustive verification suites. Output goes to stdout and is byte-stable
// across runs; diagnostics go to stderr.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "precompact/oracle.hpp"
#include "precompact/report.hpp"

namespace pc = precompact;

namespace {

struct Options {
  std::string output = "text";
  bool strict_exit = false;
  pc::Int bound = pc::kDefaultEnumerationBound;
};

pc::Int env_bound() {
  const char* raw = std::getenv("PD_MAX_ORDER");
  if (!raw) return pc::kDefaultEnumerationBound;
  char* end = nullptr;
  long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1)
    throw std::invalid_argument("PD_MAX_ORDER must be a positive integer");
  return static_cast<pc::Int>(v);
}

std::string yesno(bool b) { return b ? "true" : "false"; }

void emit(const Options& opt, const std::string& text, const pc::Json& json) {
  if (opt.output == "json")
    std::cout << pc::dump_json(json);
  else
    std::cout << text;
}

std::string subgroup_line(const pc::Subgroup& h) { return pc::format_subgroup(h); }
std::string dual_line(const pc::DualSubgroup& s) { return pc::format_dual_subgroup(s); }

// ---------------------------------------------------------------------------

int cmd_closure(const Options& opt, const std::string& group_spec, const std::string& s_spec,
                const std::string& h_spec) {
  pc::FiniteAbelianGroup g = pc::parse_group(group_spec);
  pc::DualSubgroup s = pc::parse_dual_subgroup(s_spec, g);
  pc::Subgroup h = pc::parse_subgroup(h_spec, g);
  pc::PrecompactTopology topo = pc::make_topology(g, s);
  pc::Subgroup cl = pc::closure(topo, h);
  bool closed = cl == h;

  std::string text;
  text += "command: closure\n";
  text += "group: " + pc::format_group(g) + "\n";
  text += "S: " + dual_line(s) + "\n";
  text += "H: " + subgroup_line(h) + "\n";
  text += "closure: " + subgroup_line(cl) + "\n";
  text += "closed: " + yesno(closed) + "\n";

  pc::Json input{{"group", pc::format_group(g)}, {"S", dual_line(s)}, {"H", subgroup_line(h)}};
  pc::Json result;
  result["closure"] = pc::subgroup_to_json(cl);
  result["closed"] = closed;
  emit(opt, text, pc::report_envelope("closure", input, result, pc::Json()));
  return 0;
}

int cmd_is_closed(const Options& opt, const std::string& group_spec, const std::string& s_spec,
                  const std::string& h_spec) {
  pc::FiniteAbelianGroup g = pc::parse_group(group_spec);
  pc::DualSubgroup s = pc::parse_dual_subgroup(s_spec, g);
  pc::Subgroup h = pc::parse_subgroup(h_spec, g);
  pc::PrecompactTopology topo = pc::make_topology(g, s);
  bool value = pc::is_closed(topo, h);
  std::optional<pc::Vec> witness = value ? std::nullopt : pc::non_closed_witness(topo, h);

  std::string text;
  text += "command: is-closed\n";
  text += "group: " + pc::format_group(g) + "\n";
  text += "S: " + dual_line(s) + "\n";
  text += "H: " + subgroup_line(h) + "\n";
  text += "value: " + yesno(value) + "\n";
  text += "witness: " + (witness ? pc::format_element(*witness) : "none") + "\n";

  pc::Json input{{"group", pc::format_group(g)}, {"S", dual_line(s)}, {"H", subgroup_line(h)}};
  pc::Json result;
  result["value"] = value;
  pc::Json jwitness;
  if (witness) jwitness = pc::Json{{"element", pc::element_to_json(*witness)}};
  emit(opt, text, pc::report_envelope("is-closed", input, result, jwitness));
  return (opt.strict_exit && !value) ? 1 : 0;
}

int cmd_is_dense(const Options& opt, const std::string& group_spec, const std::string& s_spec,
                 const std::string& h_spec) {
  pc::FiniteAbelianGroup g = pc::parse_group(group_spec);
  pc::DualSubgroup s = pc::parse_dual_subgroup(s_spec, g);
  pc::Subgroup h = pc::parse_subgroup(h_spec, g);
  pc::PrecompactTopology topo = pc::make_topology(g, s);
  bool value = pc::is_dense(topo, h);
  std::optional<pc::Vec> witness = value ? std::nullopt : pc::non_dense_witness(topo, h);

  std::string text;
  text += "command: is-dense\n";
  text += "group: " + pc::format_group(g) + "\n";
  text += "S: " + dual_line(s) + "\n";
  text += "H: " + subgroup_line(h) + "\n";
  text += "value: " + yesno(value) + "\n";
  text += "witness: " + (witness ? pc::format_element(*witness) : "none") + "\n";

  pc::Json input{{"group", pc::format_group(g)}, {"S", dual_line(s)}, {"H", subgroup_line(h)}};
  pc::Json result;
  result["value"] = value;
  pc::Json jwitness;
  if (witness) jwitness = pc::Json{{"character", pc::element_to_json(*witness)}};
  emit(opt, text, pc::report_envelope("is-dense", input, result, jwitness));
  return (opt.strict_exit && !value) ? 1 : 0;
}

int cmd_family(const Options& opt, const std::string& group_spec, const std::string& s_spec) {
  pc::FiniteAbelianGroup g = pc::parse_group(group_spec);
  pc::DualSubgroup s = pc::parse_dual_subgroup(s_spec, g);
  pc::PrecompactTopology topo = pc::make_topology(g, s);
  std::vector<pc::Subgroup> family = pc::closed_family(topo, opt.bound);

  std::string text;
  text += "command: family\n";
  text += "group: " + pc::format_group(g) + "\n";
  text += "S: " + dual_line(s) + "\n";
  text += "kernel: " + subgroup_line(topo.kernel) + "\n";
  text += "closed_family:\n";
  pc::Json jfamily = pc::Json::array();
  for (const pc::Subgroup& h : family) {
    text += "  - " + subgroup_line(h) + "\n";
    jfamily.push_back(pc::subgroup_to_json(h));
  }

  pc::Json input{{"group", pc::format_group(g)}, {"S", dual_line(s)}};
  pc::Json result;
  result["kernel"] = pc::subgroup_to_json(topo.kernel);
  result["closed_family"] = jfamily;
  emit(opt, text, pc::report_envelope("family", input, result, pc::Json()));
  return 0;
}

int cmd_same_family(const Options& opt, const std::string& group_spec, const std::string& s1_spec,
                    const std::string& s2_spec) {
  pc::FiniteAbelianGroup g = pc::parse_group(group_spec);
  pc::DualSubgroup s1 = pc::parse_dual_subgroup(s1_spec, g);
  pc::DualSubgroup s2 = pc::parse_dual_subgroup(s2_spec, g);
  pc::SameFamilyResult res = pc::same_closed_family(pc::make_topology(g, s1),
                                                    pc::make_topology(g, s2), opt.bound);

  std::string text;
  text += "command: same-family\n";
  text += "group: " + pc::format_group(g) + "\n";
  text += "S1: " + dual_line(s1) + "\n";
  text += "S2: " + dual_line(s2) + "\n";
  text += "value: " + yesno(res.same) + "\n";
  text += "witness_subgroup: " +
          (res.witness_subgroup ? subgroup_line(*res.witness_subgroup) : "none") + "\n";
  text += "witness_dual: " +
          (res.witness_dual ? "dual:" + subgroup_line(*res.witness_dual) : "none") + "\n";

  pc::Json input{{"group", pc::format_group(g)}, {"S1", dual_line(s1)}, {"S2", dual_line(s2)}};
  pc::Json result;
  result["value"] = res.same;
  pc::Json jwitness;
  if (res.witness_subgroup || res.witness_dual) {
    if (res.witness_subgroup) jwitness["subgroup"] = pc::subgroup_to_json(*res.witness_subgroup);
    if (res.witness_dual) jwitness["dual_subgroup"] = pc::subgroup_to_json(*res.witness_dual);
  }
  emit(opt, text, pc::report_envelope("same-family", input, result, jwitness));
  return (opt.strict_exit && !res.same) ? 1 : 0;
}

int cmd_greatest(const Options& opt, const std::string& group_spec, const std::string& s_spec) {
  pc::FiniteAbelianGroup g = pc::parse_group(group_spec);
  pc::DualSubgroup s = pc::parse_dual_subgroup(s_spec, g);
  pc::DualSubgroup greatest = pc::greatest_same_family(pc::make_topology(g, s), opt.bound);

  std::string text;
  text += "command: greatest\n";
  text += "group: " + pc::format_group(g) + "\n";
  text += "S: " + dual_line(s) + "\n";
  text += "greatest: " + dual_line(greatest) + "\n";

  pc::Json input{{"group", pc::format_group(g)}, {"S", dual_line(s)}};
  pc::Json result;
  result["greatest"] = pc::dual_subgroup_to_json(greatest);
  emit(opt, text, pc::report_envelope("greatest", input, result, pc::Json()));
  return 0;
}

int cmd_minimals(const Options& opt, const std::string& group_spec, const std::string& s_spec) {
  pc::FiniteAbelianGroup g = pc::parse_group(group_spec);
  pc::DualSubgroup s = pc::parse_dual_subgroup(s_spec, g);
  std::vector<pc::DualSubgroup> minimals =
      pc::minimal_same_family(pc::make_topology(g, s), opt.bound);

  std::string text;
  text += "command: minimals\n";
  text += "group: " + pc::format_group(g) + "\n";
  text += "S: " + dual_line(s) + "\n";
  text += "minimals:\n";
  pc::Json jmin = pc::Json::array();
  for (const pc::DualSubgroup& m : minimals) {
    text += "  - " + dual_line(m) + "\n";
    jmin.push_back(pc::dual_subgroup_to_json(m));
  }

  pc::Json input{{"group", pc::format_group(g)}, {"S", dual_line(s)}};
  pc::Json result;
  result["minimals"] = jmin;
  emit(opt, text, pc::report_envelope("minimals", input, result, pc::Json()));
  return 0;
}

int cmd_classify(const Options& opt, const std::string& group_spec, const std::string& s_spec) {
  pc::FiniteAbelianGroup g = pc::parse_group(group_spec);
  pc::DualSubgroup s = pc::parse_dual_subgroup(s_spec, g);
  pc::ClassifyReport rep = pc::classify(pc::make_topology(g, s), opt.bound);

  std::string text;
  text += "command: classify\n";
  text += "group: " + pc::format_group(g) + "\n";
  text += "S: " + dual_line(s) + "\n";
  text += "verdicts:\n";
  text += "  hausdorff: " + yesno(rep.hausdorff) + "\n";
  text += "  sc: " + yesno(rep.sc) + "\n";
  text += "  totally_dense: " + yesno(rep.totally_dense) + "\n";
  text += "  simple: " + yesno(rep.simple) + "\n";
  text += "  essential: " + yesno(rep.essential) + "\n";
  text += "kernel: " + subgroup_line(rep.kernel) + "\n";
  text += "closed_family:\n";
  for (const pc::Subgroup& h : rep.closed_family) text += "  - " + subgroup_line(h) + "\n";
  text += "witnesses:\n";
  text += "  hausdorff: " +
          (rep.hausdorff_witness ? pc::format_element(*rep.hausdorff_witness) : "none") + "\n";
  text += "  sc: " + (rep.sc_witness ? subgroup_line(*rep.sc_witness) : "none") + "\n";
  text += "  totally_dense: " +
          (rep.totally_dense_witness ? "dual:" + subgroup_line(*rep.totally_dense_witness) : "none") +
          "\n";
  text += "  simple: " + (rep.simple_witness ? subgroup_line(*rep.simple_witness) : "none") + "\n";
  text += "  essential: " +
          (rep.essential_witness ? "dual:" + subgroup_line(*rep.essential_witness) : "none") + "\n";

  pc::Json input{{"group", pc::format_group(g)}, {"S", dual_line(s)}};
  emit(opt, text, pc::report_envelope("classify", input, pc::classify_to_json(rep), pc::Json()));
  return 0;
}

int cmd_z_closure(const Options& opt, const std::string& s_spec, pc::Int k) {
  pc::TorusSubgroupDesc s = pc::parse_descriptor(s_spec);
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  pc::IntSubgroup h{k};
  pc::IntSubgroup cl = pc::closure_int(s, h);
  bool closed = pc::is_closed_int(s, h);

  std::string text;
  text += "command: z-closure\n";
  text += "S: " + pc::format_descriptor(s) + "\n";
  text += "k: " + std::to_string(k) + "\n";
  text += "closure: " + pc::format_int_subgroup(cl) + "\n";
  text += "closed: " + yesno(closed) + "\n";

  pc::Json input{{"S", pc::format_descriptor(s)}, {"k", k}};
  pc::Json result;
  result["closure"] = pc::format_int_subgroup(cl);
  result["closed"] = closed;
  emit(opt, text, pc::report_envelope("z-closure", input, result, pc::Json()));
  return 0;
}

int cmd_z_classify(const Options& opt, const std::string& s_spec) {
  pc::TorusSubgroupDesc s = pc::parse_descriptor(s_spec);
  pc::ZClassification c = pc::classify_int(s);

  std::string text;
  text += "command: z-classify\n";
  text += "S: " + pc::format_descriptor(s) + "\n";
  text += "hausdorff: " + yesno(c.hausdorff) + "\n";
  text += "sc: " + yesno(c.sc) + "\n";
  text += "topologically_simple: " + yesno(c.topologically_simple) + "\n";
  text += "has_nontrivial_closed: " + yesno(c.has_nontrivial_closed) + "\n";
  text += "family_descriptor: " + pc::format_supernatural(c.family_descriptor) + "\n";

  pc::Json input{{"S", pc::format_descriptor(s)}};
  pc::Json result;
  result["hausdorff"] = c.hausdorff;
  result["sc"] = c.sc;
  result["topologically_simple"] = c.topologically_simple;
  result["has_nontrivial_closed"] = c.has_nontrivial_closed;
  result["family_descriptor"] = pc::format_supernatural(c.family_descriptor);
  emit(opt, text, pc::report_envelope("z-classify", input, result, pc::Json()));
  return 0;
}

int cmd_z_extremal(const Options& opt, const std::string& s_spec, bool greatest) {
  pc::TorusSubgroupDesc s = pc::parse_descriptor(s_spec);
  pc::TorusSubgroupDesc out = greatest ? pc::M_s(s) : pc::m_s(s);
  const std::string command = greatest ? "z-MS" : "z-ms";

  std::string text;
  text += "command: " + command + "\n";
  text += "S: " + pc::format_descriptor(s) + "\n";
  text += "descriptor: " + pc::format_descriptor(out) + "\n";
  text += "hausdorff: " + yesno(pc::descriptor_hausdorff(out)) + "\n";

  pc::Json input{{"S", pc::format_descriptor(s)}};
  pc::Json result;
  result["descriptor"] = pc::format_descriptor(out);
  result["hausdorff"] = pc::descriptor_hausdorff(out);
  emit(opt, text, pc::report_envelope(command, input, result, pc::Json()));
  return 0;
}

int cmd_verify(const Options& opt, const std::string& suite, pc::Int max_order, int jobs) {
  std::vector<std::string> ids;
  if (suite == "all") {
    ids = pc::suite_ids();
  } else {
    ids.push_back(suite);
  }

  std::string text;
  text += "command: verify\n";
  text += "max_order: " + std::to_string(max_order) + "\n";
  pc::Json jsuites = pc::Json::array();
  pc::Int total_failures = 0;
  for (const std::string& id : ids) {
    pc::TheoremReport rep = pc::run_suite(id, max_order, jobs);
    text += pc::format_report(rep);
    jsuites.push_back(pc::suite_to_json(rep));
    total_failures += static_cast<pc::Int>(rep.failures.size());
  }
  text += "OVERALL FAILURES " + std::to_string(total_failures) + "\n";

  pc::Json input{{"suite", suite}, {"max_order", max_order}};
  pc::Json result;
  result["suites"] = jsuites;
  result["total_failures"] = total_failures;
  emit(opt, text, pc::report_envelope("verify", input, result, pc::Json()));
  return (opt.strict_exit && total_failures > 0) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for precompact topologies on finite abelian groups and Z"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--output", opt.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--strict-exit", opt.strict_exit,
               "Exit 1 when a boolean query evaluates to false");

  std::string group_spec, s_spec, s2_spec, h_spec, suite = "all";
  pc::Int k = 0;
  pc::Int max_order = 36;
  int jobs = 1;

  CLI::App* c_closure = app.add_subcommand("closure", "Topological closure of H in (G, tau_S)");
  c_closure->add_option("--group", group_spec)->required();
  c_closure->add_option("--S", s_spec)->required();
  c_closure->add_option("--H", h_spec)->required();

  CLI::App* c_is_closed = app.add_subcommand("is-closed", "Whether H is tau_S-closed");
  c_is_closed->add_option("--group", group_spec)->required();
  c_is_closed->add_option("--S", s_spec)->required();
  c_is_closed->add_option("--H", h_spec)->required();

  CLI::App* c_is_dense = app.add_subcommand("is-dense", "Whether H is tau_S-dense");
  c_is_dense->add_option("--group", group_spec)->required();
  c_is_dense->add_option("--S", s_spec)->required();
  c_is_dense->add_option("--H", h_spec)->required();

  CLI::App* c_family = app.add_subcommand("family", "All tau_S-closed subgroups");
  c_family->add_option("--group", group_spec)->required();
  c_family->add_option("--S", s_spec)->required();

  CLI::App* c_same = app.add_subcommand("same-family", "Whether two topologies close the same subgroups");
  c_same->add_option("--group", group_spec)->required();
  c_same->add_option("--S", s_spec)->required();
  c_same->add_option("--S2", s2_spec)->required();

  CLI::App* c_greatest = app.add_subcommand("greatest", "Greatest dual subgroup with the same closed family");
  c_greatest->add_option("--group", group_spec)->required();
  c_greatest->add_option("--S", s_spec)->required();

  CLI::App* c_minimals = app.add_subcommand("minimals", "Minimal dual subgroups with the same closed family");
  c_minimals->add_option("--group", group_spec)->required();
  c_minimals->add_option("--S", s_spec)->required();

  CLI::App* c_classify = app.add_subcommand("classify", "Full topological classification of tau_S");
  c_classify->add_option("--group", group_spec)->required();
  c_classify->add_option("--S", s_spec)->required();

  CLI::App* c_zclosure = app.add_subcommand("z-closure", "Closure of kZ in the described topology on Z");
  c_zclosure->add_option("--S", s_spec)->required();
  c_zclosure->add_option("--k", k)->required();

  CLI::App* c_zclassify = app.add_subcommand("z-classify", "Classification of a topology on Z");
  c_zclassify->add_option("--S", s_spec)->required();

  CLI::App* c_zms = app.add_subcommand("z-ms", "Smallest subgroup with the same closed family on Z");
  c_zms->add_option("--S", s_spec)->required();

  CLI::App* c_zMS = app.add_subcommand("z-MS", "Greatest subgroup with the same closed family on Z");
  c_zMS->add_option("--S", s_spec)->required();

  CLI::App* c_verify = app.add_subcommand("verify", "Run exhaustive theorem suites");
  c_verify->add_option("--suite", suite, "Suite id or 'all'")->capture_default_str();
  c_verify->add_option("--max-order", max_order, "Largest group order in the corpus")
      ->capture_default_str();
  c_verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    opt.bound = env_bound();
    if (c_closure->parsed()) return cmd_closure(opt, group_spec, s_spec, h_spec);
    if (c_is_closed->parsed()) return cmd_is_closed(opt, group_spec, s_spec, h_spec);
    if (c_is_dense->parsed()) return cmd_is_dense(opt, group_spec, s_spec, h_spec);
    if (c_family->parsed()) return cmd_family(opt, group_spec, s_spec);
    if (c_same->parsed()) return cmd_same_family(opt, group_spec, s_spec, s2_spec);
    if (c_greatest->parsed()) return cmd_greatest(opt, group_spec, s_spec);
    if (c_minimals->parsed()) return cmd_minimals(opt, group_spec, s_spec);
    if (c_classify->parsed()) return cmd_classify(opt, group_spec, s_spec);
    if (c_zclosure->parsed()) return cmd_z_closure(opt, s_spec, k);
    if (c_zclassify->parsed()) return cmd_z_classify(opt, s_spec);
    if (c_zms->parsed()) return cmd_z_extremal(opt, s_spec, false);
    if (c_zMS->parsed()) return cmd_z_extremal(opt, s_spec, true);
    if (c_verify->parsed()) {
      if (max_order > opt.bound) throw pc::CapacityError(max_order, opt.bound);
      return cmd_verify(opt, suite, max_order, jobs);
    }
  } catch (const pc::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const pc::ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
