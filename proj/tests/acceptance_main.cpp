// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "precompact/oracle.hpp"
#include "precompact/report.hpp"

using namespace precompact;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << " " << name << " ("
            << detail << ")\n";
  if (!pass) ++g_failures;
}

std::string suite_summary(const std::vector<TheoremReport>& reports, double seconds) {
  Int checked = 0, failures = 0;
  for (const TheoremReport& r : reports) {
    checked += r.instances_checked;
    failures += static_cast<Int>(r.failures.size());
  }
  std::ostringstream os;
  os << "checked=" << checked << " failures=" << failures << " time=" << static_cast<int>(seconds)
     << "s";
  return os.str();
}

bool run_suites(int criterion, const std::string& name, const std::vector<std::string>& ids,
                Int max_order, double time_limit = 0.0) {
  Timer timer;
  std::vector<TheoremReport> reports;
  bool pass = true;
  for (const std::string& id : ids) {
    reports.push_back(run_suite(id, max_order));
    if (!reports.back().pass()) pass = false;
  }
  double elapsed = timer.seconds();
  std::string detail = suite_summary(reports, elapsed);
  if (time_limit > 0.0 && elapsed > time_limit) {
    pass = false;
    detail += " exceeds limit";
  }
  for (const TheoremReport& r : reports)
    if (!r.pass()) detail += " | " + r.theorem_id + ": " + r.failures.front().detail;
  report(criterion, name, pass, detail);
  return pass;
}

// ---------------------------------------------------------------------------
// Criterion 9: the Z-model vignettes.

bool check_vignettes() {
  bool pass = true;
  // Torsion p^infinity: closed subgroups are exactly the p-power ones.
  for (Int p : {2, 3, 5}) {
    TorusSubgroupDesc s{SupernaturalNumber::make(0, {{p, SupernaturalNumber::kInfinity}}), 0};
    Int pk = 1;
    for (int j = 0; j <= 10; ++j) {
      if (!is_closed_int(s, IntSubgroup{pk})) pass = false;
      if (closure_int(s, IntSubgroup{pk}) != IntSubgroup{pk}) pass = false;
      pk *= p;
    }
    for (Int n = 1; n <= 1000; ++n) {
      Int reduced = n;
      while (reduced % p == 0) reduced /= p;
      bool p_power = reduced == 1;
      if (is_closed_int(s, IntSubgroup{n}) != p_power) pass = false;
    }
  }
  // Torsion-free descriptors: every proper kZ is dense.
  for (Int rank : {Int(0), Int(1), kContinuum}) {
    TorusSubgroupDesc s{SupernaturalNumber::one(), rank};
    for (Int k = 1; k <= 1000; ++k)
      if (!is_dense_int(s, IntSubgroup{k})) pass = false;
  }
  // All-infinite torsion: every kZ is closed.
  TorusSubgroupDesc all{SupernaturalNumber::all_primes_infinite(), 0};
  for (Int k = 0; k <= 1000; ++k)
    if (!is_closed_int(all, IntSubgroup{k})) pass = false;
  return pass;
}

// ---------------------------------------------------------------------------
// Criterion 12: CLI golden files and grammar round trips.

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
  CliResult res;
  std::string command = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return res;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) res.output.append(buffer, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

bool check_golden(const std::string& cli, const std::string& golden_dir, std::string& detail) {
  std::ifstream manifest(golden_dir + "/cases.tsv");
  if (!manifest) {
    detail = "missing manifest " + golden_dir + "/cases.tsv";
    return false;
  }
  int cases = 0;
  std::string line;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      detail = "malformed manifest line: " + line;
      return false;
    }
    std::string name = line.substr(0, t1);
    int expected_exit = std::stoi(line.substr(t1 + 1, t2 - t1 - 1));
    std::string args = line.substr(t2 + 1);

    std::ifstream golden(golden_dir + "/" + name + ".txt", std::ios::binary);
    if (!golden) {
      detail = "missing golden file for " + name;
      return false;
    }
    std::ostringstream expected;
    expected << golden.rdbuf();

    CliResult res = run_cli(cli, args);
    if (res.exit_code != expected_exit) {
      detail = name + ": exit " + std::to_string(res.exit_code) + " != " +
               std::to_string(expected_exit);
      return false;
    }
    if (res.output != expected.str()) {
      detail = name + ": output bytes differ";
      return false;
    }
    ++cases;
  }
  if (cases < 20) {
    detail = "only " + std::to_string(cases) + " golden cases";
    return false;
  }
  detail = std::to_string(cases) + " golden cases byte-identical";
  return true;
}

bool check_round_trips(std::string& detail) {
  std::mt19937 rng(424242);
  const std::vector<FiniteAbelianGroup> pool = groups_up_to_order(48);
  const std::vector<Int> primes = {2, 3, 5, 7, 11, 13};
  int done = 0;
  while (done < 1000) {
    const FiniteAbelianGroup& g = pool[rng() % pool.size()];
    if (format_group(parse_group(format_group(g))) != format_group(g)) {
      detail = "group spec drifts: " + format_group(g);
      return false;
    }
    ++done;
    std::vector<Vec> elems = all_elements(g);
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < 1 + rng() % 3; ++j) gens.push_back(elems[rng() % elems.size()]);
    Subgroup h = canonicalize_subgroup(g, gens);
    if (format_subgroup(parse_subgroup(format_subgroup(h), g)) != format_subgroup(h)) {
      detail = "subgroup spec drifts: " + format_subgroup(h);
      return false;
    }
    ++done;
    std::map<Int, Int> exps;
    Int def = (rng() % 4 == 0) ? SupernaturalNumber::kInfinity : 0;
    for (Int p : primes) {
      switch (rng() % 5) {
        case 0: break;
        case 1: exps[p] = SupernaturalNumber::kInfinity; break;
        default: exps[p] = static_cast<Int>(rng() % 4); break;
      }
    }
    TorusSubgroupDesc d{SupernaturalNumber::make(def, std::move(exps)),
                        (rng() % 3 == 0) ? kContinuum : static_cast<Int>(rng() % 4)};
    if (format_descriptor(parse_descriptor(format_descriptor(d))) != format_descriptor(d)) {
      detail = "descriptor spec drifts: " + format_descriptor(d);
      return false;
    }
    ++done;
    IntSubgroup k{static_cast<Int>(rng() % 1000)};
    if (format_int_subgroup(parse_int_subgroup(format_int_subgroup(k))) !=
        format_int_subgroup(k)) {
      detail = "integer subgroup spec drifts";
      return false;
    }
    ++done;
  }
  detail = std::to_string(done) + " canonical specs round-trip";
  return true;
}

bool check_exit_codes(const std::string& cli, std::string& detail) {
  struct Case {
    std::string args;
    int expected;
  };
  const std::vector<Case> cases = {
      {"is-closed --group 'Z(4)' --S 'gens=[2]' --H 'gens='", 0},
      {"--strict-exit is-closed --group 'Z(4)' --S 'gens=[2]' --H 'gens='", 1},
      {"closure --group 'Z(oops)' --S 'gens=' --H 'gens='", 2},
      {"family --group 'Z(512)' --S 'gens=[1]'", 3},
      {"verify --suite closure_formula --max-order 4096", 3},
  };
  for (const Case& c : cases) {
    CliResult res = run_cli(cli, c.args);
    if (res.exit_code != c.expected) {
      detail = "`" + c.args + "` exited " + std::to_string(res.exit_code) + ", expected " +
               std::to_string(c.expected);
      return false;
    }
  }
  detail += "; exit-code conventions hold";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli, golden_dir;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--cli") cli = argv[i + 1];
    if (flag == "--golden") golden_dir = argv[i + 1];
  }
  const Int order = 36;

  run_suites(1, "closure-formula-equivalence", {"closure_formula", "closure_corollary"}, order,
             300.0);
  run_suites(2, "density-triple-equivalence", {"density_criterion"}, order);
  run_suites(3, "duality-laws", {"lemma_2_1_isomorphisms", "annihilator_reflexivity"}, order);
  run_suites(4, "coset-closure-and-finite-index", {"coset_closure", "finite_index_converse"},
             order);
  run_suites(5, "same-family-criterion-and-greatest",
             {"same_family_criterion", "greatest_exists"}, order);
  run_suites(6, "sc-iff-totally-dense", {"sc_totally_dense", "bounded_order_bohr"}, order);
  run_suites(7, "simplicity-and-essential", {"simple_equivalences", "essential_no_dense"}, order);
  {
    Timer timer;
    TheoremReport rep = run_suite("zee_divisor_oracle", order);
    double elapsed = timer.seconds();
    bool pass = rep.pass() && elapsed <= 120.0;
    report(8, "z-model-divisor-oracle", pass,
           suite_summary({rep}, elapsed) + (elapsed > 120.0 ? " exceeds limit" : ""));
  }
  {
    Timer timer;
    bool pass = check_vignettes();
    report(9, "z-model-vignettes", pass,
           "p-power families, torsion-free density, all-infinity closedness; time=" +
               std::to_string(static_cast<int>(timer.seconds())) + "s");
  }
  run_suites(10, "lcm-machinery", {"zee_lcm_closure"}, order);
  run_suites(11, "torsion-determinism", {"zee_torsion_determinism"}, order);
  {
    bool pass = true;
    std::string detail;
    if (cli.empty() || golden_dir.empty()) {
      pass = false;
      detail = "missing --cli/--golden arguments";
    } else {
      pass = check_golden(cli, golden_dir, detail);
      std::string rt_detail;
      if (pass) {
        pass = check_round_trips(rt_detail);
        detail += "; " + rt_detail;
      }
      if (pass) pass = check_exit_codes(cli, detail);
    }
    report(12, "cli-golden-and-round-trip", pass, detail);
  }

  std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                : "ACCEPTANCE: " + std::to_string(g_failures) + " criteria failed\n");
  return g_failures == 0 ? 0 : 1;
}
