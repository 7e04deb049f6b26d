#pragma once

#include <optional>
#include <string>
#include <vector>

#include "precompact/topology.hpp"
#include "precompact/zee.hpp"

namespace precompact {

// Definition-level brute force. Everything here works by enumerating elements
// and evaluating characters; none of it reuses the annihilator solver or the
// closure formula it is used to check.

/// {g : phi(g) = 0 for every phi in S killing H}, by full scan.
Subgroup closure_by_definition(const PrecompactTopology& topo, const Subgroup& h,
                               Int bound = kDefaultEnumerationBound);

/// Every phi in S maps H onto the same image as G, by full image enumeration.
bool dense_by_definition(const PrecompactTopology& topo, const Subgroup& h,
                         Int bound = kDefaultEnumerationBound);

struct SuiteFailure {
  std::string group;
  std::string h;
  std::string s;
  std::string detail;
};

struct TheoremReport {
  std::string theorem_id;
  Int instances_checked = 0;
  std::vector<SuiteFailure> failures;  // first counterexample in canonical order only

  bool pass() const { return failures.empty(); }
};

/// Identifiers of the exhaustive suites, in canonical order.
const std::vector<std::string>& suite_ids();

/// Runs one suite over every invariant-factor group of order <= max_order
/// (or, for the zee_* suites, over the fixed descriptor grids). Groups may be
/// processed in parallel; reports merge in canonical order, so the output is
/// independent of the worker count.
TheoremReport run_suite(const std::string& theorem_id, Int max_order, int jobs = 1);

/// Line-oriented rendering: `SUITE <id> CHECKED <n> FAILURES <m>` plus one
/// indented witness block per failure.
std::string format_report(const TheoremReport& report);

}  // namespace precompact
