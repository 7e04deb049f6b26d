#include <doctest.h>

#include "precompact/oracle.hpp"

using namespace precompact;

namespace {

Vec make_vec(std::initializer_list<Int> vals) {
  Vec v(static_cast<Int>(vals.size()));
  Int i = 0;
  for (Int x : vals) v[i++] = x;
  return v;
}

PrecompactTopology topo_of(const std::string& group, const std::string& s) {
  FiniteAbelianGroup g = parse_group(group);
  return make_topology(g, parse_dual_subgroup(s, g));
}

}  // namespace

TEST_CASE("definitional closure examples") {
  PrecompactTopology t = topo_of("Z(4)", "gens=[2]");
  Subgroup two = canonicalize_subgroup(t.group, {make_vec({2})});
  CHECK(closure_by_definition(t, trivial_subgroup(t.group)) == two);

  PrecompactTopology bohr = topo_of("Z(4)", "gens=[1]");
  for (const Subgroup& h : enumerate_subgroups(bohr.group))
    CHECK(closure_by_definition(bohr, h) == h);

  PrecompactTopology anti = topo_of("Z(4)", "gens=");
  for (const Subgroup& h : enumerate_subgroups(anti.group))
    CHECK(closure_by_definition(anti, h) == full_subgroup(anti.group));
}

TEST_CASE("definitional density examples") {
  PrecompactTopology anti = topo_of("Z(4)", "gens=");
  CHECK(dense_by_definition(anti, trivial_subgroup(anti.group)));

  PrecompactTopology bohr = topo_of("Z(4)", "gens=[1]");
  Subgroup two = canonicalize_subgroup(bohr.group, {make_vec({2})});
  CHECK(!dense_by_definition(bohr, two));
  CHECK(dense_by_definition(bohr, full_subgroup(bohr.group)));
}

TEST_CASE("capacity guard") {
  PrecompactTopology t = topo_of("Z(4)", "gens=[1]");
  CHECK_THROWS_AS(closure_by_definition(t, trivial_subgroup(t.group), 2), CapacityError);
  CHECK_THROWS_AS(run_suite("closure_formula", 512), CapacityError);
  CHECK_THROWS_AS(run_suite("made_up_suite", 8), std::invalid_argument);
}

TEST_CASE("suite identifiers are stable") {
  const std::vector<std::string>& ids = suite_ids();
  CHECK(ids.size() == 18);
  CHECK(ids.front() == "closure_formula");
  CHECK(ids.back() == "zee_torsion_determinism");
}

TEST_CASE("closure suite instance count advertises the corpus") {
  TheoremReport rep = run_suite("closure_formula", 12);
  CHECK(rep.pass());
  Int expected = 0;
  for (const FiniteAbelianGroup& g : groups_up_to_order(12)) {
    Int subs = static_cast<Int>(enumerate_subgroups(g).size());
    expected += subs * subs;
  }
  CHECK(rep.instances_checked == expected);
  CHECK(format_report(rep) ==
        "SUITE closure_formula CHECKED " + std::to_string(expected) + " FAILURES 0\n");
}

TEST_CASE("trivial-group corpus") {
  TheoremReport rep = run_suite("annihilator_reflexivity", 1);
  CHECK(rep.pass());
  CHECK(rep.instances_checked == 2);  // one subgroup side, one dual side
}

TEST_CASE("every group suite passes at order 12") {
  for (const std::string& id : suite_ids()) {
    if (id.rfind("zee_", 0) == 0) continue;
    TheoremReport rep = run_suite(id, 12);
    INFO(id);
    CHECK(rep.pass());
    CHECK(rep.instances_checked > 0);
  }
}

TEST_CASE("parallel runs merge deterministically") {
  TheoremReport a = run_suite("density_criterion", 16, 1);
  TheoremReport b = run_suite("density_criterion", 16, 4);
  CHECK(a.instances_checked == b.instances_checked);
  CHECK(a.failures.size() == b.failures.size());
}
