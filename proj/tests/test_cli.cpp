#include <doctest.h>

#include <random>

#include "precompact/report.hpp"

using namespace precompact;

namespace {

FiniteAbelianGroup random_group(std::mt19937& rng) {
  static const std::vector<FiniteAbelianGroup> pool = groups_up_to_order(48);
  return pool[rng() % pool.size()];
}

SupernaturalNumber random_supernatural(std::mt19937& rng) {
  const std::vector<Int> primes = {2, 3, 5, 7, 11, 13};
  std::map<Int, Int> exps;
  Int def = (rng() % 4 == 0) ? SupernaturalNumber::kInfinity : 0;
  for (Int p : primes) {
    switch (rng() % 5) {
      case 0: break;
      case 1: exps[p] = SupernaturalNumber::kInfinity; break;
      default: exps[p] = static_cast<Int>(rng() % 4); break;
    }
  }
  return SupernaturalNumber::make(def, std::move(exps));
}

}  // namespace

TEST_CASE("round trip: one thousand generated canonical specs") {
  std::mt19937 rng(424242);
  int done = 0;
  while (done < 1000) {
    // Group spec.
    FiniteAbelianGroup g = random_group(rng);
    std::string gs = format_group(g);
    CHECK(format_group(parse_group(gs)) == gs);
    ++done;

    // Subgroup spec over that group.
    std::vector<Vec> elems = all_elements(g);
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < 1 + rng() % 3; ++j) gens.push_back(elems[rng() % elems.size()]);
    Subgroup h = canonicalize_subgroup(g, gens);
    std::string hs = format_subgroup(h);
    CHECK(format_subgroup(parse_subgroup(hs, g)) == hs);
    ++done;

    // Dual subgroup spec.
    DualSubgroup s = dual_subgroup_from(g, canonicalize_subgroup(dual_group(g), gens));
    std::string ss = format_dual_subgroup(s);
    CHECK(format_dual_subgroup(parse_dual_subgroup(ss, g)) == ss);
    ++done;

    // Supernatural and descriptor specs.
    SupernaturalNumber sn = random_supernatural(rng);
    std::string sns = format_supernatural(sn);
    CHECK(format_supernatural(parse_supernatural(sns)) == sns);
    ++done;

    Int free_rank = (rng() % 3 == 0) ? kContinuum : static_cast<Int>(rng() % 4);
    TorusSubgroupDesc desc{sn, free_rank};
    std::string ds = format_descriptor(desc);
    CHECK(format_descriptor(parse_descriptor(ds)) == ds);
    ++done;

    // Integer subgroup spec.
    IntSubgroup k{static_cast<Int>(rng() % 1000)};
    std::string ks = format_int_subgroup(k);
    CHECK(format_int_subgroup(parse_int_subgroup(ks)) == ks);
    ++done;
  }
  CHECK(done >= 1000);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_group("Z(4)xZ[2]");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
    CHECK(std::string(e.what()).find("position 6") != std::string::npos);
  }
  try {
    parse_supernatural("2^2*9");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("json serialization shapes") {
  FiniteAbelianGroup g = parse_group("Z(2)xZ(4)");
  Subgroup h = parse_subgroup("gens=[1,2]", g);
  Json j = subgroup_to_json(h);
  CHECK(j.dump() == "[[1,2]]");
  CHECK(subgroup_to_json(trivial_subgroup(g)).dump() == "[]");
  CHECK(subgroup_to_json(full_subgroup(g)).dump() == "[[0,1],[1,0]]");

  Json env = report_envelope("closure", Json{{"group", "Z(4)"}}, Json{{"closed", true}}, Json());
  CHECK(env.dump() ==
        R"json({"version":1,"command":"closure","input":{"group":"Z(4)"},"result":{"closed":true},"witness":null})json");
}
