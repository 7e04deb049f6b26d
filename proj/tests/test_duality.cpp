#include <doctest.h>

#include <random>

#include "precompact/duality.hpp"

using namespace precompact;

namespace {

Vec make_vec(std::initializer_list<Int> vals) {
  Vec v(static_cast<Int>(vals.size()));
  Int i = 0;
  for (Int x : vals) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("dual group keeps the invariant factors") {
  FiniteAbelianGroup z4 = parse_group("Z(4)");
  FiniteAbelianGroup d = dual_group(z4);
  CHECK(d == z4);
  CHECK(d.dual_marker);
  FiniteAbelianGroup dd = dual_group(d);
  CHECK(dd == z4);
  CHECK(!dd.dual_marker);

  CHECK(dual_group(parse_group("Z(2)xZ(4)")) == parse_group("Z(2)xZ(4)"));
  CHECK(dual_group(FiniteAbelianGroup{}) == FiniteAbelianGroup{});
}

TEST_CASE("evaluation pairing") {
  FiniteAbelianGroup z4 = parse_group("Z(4)");
  CHECK(evaluate(z4, make_vec({1}), make_vec({2})) == TorusValue::make(1, 2));
  CHECK(evaluate(z4, make_vec({0}), make_vec({3})).is_zero());

  FiniteAbelianGroup g = parse_group("Z(2)xZ(4)");
  CHECK(evaluate(g, make_vec({1, 1}), make_vec({1, 2})).is_zero());
  CHECK(evaluate(g, make_vec({1, 1}), make_vec({0, 1})) == TorusValue::make(1, 4));
  CHECK_THROWS_AS(evaluate(z4, make_vec({1, 0}), make_vec({2})), std::invalid_argument);
}

TEST_CASE("pairing is bilinear") {
  std::mt19937 rng(5);
  FiniteAbelianGroup g = parse_group("Z(2)xZ(6)");
  std::vector<Vec> elems = all_elements(g);
  for (int iter = 0; iter < 200; ++iter) {
    const Vec& c1 = elems[rng() % elems.size()];
    const Vec& c2 = elems[rng() % elems.size()];
    const Vec& x = elems[rng() % elems.size()];
    const Vec& y = elems[rng() % elems.size()];
    CHECK(evaluate(g, add_elements(g, c1, c2), x) == evaluate(g, c1, x) + evaluate(g, c2, x));
    CHECK(evaluate(g, c1, add_elements(g, x, y)) == evaluate(g, c1, x) + evaluate(g, c1, y));
  }
}

TEST_CASE("annihilator examples") {
  FiniteAbelianGroup z4 = parse_group("Z(4)");
  Subgroup two = canonicalize_subgroup(z4, {make_vec({2})});

  DualSubgroup full_ann = annihilator_full(z4, two);
  CHECK(full_ann.sub.order == 2);
  CHECK(membership(full_ann.sub, make_vec({2})));

  DualSubgroup s = parse_dual_subgroup("gens=[2]", z4);
  DualSubgroup in_s = annihilator_in_dual(s, two);
  CHECK(in_s.sub == s.sub);

  CHECK(annihilator_in_dual(s, full_subgroup(z4)).sub == trivial_subgroup(dual_group(z4)));

  CHECK(annihilator_in_group(full_subgroup(z4), s) == two);
  CHECK(annihilator_of_topology(z4, full_dual(z4)) == trivial_subgroup(z4));
  CHECK(annihilator_of_topology(z4, trivial_dual(z4)) == full_subgroup(z4));
}

TEST_CASE("annihilators against element scans, all pairs up to order 16") {
  for (const FiniteAbelianGroup& g : groups_up_to_order(16)) {
    std::vector<Subgroup> subs = enumerate_subgroups(g);
    std::vector<Subgroup> dsubs = enumerate_subgroups(dual_group(g));
    std::vector<Vec> delems = all_elements(dual_group(g));
    for (const Subgroup& h : subs) {
      for (const Subgroup& ds : dsubs) {
        DualSubgroup s = dual_subgroup_from(g, ds);
        DualSubgroup ann = annihilator_in_dual(s, h);  // also cross-checks its own scan
        // A(S,H) = S ∩ A(G^,H)
        CHECK(ann.sub == subgroup_intersection(ds, annihilator_full(g, h).sub));
        // A(H,S) scan
        Subgroup back = annihilator_in_group(h, s);
        for (const Vec& x : subgroup_elements(h)) {
          bool killed = true;
          for (const Vec& chi : subgroup_elements(ds))
            if (!evaluate(g, chi, x).is_zero()) {
              killed = false;
              break;
            }
          CHECK(membership(back, x) == killed);
        }
      }
      // Perfect pairing on the full dual.
      CHECK(annihilator_full(g, h).sub.order * h.order == g.order());
    }
  }
}

TEST_CASE("galois antitonicity and idempotent closures up to order 16") {
  for (const FiniteAbelianGroup& g : groups_up_to_order(16)) {
    std::vector<Subgroup> subs = enumerate_subgroups(g);
    for (const Subgroup& h1 : subs)
      for (const Subgroup& h2 : subs) {
        if (!subgroup_contains(h2, h1)) continue;
        CHECK(subgroup_contains(annihilator_full(g, h1).sub, annihilator_full(g, h2).sub));
      }
    std::vector<Subgroup> dsubs = enumerate_subgroups(dual_group(g));
    for (const Subgroup& ds : dsubs) {
      DualSubgroup s = dual_subgroup_from(g, ds);
      Subgroup kernel = annihilator_of_topology(g, s);
      // Lemma-closure: S recovers from its own kernel.
      CHECK(annihilator_full(g, kernel).sub == ds);
    }
  }
}

TEST_CASE("duality report passes on structured examples") {
  FiniteAbelianGroup z4 = parse_group("Z(4)");
  Subgroup two = canonicalize_subgroup(z4, {make_vec({2})});
  CHECK(check_duality_invariants(z4, two, full_dual(z4)).pass);
  CHECK(check_duality_invariants(z4, full_subgroup(z4), full_dual(z4)).pass);

  FiniteAbelianGroup z2z2 = parse_group("Z(2)xZ(2)");
  Subgroup diag = canonicalize_subgroup(z2z2, {make_vec({1, 1})});
  DualityReport rep = check_duality_invariants(z2z2, diag, full_dual(z2z2));
  CHECK(rep.pass);
  CHECK(annihilator_full(z2z2, diag).sub.order == 2);

  FiniteAbelianGroup g = parse_group("Z(2)xZ(4)");
  for (const Subgroup& h : enumerate_subgroups(g))
    for (const Subgroup& ds : enumerate_subgroups(dual_group(g)))
      CHECK(check_duality_invariants(g, h, dual_subgroup_from(g, ds)).pass);
}

TEST_CASE("reflexivity") {
  FiniteAbelianGroup z4 = parse_group("Z(4)");
  CHECK(reflexivity_check(z4, canonicalize_subgroup(z4, {make_vec({2})})));
  CHECK(reflexivity_check(z4, trivial_subgroup(z4)));
  FiniteAbelianGroup g = parse_group("Z(2)xZ(4)");
  CHECK(reflexivity_check(g, canonicalize_subgroup(g, {make_vec({0, 2})})));
  for (const Subgroup& h : enumerate_subgroups(g)) CHECK(reflexivity_check(g, h));
}

TEST_CASE("dual subgroup grammar") {
  FiniteAbelianGroup g = parse_group("Z(2)xZ(4)");
  // <(1,1)> has order 4; its canonical generators are (0,2) and (1,1).
  DualSubgroup s = parse_dual_subgroup("dual:gens=[1,1]", g);
  CHECK(s.sub.order == 4);
  CHECK(format_dual_subgroup(s) == "dual:gens=[0,2],[1,1]");
  CHECK(parse_dual_subgroup("gens=[1,1]", g) == s);  // prefix optional on input
  CHECK(parse_dual_subgroup(format_dual_subgroup(s), g) == s);
}
