#include "precompact/duality.hpp"

#include <algorithm>

namespace precompact {

namespace {

void require_primal_match(const FiniteAbelianGroup& g, const DualSubgroup& s) {
  if (s.sub.parent.factors != g.factors)
    throw std::invalid_argument("dual subgroup belongs to a different group");
}

// Coefficient matrix of the evaluation pairing against the given rows: row r,
// column i holds rows(r, i) * (exponent / d_i), so that a vector c pairs to
// zero with row r exactly when (P c)_r == 0 mod exponent.
Mat pairing_rows(const FiniteAbelianGroup& g, const Mat& rows) {
  const Int exp = g.exponent();
  Mat p(rows.rows(), rows.cols());
  for (Int r = 0; r < rows.rows(); ++r)
    for (Int i = 0; i < rows.cols(); ++i)
      p(r, i) = (rows(r, i) % g.factors[static_cast<std::size_t>(i)]) *
                (exp / g.factors[static_cast<std::size_t>(i)]);
  return p;
}

}  // namespace

FiniteAbelianGroup dual_group(const FiniteAbelianGroup& g) {
  FiniteAbelianGroup out = g;
  out.dual_marker = !g.dual_marker;
  return out;
}

DualSubgroup full_dual(const FiniteAbelianGroup& g) {
  return DualSubgroup{full_subgroup(dual_group(g))};
}

DualSubgroup trivial_dual(const FiniteAbelianGroup& g) {
  return DualSubgroup{trivial_subgroup(dual_group(g))};
}

DualSubgroup dual_subgroup_from(const FiniteAbelianGroup& g, const Subgroup& sub_of_dual) {
  if (sub_of_dual.parent.factors != g.factors)
    throw std::invalid_argument("dual subgroup belongs to a different group");
  Subgroup sub = sub_of_dual;
  sub.parent = dual_group(g);
  return DualSubgroup{sub};
}

TorusValue evaluate(const FiniteAbelianGroup& g, const Vec& chi, const Vec& x) {
  validate_element(g, x);
  if (chi.size() != g.rank()) throw std::invalid_argument("character/group dimension mismatch");
  TorusValue acc;
  for (Int i = 0; i < g.rank(); ++i) {
    Int d = g.factors[static_cast<std::size_t>(i)];
    acc = acc + TorusValue::make(chi[i] * x[i], d);
  }
  return acc;
}

bool character_annihilates(const FiniteAbelianGroup& g, const Vec& chi, const Subgroup& h) {
  for (const Vec& gen : reduced_generators(h))
    if (!evaluate(g, chi, gen).is_zero()) return false;
  return true;
}

DualSubgroup annihilator_full(const FiniteAbelianGroup& g, const Subgroup& h) {
  if (h.parent.factors != g.factors)
    throw std::invalid_argument("annihilator: subgroup of a different group");
  if (g.rank() == 0) return full_dual(g);
  Mat kern = congruence_kernel(pairing_rows(g, h.basis), g.exponent());
  return DualSubgroup{subgroup_from_rows(dual_group(g), kern)};
}

DualSubgroup annihilator_in_dual(const DualSubgroup& s, const Subgroup& h) {
  require_primal_match(h.parent, s);
  const FiniteAbelianGroup& g = h.parent;
  DualSubgroup algebraic{subgroup_intersection(s.sub, annihilator_full(g, h).sub)};
  if (s.sub.order <= 64) {
    // Independent route: scan the characters of S directly.
    std::vector<Vec> kept;
    for (const Vec& chi : subgroup_elements(s.sub))
      if (character_annihilates(g, chi, h)) kept.push_back(chi);
    Subgroup scanned = canonicalize_subgroup(s.sub.parent, kept);
    if (scanned != algebraic.sub)
      throw std::logic_error("annihilator_in_dual: congruence and scan routes disagree");
  }
  return algebraic;
}

Subgroup annihilator_in_group(const Subgroup& h, const DualSubgroup& s) {
  require_primal_match(h.parent, s);
  Subgroup kernel = annihilator_of_topology(h.parent, s);
  if (is_full(h)) return kernel;
  return subgroup_intersection(h, kernel);
}

Subgroup annihilator_of_topology(const FiniteAbelianGroup& g, const DualSubgroup& s) {
  require_primal_match(g, s);
  if (g.rank() == 0) return full_subgroup(g);
  Mat kern = congruence_kernel(pairing_rows(g, s.sub.basis), g.exponent());
  return subgroup_from_rows(g, kern);
}

namespace {

std::string factor_list(const std::vector<Int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

DualityReport check_duality_invariants(const FiniteAbelianGroup& g, const Subgroup& h,
                                       const DualSubgroup& s) {
  DualityReport report;
  auto fail = [&](const std::string& msg) {
    report.pass = false;
    report.failures.push_back(msg);
  };

  DualSubgroup ann = annihilator_full(g, h);
  if (ann.sub.order * h.order != g.order())
    fail("order product: |A|*|H| = " + std::to_string(ann.sub.order * h.order) +
         " != " + std::to_string(g.order()));

  std::vector<Int> ann_factors = subgroup_invariant_factors(ann.sub);
  std::vector<Int> quot_factors = quotient_group(g, h).quotient.factors;
  if (ann_factors != quot_factors)
    fail("A(G^,H) " + factor_list(ann_factors) + " != G/H " + factor_list(quot_factors));

  std::vector<Int> codual = quotient_group(dual_group(g), ann.sub).quotient.factors;
  std::vector<Int> h_factors = subgroup_invariant_factors(h);
  if (codual != h_factors)
    fail("G^/A(G^,H) " + factor_list(codual) + " != H " + factor_list(h_factors));

  DualSubgroup ann_in_s = annihilator_in_dual(s, h);
  std::vector<Int> rel = quotient_invariant_factors(s.sub, ann_in_s.sub);
  if (!embeds_in(rel, h_factors))
    fail("S/A(S,H) " + factor_list(rel) + " does not embed in H^ " + factor_list(h_factors));

  return report;
}

bool reflexivity_check(const FiniteAbelianGroup& g, const Subgroup& h) {
  return annihilator_in_group(full_subgroup(g), annihilator_full(g, h)) == h;
}

DualSubgroup parse_dual_subgroup(const std::string& text, const FiniteAbelianGroup& g) {
  std::string body = text;
  if (body.rfind("dual:", 0) == 0) body = body.substr(5);
  Subgroup sub = parse_subgroup(body, dual_group(g));
  return DualSubgroup{sub};
}

std::string format_dual_subgroup(const DualSubgroup& s) {
  return "dual:" + format_subgroup(s.sub);
}

}  // namespace precompact
