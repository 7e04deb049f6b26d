#include "precompact/topology.hpp"

#include <algorithm>
#include <map>

namespace precompact {

namespace {

void require_subgroup_of(const PrecompactTopology& topo, const Subgroup& h) {
  if (h.parent != topo.group) throw std::invalid_argument("subgroup of a different group");
}

std::vector<Subgroup> dual_subgroups(const FiniteAbelianGroup& g, Int bound) {
  return enumerate_subgroups(dual_group(g), bound);
}

}  // namespace

PrecompactTopology make_topology(const FiniteAbelianGroup& g, const DualSubgroup& s) {
  PrecompactTopology topo;
  topo.group = g;
  topo.s = s;
  topo.kernel = annihilator_of_topology(g, s);
  topo.hausdorff = is_trivial(topo.kernel);
  return topo;
}

Subgroup closure(const PrecompactTopology& topo, const Subgroup& h) {
  require_subgroup_of(topo, h);
  DualSubgroup ann = annihilator_in_dual(topo.s, h);
  return annihilator_of_topology(topo.group, ann);
}

bool is_closed(const PrecompactTopology& topo, const Subgroup& h) {
  bool by_closure = closure(topo, h) == h;
  bool by_open_criterion = subgroup_contains(topo.s.sub, annihilator_full(topo.group, h).sub);
  if (by_closure != by_open_criterion)
    throw std::logic_error("is_closed: closure and finite-index routes disagree");
  return by_closure;
}

std::optional<Vec> non_closed_witness(const PrecompactTopology& topo, const Subgroup& h) {
  Subgroup cl = closure(topo, h);
  if (cl == h) return std::nullopt;
  for (const Vec& x : subgroup_elements(cl))
    if (!membership(h, x)) return x;
  throw std::logic_error("non_closed_witness: closure augments H by no element");
}

bool is_dense(const PrecompactTopology& topo, const Subgroup& h) {
  Subgroup meet = subgroup_intersection(annihilator_full(topo.group, h).sub, topo.s.sub);
  bool by_annihilator = is_trivial(meet);
  bool by_closure = is_full(closure(topo, h));
  if (by_annihilator != by_closure)
    throw std::logic_error("is_dense: annihilator and closure routes disagree");
  return by_annihilator;
}

std::optional<Vec> non_dense_witness(const PrecompactTopology& topo, const Subgroup& h) {
  Subgroup meet = subgroup_intersection(annihilator_full(topo.group, h).sub, topo.s.sub);
  if (is_trivial(meet)) return std::nullopt;
  for (const Vec& chi : subgroup_elements(meet))
    if (!vec_eq(chi, zero_element(meet.parent))) return chi;
  throw std::logic_error("non_dense_witness: nontrivial subgroup without nonzero element");
}

bool is_dense_in(const PrecompactTopology& topo, const Subgroup& h, const Subgroup& n) {
  require_subgroup_of(topo, h);
  require_subgroup_of(topo, n);
  if (!subgroup_contains(n, h))
    throw std::invalid_argument("is_dense_in: H must be contained in N");
  bool by_closure = subgroup_contains(closure(topo, h), n);
  bool by_equal_closures = closure(topo, n) == closure(topo, h);
  if (by_closure != by_equal_closures)
    throw std::logic_error("is_dense_in: the two closure routes disagree");
  return by_closure;
}

std::vector<Subgroup> closed_family(const PrecompactTopology& topo, Int bound) {
  std::vector<Subgroup> out;
  for (const Subgroup& h : enumerate_subgroups(topo.group, bound)) {
    bool closed = closure(topo, h) == h;
    if (closed != subgroup_contains(h, topo.kernel))
      throw std::logic_error("closed_family: family is not the up-set of the kernel");
    if (closed) out.push_back(h);
  }
  return out;
}

SameFamilyResult same_closed_family(const PrecompactTopology& t1, const PrecompactTopology& t2,
                                    Int bound) {
  if (t1.group != t2.group) throw std::invalid_argument("same_closed_family: different groups");
  SameFamilyResult res;

  std::vector<Subgroup> fam1 = closed_family(t1, bound);
  std::vector<Subgroup> fam2 = closed_family(t2, bound);
  bool families_equal = fam1 == fam2;
  if (!families_equal) {
    for (const Subgroup& h : fam1)
      if (std::find(fam2.begin(), fam2.end(), h) == fam2.end()) {
        res.witness_subgroup = h;
        break;
      }
    if (!res.witness_subgroup)
      for (const Subgroup& h : fam2)
        if (std::find(fam1.begin(), fam1.end(), h) == fam1.end()) {
          res.witness_subgroup = h;
          break;
        }
  }

  // Intersection criterion over every subgroup of the (finite, hence
  // discrete) dual: L ∩ S1 = L ∩ S2.
  bool criterion = true;
  for (const Subgroup& l : dual_subgroups(t1.group, bound)) {
    if (subgroup_intersection(l, t1.s.sub) != subgroup_intersection(l, t2.s.sub)) {
      criterion = false;
      res.witness_dual = l;
      break;
    }
  }
  if (families_equal != criterion)
    throw std::logic_error("same_closed_family: family comparison and criterion disagree");
  res.same = families_equal;
  return res;
}

DualSubgroup greatest_same_family(const PrecompactTopology& topo, Int bound) {
  const FiniteAbelianGroup& g = topo.group;
  // Closed families are kernel up-sets, so T has the family of S exactly when
  // A(G, T) = A(G, S); the summed result is re-verified in full below.
  Subgroup acc = topo.s.sub;
  for (const Subgroup& t : dual_subgroups(g, bound)) {
    if (!subgroup_contains(t, topo.s.sub)) continue;
    DualSubgroup cand = dual_subgroup_from(g, t);
    if (annihilator_of_topology(g, cand) == topo.kernel) acc = subgroup_sum(acc, t);
  }
  DualSubgroup result = dual_subgroup_from(g, acc);
  SameFamilyResult verify = same_closed_family(topo, make_topology(g, result), bound);
  if (!verify.same)
    throw std::logic_error("greatest_same_family: summed topology changed the closed family");
  return result;
}

std::vector<DualSubgroup> minimal_same_family(const PrecompactTopology& topo, Int bound) {
  const FiniteAbelianGroup& g = topo.group;
  std::vector<Subgroup> candidates;
  for (const Subgroup& t : dual_subgroups(g, bound)) {
    DualSubgroup cand = dual_subgroup_from(g, t);
    if (annihilator_of_topology(g, cand) == topo.kernel) candidates.push_back(t);
  }
  std::vector<DualSubgroup> minimals;
  for (const Subgroup& t : candidates) {
    bool minimal = true;
    for (const Subgroup& other : candidates)
      if (other != t && subgroup_contains(t, other)) {
        minimal = false;
        break;
      }
    if (minimal) {
      DualSubgroup cand = dual_subgroup_from(g, t);
      SameFamilyResult verify = same_closed_family(topo, make_topology(g, cand), bound);
      if (!verify.same)
        throw std::logic_error("minimal_same_family: candidate fails the full family check");
      minimals.push_back(cand);
    }
  }
  return minimals;
}

VerdictWitness is_totally_dense(const FiniteAbelianGroup& g, const DualSubgroup& s, Int bound) {
  for (const Subgroup& k : dual_subgroups(g, bound)) {
    if (subgroup_intersection(s.sub, k) != k) return {false, k};
  }
  return {true, std::nullopt};
}

VerdictWitness is_sc(const PrecompactTopology& topo, Int bound) {
  VerdictWitness out{true, std::nullopt};
  for (const Subgroup& h : enumerate_subgroups(topo.group, bound)) {
    if (!is_closed(topo, h)) {
      out = {false, h};
      break;
    }
  }
  bool totally_dense = is_totally_dense(topo.group, topo.s, bound).value;
  bool full = is_full(topo.s.sub);
  if (out.value != totally_dense || out.value != full)
    throw std::logic_error("is_sc: total-density and full-dual routes disagree");
  return out;
}

VerdictWitness is_topologically_simple(const PrecompactTopology& topo, Int bound) {
  const FiniteAbelianGroup& g = topo.group;

  VerdictWitness def{true, std::nullopt};
  for (const Subgroup& h : closed_family(topo, bound)) {
    if (!is_trivial(h) && !is_full(h)) {
      def = {false, h};
      break;
    }
  }

  bool by_dual_meet = true;
  for (const Subgroup& l : dual_subgroups(g, bound)) {
    if (is_full(l)) continue;
    if (!is_trivial(subgroup_intersection(l, topo.s.sub))) {
      by_dual_meet = false;
      break;
    }
  }

  bool by_injectivity = true;
  const Vec zero = zero_element(topo.s.sub.parent);
  for (const Vec& chi : subgroup_elements(topo.s.sub)) {
    if (vec_eq(chi, zero)) continue;
    Subgroup ker =
        annihilator_of_topology(g, dual_subgroup_from(g, canonicalize_subgroup(topo.s.sub.parent, {chi})));
    if (!is_trivial(ker)) {
      by_injectivity = false;
      break;
    }
  }

  if (def.value != by_dual_meet || def.value != by_injectivity)
    throw std::logic_error("is_topologically_simple: the three routes disagree");
  return def;
}

EssentialResult is_topologically_essential(const PrecompactTopology& topo, Int bound) {
  EssentialResult res;
  res.essential = true;
  for (const Subgroup& b : dual_subgroups(topo.group, bound)) {
    if (is_trivial(b)) continue;
    if (is_trivial(subgroup_intersection(topo.s.sub, b))) {
      res.essential = false;
      res.witness = b;
      break;
    }
  }
  bool has_proper_dense = false;
  std::optional<Subgroup> dense_witness;
  for (const Subgroup& h : enumerate_subgroups(topo.group, bound)) {
    if (is_full(h)) continue;
    if (is_dense(topo, h)) {
      has_proper_dense = true;
      dense_witness = h;
      break;
    }
  }
  res.equivalence_holds = (res.essential == !has_proper_dense);
  if (!res.witness && dense_witness) res.witness = dense_witness;
  return res;
}

PrecompactTopology topology_closing_family(const FiniteAbelianGroup& g,
                                           const std::vector<Subgroup>& family) {
  Subgroup acc = trivial_subgroup(dual_group(g));
  for (const Subgroup& h : family) {
    if (h.parent != g) throw std::invalid_argument("topology_closing_family: foreign subgroup");
    acc = subgroup_sum(acc, annihilator_full(g, h).sub);
  }
  PrecompactTopology topo = make_topology(g, dual_subgroup_from(g, acc));
  for (const Subgroup& h : family)
    if (!is_closed(topo, h))
      throw std::logic_error("topology_closing_family: listed subgroup is not closed");
  return topo;
}

ClassifyReport classify(const PrecompactTopology& topo, Int bound) {
  ClassifyReport rep;
  rep.group = topo.group;
  rep.s = topo.s;
  rep.kernel = topo.kernel;
  rep.hausdorff = topo.hausdorff;
  if (!rep.hausdorff) {
    for (const Vec& x : subgroup_elements(topo.kernel))
      if (!vec_eq(x, zero_element(topo.group))) {
        rep.hausdorff_witness = x;
        break;
      }
  }
  rep.closed_family = closed_family(topo, bound);

  VerdictWitness sc = is_sc(topo, bound);
  rep.sc = sc.value;
  rep.sc_witness = sc.witness;

  VerdictWitness td = is_totally_dense(topo.group, topo.s, bound);
  rep.totally_dense = td.value;
  rep.totally_dense_witness = td.witness;

  VerdictWitness simple = is_topologically_simple(topo, bound);
  rep.simple = simple.value;
  rep.simple_witness = simple.witness;

  EssentialResult ess = is_topologically_essential(topo, bound);
  rep.essential = ess.essential;
  if (!ess.essential) rep.essential_witness = ess.witness;
  return rep;
}

}  // namespace precompact
