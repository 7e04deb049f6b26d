#pragma once

#include <optional>
#include <vector>

#include "precompact/duality.hpp"

namespace precompact {

/// The precompact topology tau_S on a finite abelian group, identified with
/// the dual subgroup S that induces it. The kernel A(G, S) is the closure of
/// {0}; the topology is Hausdorff exactly when the kernel is trivial.
/// Non-Hausdorff topologies are first-class throughout.
struct PrecompactTopology {
  FiniteAbelianGroup group;
  DualSubgroup s;
  Subgroup kernel;
  bool hausdorff = false;
};

PrecompactTopology make_topology(const FiniteAbelianGroup& g, const DualSubgroup& s);

/// Topological closure of H: the annihilator of A(S, H) back in G.
Subgroup closure(const PrecompactTopology& topo, const Subgroup& h);

/// closure(H) == H. Also evaluated through the open-subgroup criterion
/// A(G^, H) <= S (every subgroup here has finite index); the two routes must
/// agree.
bool is_closed(const PrecompactTopology& topo, const Subgroup& h);

/// An element of closure(H) \ H when H is not closed.
std::optional<Vec> non_closed_witness(const PrecompactTopology& topo, const Subgroup& h);

/// A(G^, H) meets S trivially; must agree with closure(H) == G.
bool is_dense(const PrecompactTopology& topo, const Subgroup& h);

/// A nonzero character of A(G^, H) ∩ S when H is not dense.
std::optional<Vec> non_dense_witness(const PrecompactTopology& topo, const Subgroup& h);

/// Whether H is dense in the subspace N (requires H <= N).
bool is_dense_in(const PrecompactTopology& topo, const Subgroup& h, const Subgroup& n);

/// All closed subgroups in canonical order. Computed from the closure
/// operator and checked against the up-set of the kernel.
std::vector<Subgroup> closed_family(const PrecompactTopology& topo,
                                    Int bound = kDefaultEnumerationBound);

struct SameFamilyResult {
  bool same = false;
  std::optional<Subgroup> witness_subgroup;  // closed in exactly one topology
  std::optional<Subgroup> witness_dual;      // L <= G^ with L∩S1 != L∩S2
};

/// Whether two topologies on the same group have identical closed families;
/// also evaluates the intersection criterion over all L <= G^ and insists the
/// verdicts coincide.
SameFamilyResult same_closed_family(const PrecompactTopology& t1, const PrecompactTopology& t2,
                                    Int bound = kDefaultEnumerationBound);

/// The greatest dual subgroup containing S with the same closed family:
/// the sum of every same-family supergroup, re-verified afterwards.
DualSubgroup greatest_same_family(const PrecompactTopology& topo,
                                  Int bound = kDefaultEnumerationBound);

/// All minimal dual subgroups (not necessarily comparable with S) whose
/// closed family matches; a singleton exactly when a minimum exists.
std::vector<DualSubgroup> minimal_same_family(const PrecompactTopology& topo,
                                              Int bound = kDefaultEnumerationBound);

struct VerdictWitness {
  bool value = false;
  std::optional<Subgroup> witness;
};

/// S meets every subgroup K of the dual densely (in the finite case:
/// S ∩ K = K for all K). Witness: the first K violating it.
VerdictWitness is_totally_dense(const FiniteAbelianGroup& g, const DualSubgroup& s,
                                Int bound = kDefaultEnumerationBound);

/// Every subgroup of G is closed. Must coincide with total density of S and,
/// for these bounded-order groups, with S being the whole dual.
VerdictWitness is_sc(const PrecompactTopology& topo, Int bound = kDefaultEnumerationBound);

/// No closed subgroup besides G and {0}. Three routes (closed-family scan,
/// trivial intersection with every proper dual subgroup, injectivity of every
/// nonzero character of S) are all evaluated and must agree; the
/// anti-discrete topology counts as topologically simple.
VerdictWitness is_topologically_simple(const PrecompactTopology& topo,
                                       Int bound = kDefaultEnumerationBound);

struct EssentialResult {
  bool essential = false;
  bool equivalence_holds = false;  // essential <=> no proper dense subgroup
  std::optional<Subgroup> witness; // nontrivial B <= G^ missing S, or a proper dense H
};

/// S is topologically essential in the dual iff tau_S admits no proper dense
/// subgroup; both sides are evaluated.
EssentialResult is_topologically_essential(const PrecompactTopology& topo,
                                           Int bound = kDefaultEnumerationBound);

/// The coarsest annihilator-sum topology closing every listed subgroup:
/// S = sum of A(G^, H_i).
PrecompactTopology topology_closing_family(const FiniteAbelianGroup& g,
                                           const std::vector<Subgroup>& family);

struct ClassifyReport {
  FiniteAbelianGroup group;
  DualSubgroup s;
  bool hausdorff = false;
  bool sc = false;
  bool totally_dense = false;
  bool simple = false;
  bool essential = false;
  Subgroup kernel;
  std::vector<Subgroup> closed_family;
  std::optional<Vec> hausdorff_witness;
  std::optional<Subgroup> sc_witness;
  std::optional<Subgroup> totally_dense_witness;
  std::optional<Subgroup> simple_witness;
  std::optional<Subgroup> essential_witness;
};

ClassifyReport classify(const PrecompactTopology& topo, Int bound = kDefaultEnumerationBound);

}  // namespace precompact
