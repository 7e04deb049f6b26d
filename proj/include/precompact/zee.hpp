#pragma once

#include "precompact/supernatural.hpp"

namespace precompact {

/// Symbolic free rank value standing for continuum-many independent
/// non-torsion generators. Compared for equality only.
constexpr Int kContinuum = -1;

/// A subgroup of the torus (the dual of Z) described by its torsion part and
/// a symbolic free rank. The torsion part alone determines which subgroups
/// kZ are closed; the free part only affects separation.
struct TorusSubgroupDesc {
  SupernaturalNumber torsion;
  Int free_rank = 0;  // >= 0, or kContinuum

  friend bool operator==(const TorusSubgroupDesc& a, const TorusSubgroupDesc& b) {
    return a.torsion == b.torsion && a.free_rank == b.free_rank;
  }
  friend bool operator!=(const TorusSubgroupDesc& a, const TorusSubgroupDesc& b) {
    return !(a == b);
  }
};

/// A subgroup of Z: k = 0 is {0}, k = 1 is Z, k >= 2 is kZ.
struct IntSubgroup {
  Int k = 0;

  friend bool operator==(IntSubgroup a, IntSubgroup b) { return a.k == b.k; }
  friend bool operator!=(IntSubgroup a, IntSubgroup b) { return !(a == b); }
};

/// Point separation: the described subgroup is infinite.
bool descriptor_hausdorff(const TorusSubgroupDesc& s);

/// n is in C_S, i.e. nZ is closed in tau_S (n >= 1).
bool c_set_contains(const TorusSubgroupDesc& s, Int n);

/// Topological closure: for k >= 1 the largest divisor t of k with t in C_S;
/// for k = 0 the kernel of the evaluation into the torus (NZ when the torsion
/// part is a finite N and the free rank is 0, otherwise {0}).
IntSubgroup closure_int(const TorusSubgroupDesc& s, IntSubgroup h);

bool is_closed_int(const TorusSubgroupDesc& s, IntSubgroup h);

/// Density of kZ in tau_S. For k >= 2 two routes are evaluated (the closure
/// reaching Z, and: k not in C_S while no s > 1 in C_S divides k) and must
/// agree; Z itself is both closed and dense.
bool is_dense_int(const TorusSubgroupDesc& s, IntSubgroup h);

/// The smallest subgroup with the same closed family: the torsion part alone.
TorusSubgroupDesc m_s(const TorusSubgroupDesc& s);

/// The greatest subgroup with the same closed family: torsion part plus a
/// continuum free complement. Always point-separating.
TorusSubgroupDesc M_s(const TorusSubgroupDesc& s);

struct ZClassification {
  bool hausdorff = false;
  bool sc = false;                   // every subgroup of Z closed
  bool topologically_simple = false; // no closed subgroup besides Z, {0}
  bool has_nontrivial_closed = false;
  SupernaturalNumber family_descriptor;  // C_S is its divisor set
};

ZClassification classify_int(const TorusSubgroupDesc& s);

// Grammar: descriptor `tors=<supernatural>,free=<n|c>`; integer subgroup
// `<k>Z` (bare `Z` accepted for 1Z on input).
TorusSubgroupDesc parse_descriptor(const std::string& text);
std::string format_descriptor(const TorusSubgroupDesc& s);
IntSubgroup parse_int_subgroup(const std::string& text);
std::string format_int_subgroup(IntSubgroup h);

}  // namespace precompact
