#pragma once

#include <string>
#include <vector>

#include "precompact/group.hpp"
#include "precompact/lattice.hpp"
#include "precompact/types.hpp"

namespace precompact {

/// A subgroup of a finite abelian group, held as the canonical triangular
/// basis of its coordinate lattice. The basis is a deterministic function of
/// the subgroup as a set, so subgroups compare by value.
struct Subgroup {
  FiniteAbelianGroup parent;
  Mat basis;  // rank x rank, see lattice_normal_form
  Int order = 1;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && mat_eq(a.basis, b.basis);
  }
  friend bool operator!=(const Subgroup& a, const Subgroup& b) { return !(a == b); }
};

Subgroup trivial_subgroup(const FiniteAbelianGroup& g);
Subgroup full_subgroup(const FiniteAbelianGroup& g);

/// Canonical form of the subgroup generated by the given elements.
/// Idempotent; the empty list yields the trivial subgroup.
Subgroup canonicalize_subgroup(const FiniteAbelianGroup& parent, const std::vector<Vec>& generators);

/// Internal entry point: rows need not be validated elements.
Subgroup subgroup_from_rows(const FiniteAbelianGroup& parent, const Mat& rows);

bool membership(const Subgroup& h, const Vec& x);
bool subgroup_contains(const Subgroup& outer, const Subgroup& inner);
bool is_trivial(const Subgroup& h);
bool is_full(const Subgroup& h);

Subgroup subgroup_sum(const Subgroup& h1, const Subgroup& h2);
Subgroup subgroup_intersection(const Subgroup& h1, const Subgroup& h2);

/// G/H together with the projection onto quotient coordinates.
struct QuotientResult {
  FiniteAbelianGroup quotient;
  Mat transform;                // unimodular; y = transform * x
  std::vector<Int> moduli;      // full Smith diagonal, ascending
  Vec project(const Vec& x) const;
};
QuotientResult quotient_group(const FiniteAbelianGroup& g, const Subgroup& h);

/// Complete subgroup list, sorted by (order, lexicographic element list).
/// Throws CapacityError when |G| exceeds the bound.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g,
                                          Int bound = kDefaultEnumerationBound);

/// All elements of the subgroup, lexicographically sorted.
std::vector<Vec> subgroup_elements(const Subgroup& h);

/// Canonical generator list for display: the nonzero reduced basis rows,
/// sorted. Generates the subgroup.
std::vector<Vec> reduced_generators(const Subgroup& h);

/// Invariant factors of the subgroup as an abstract group.
std::vector<Int> subgroup_invariant_factors(const Subgroup& h);

/// Invariant factors of outer/inner for nested subgroups.
std::vector<Int> quotient_invariant_factors(const Subgroup& outer, const Subgroup& inner);

/// Whether an abstract group with invariant factors `a` embeds into one with
/// invariant factors `b`.
bool embeds_in(const std::vector<Int>& a, const std::vector<Int>& b);

/// Deterministic order: by order, then lexicographic sorted element list.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

/// Compact identity key (parent + basis entries), usable as a map key.
std::string subgroup_key(const Subgroup& h);

// Subgroup spec grammar: `gens=` followed by a comma-separated list of
// bracketed elements; `gens=` alone is the trivial subgroup.
Subgroup parse_subgroup(const std::string& text, const FiniteAbelianGroup& g);
std::string format_subgroup(const Subgroup& h);

}  // namespace precompact
