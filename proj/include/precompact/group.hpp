#pragma once

#include <map>
#include <string>
#include <vector>

#include "precompact/types.hpp"

namespace precompact {

/// A finite abelian group in invariant-factor form: Z(d_1) x ... x Z(d_k)
/// with d_1 | d_2 | ... | d_k and every d_i >= 2. The empty list is the
/// trivial group. Two groups are equal iff their factor lists are equal; the
/// dual marker is an annotation and takes no part in identity.
struct FiniteAbelianGroup {
  std::vector<Int> factors;
  bool dual_marker = false;

  Int rank() const { return static_cast<Int>(factors.size()); }
  Int order() const {
    Int n = 1;
    for (Int d : factors) n *= d;
    return n;
  }
  Int exponent() const { return factors.empty() ? 1 : factors.back(); }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors == b.factors;
  }
  friend bool operator!=(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return !(a == b);
  }
};

/// Normalizes an arbitrary multiset of cyclic orders (each >= 1) into
/// invariant-factor form, e.g. {2, 3} -> Z(6) and {4, 2, 2} -> Z(2) x Z(2) x Z(4).
FiniteAbelianGroup group_from_cyclic_orders(const std::vector<Int>& orders);

struct GroupInvariants {
  Int order = 1;
  Int exponent = 1;
  std::map<Int, Int> p_ranks;  // prime -> number of invariant factors it divides
};
GroupInvariants group_invariants(const FiniteAbelianGroup& g);

/// All invariant-factor groups of order <= max_order, sorted by
/// (order, factor list). One representative per isomorphism class.
std::vector<FiniteAbelianGroup> groups_up_to_order(Int max_order);

// Elements are coordinate vectors against the invariant factors,
// componentwise reduced into [0, d_i).

Vec zero_element(const FiniteAbelianGroup& g);
Vec reduce_element(const FiniteAbelianGroup& g, Vec x);
void validate_element(const FiniteAbelianGroup& g, const Vec& x);
Vec add_elements(const FiniteAbelianGroup& g, const Vec& a, const Vec& b);
Vec negate_element(const FiniteAbelianGroup& g, const Vec& a);
Vec scale_element(const FiniteAbelianGroup& g, Int m, const Vec& a);
Int element_order(const FiniteAbelianGroup& g, const Vec& a);

/// All |G| elements in lexicographic coordinate order.
std::vector<Vec> all_elements(const FiniteAbelianGroup& g);

/// Index of an element in the lexicographic enumeration, and back.
Int element_index(const FiniteAbelianGroup& g, const Vec& x);
Vec element_at(const FiniteAbelianGroup& g, Int index);

// Textual grammar. Groups: `Z(n)` factors joined by `x`, normalized on parse.
// Elements: bracketed coordinate list `[1,0]` in invariant-factor coordinates.

FiniteAbelianGroup parse_group(const std::string& text);
std::string format_group(const FiniteAbelianGroup& g);
Vec parse_element(const std::string& text, const FiniteAbelianGroup& g);
std::string format_element(const Vec& x);

/// Parses a bracketed list starting at `pos` inside `text`; advances `pos`.
Vec parse_bracketed_vector(const std::string& text, std::size_t& pos);

}  // namespace precompact
