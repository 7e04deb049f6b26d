#pragma once

#include <string>
#include <vector>

#include "precompact/subgroup.hpp"
#include "precompact/torus.hpp"

namespace precompact {

/// The character group of a finite abelian group has the same invariant
/// factors; the returned value is tagged with the dual marker. Applying
/// dual_group twice gives back the original group, marker included.
FiniteAbelianGroup dual_group(const FiniteAbelianGroup& g);

/// A subgroup S of the dual, i.e. a precompact topology tau_S on the primal
/// group. Coefficient vectors c act by x -> sum_i c_i x_i / d_i mod 1.
struct DualSubgroup {
  Subgroup sub;

  friend bool operator==(const DualSubgroup& a, const DualSubgroup& b) { return a.sub == b.sub; }
  friend bool operator!=(const DualSubgroup& a, const DualSubgroup& b) { return !(a == b); }
};

DualSubgroup full_dual(const FiniteAbelianGroup& g);
DualSubgroup trivial_dual(const FiniteAbelianGroup& g);
DualSubgroup dual_subgroup_from(const FiniteAbelianGroup& g, const Subgroup& sub_of_dual);

/// Evaluation pairing: the character with coefficients chi applied to x.
TorusValue evaluate(const FiniteAbelianGroup& g, const Vec& chi, const Vec& x);

/// Whether the character kills every element of H.
bool character_annihilates(const FiniteAbelianGroup& g, const Vec& chi, const Subgroup& h);

/// A(G^, H): all characters vanishing on H.
DualSubgroup annihilator_full(const FiniteAbelianGroup& g, const Subgroup& h);

/// A(S, H) = {phi in S : phi[H] = 0}. Solved through the congruence system on
/// the canonical basis of H; for |S| <= 64 the result is cross-checked
/// against a direct scan of S.
DualSubgroup annihilator_in_dual(const DualSubgroup& s, const Subgroup& h);

/// A(H, S) = {g in H : phi(g) = 0 for all phi in S}.
Subgroup annihilator_in_group(const Subgroup& h, const DualSubgroup& s);

/// A(G, S): kernel of the evaluation map into the torus power.
Subgroup annihilator_of_topology(const FiniteAbelianGroup& g, const DualSubgroup& s);

struct DualityReport {
  bool pass = true;
  std::vector<std::string> failures;
};

/// Structural identities of the annihilator pairing: A(G^, H) has the
/// invariant factors of G/H, the dual modulo A(G^, H) has those of H, and
/// S/A(S, H) embeds into the dual of H. The order product law
/// |A(G^, H)| * |H| = |G| is checked alongside.
DualityReport check_duality_invariants(const FiniteAbelianGroup& g, const Subgroup& h,
                                       const DualSubgroup& s);

/// H = A(G, A(G^, H)); holds for every subgroup.
bool reflexivity_check(const FiniteAbelianGroup& g, const Subgroup& h);

// Dual subgroups reuse the subgroup grammar behind a `dual:` prefix (the
// prefix is optional on input, canonical on output).
DualSubgroup parse_dual_subgroup(const std::string& text, const FiniteAbelianGroup& g);
std::string format_dual_subgroup(const DualSubgroup& s);

}  // namespace precompact
