#pragma once

#include <vector>

#include "precompact/types.hpp"

namespace precompact {

// Integer-lattice routines backing the subgroup and annihilator calculus.
// Subgroups of Z(d_1) x ... x Z(d_k) are handled as lattices L with
// diag(d) Z^k <= L <= Z^k, represented by a canonical triangular basis.

/// Canonical basis of the lattice spanned by the given rows together with
/// diag(moduli) Z^k. The result is k x k upper triangular with positive
/// pivots, pivot (j,j) dividing moduli[j], and every entry above a pivot
/// reduced into [0, pivot). The form depends only on the lattice, not on the
/// generating rows, so it doubles as an equality key.
Mat lattice_normal_form(const Mat& rows, const Vec& moduli);

/// True iff x (any integer lift) lies in the lattice with the given canonical
/// basis. Well-defined on residues because diag(moduli) Z^k is contained in
/// every lattice we handle.
bool lattice_contains(const Mat& basis, const Vec& x);

/// Smith normal form u * a * v = s with u, v unimodular and the diagonal of s
/// non-negative with ascending divisibility.
struct SmithResult {
  Mat s;
  Mat u;
  Mat v;
};
SmithResult smith_normal_form(const Mat& a);

/// Basis rows of {x in Z^n : m x == 0 (mod modulus)} for an m-row, n-column
/// coefficient matrix. modulus >= 1.
Mat congruence_kernel(const Mat& coeffs, Int modulus);

/// Basis rows of the integer kernel {x in Z^n : m x == 0}.
Mat integer_kernel(const Mat& coeffs);

/// Diagonal of the Smith form of a, restricted to entries >= 2 (ascending).
std::vector<Int> nontrivial_smith_diagonal(const Mat& a);

}  // namespace precompact
