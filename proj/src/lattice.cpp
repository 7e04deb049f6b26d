#include "precompact/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace precompact {

namespace {

using WideRow = std::vector<Wide>;

Wide wabs(Wide x) { return x < 0 ? -x : x; }

// Overflow guard for intermediate echelon entries. Final entries are always
// small (bounded by the moduli); intermediates get 128-bit headroom.
void check_range(Wide x) {
  static const Wide kLimit = Wide(1) << 120;
  if (wabs(x) > kLimit) throw std::logic_error("lattice arithmetic overflow");
}

void row_axpy(WideRow& target, Wide q, const WideRow& src) {
  for (std::size_t j = 0; j < target.size(); ++j) {
    target[j] -= q * src[j];
    check_range(target[j]);
  }
}

}  // namespace

Mat lattice_normal_form(const Mat& rows, const Vec& moduli) {
  const Int k = moduli.size();
  if (rows.size() > 0 && rows.cols() != k)
    throw std::invalid_argument("lattice_normal_form: column count mismatch");
  for (Int i = 0; i < k; ++i)
    if (moduli[i] < 1) throw std::invalid_argument("lattice_normal_form: moduli must be positive");
  if (k == 0) return Mat(0, 0);

  std::vector<WideRow> work;
  work.reserve(static_cast<std::size_t>(rows.rows() + k));
  for (Int r = 0; r < rows.rows(); ++r) {
    WideRow row(static_cast<std::size_t>(k));
    for (Int j = 0; j < k; ++j) {
      Int v = rows(r, j) % moduli[j];
      if (v < 0) v += moduli[j];
      row[static_cast<std::size_t>(j)] = v;
    }
    work.push_back(std::move(row));
  }
  for (Int i = 0; i < k; ++i) {
    WideRow row(static_cast<std::size_t>(k), 0);
    row[static_cast<std::size_t>(i)] = moduli[i];
    work.push_back(std::move(row));
  }

  // Integer row echelon. The diag(moduli) rows guarantee a pivot in every
  // column, so the echelon is square upper triangular.
  const std::size_t n = work.size();
  std::size_t top = 0;
  for (Int col = 0; col < k; ++col) {
    const std::size_t c = static_cast<std::size_t>(col);
    while (true) {
      std::size_t best = n;
      for (std::size_t r = top; r < n; ++r) {
        if (work[r][c] == 0) continue;
        if (best == n || wabs(work[r][c]) < wabs(work[best][c])) best = r;
      }
      if (best == n) throw std::logic_error("lattice_normal_form: missing pivot");
      std::swap(work[top], work[best]);
      bool clear = true;
      for (std::size_t r = top + 1; r < n; ++r) {
        if (work[r][c] == 0) continue;
        Wide q = work[r][c] / work[top][c];
        if (q != 0) row_axpy(work[r], q, work[top]);
        if (work[r][c] != 0) clear = false;
      }
      if (clear) break;
    }
    if (work[top][c] < 0)
      for (auto& v : work[top]) v = -v;
    ++top;
  }

  // Reduce entries above each pivot into [0, pivot).
  for (Int col = 0; col < k; ++col) {
    const std::size_t c = static_cast<std::size_t>(col);
    for (std::size_t i = 0; i < c; ++i) {
      Wide p = work[c][c];
      Wide q = work[i][c] / p;
      if (work[i][c] - q * p < 0) --q;
      if (q != 0) row_axpy(work[i], q, work[c]);
    }
  }

  Mat out(k, k);
  for (Int i = 0; i < k; ++i)
    for (Int j = 0; j < k; ++j) {
      Wide v = work[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v < 0 || v > moduli[j]) throw std::logic_error("lattice_normal_form: entry out of range");
      out(i, j) = static_cast<Int>(v);
    }
  return out;
}

bool lattice_contains(const Mat& basis, const Vec& x) {
  const Int k = basis.rows();
  if (x.size() != k) throw std::invalid_argument("lattice_contains: dimension mismatch");
  std::vector<Wide> v(static_cast<std::size_t>(k));
  for (Int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = x[i];
  for (Int i = 0; i < k; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    Wide p = basis(i, i);
    if (v[ii] % p != 0) return false;
    Wide q = v[ii] / p;
    if (q != 0)
      for (Int j = i; j < k; ++j) {
        v[static_cast<std::size_t>(j)] -= q * basis(i, j);
        check_range(v[static_cast<std::size_t>(j)]);
      }
  }
  return true;
}

SmithResult smith_normal_form(const Mat& a) {
  const Int m = a.rows(), n = a.cols();
  std::vector<WideRow> s(static_cast<std::size_t>(m), WideRow(static_cast<std::size_t>(n), 0));
  std::vector<WideRow> u(static_cast<std::size_t>(m), WideRow(static_cast<std::size_t>(m), 0));
  std::vector<WideRow> v(static_cast<std::size_t>(n), WideRow(static_cast<std::size_t>(n), 0));
  for (Int i = 0; i < m; ++i)
    for (Int j = 0; j < n; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
  for (Int i = 0; i < m; ++i) u[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (Int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;

  auto swap_rows = [&](Int r1, Int r2) {
    std::swap(s[static_cast<std::size_t>(r1)], s[static_cast<std::size_t>(r2)]);
    std::swap(u[static_cast<std::size_t>(r1)], u[static_cast<std::size_t>(r2)]);
  };
  auto swap_cols = [&](Int c1, Int c2) {
    for (Int i = 0; i < m; ++i)
      std::swap(s[static_cast<std::size_t>(i)][static_cast<std::size_t>(c1)],
                s[static_cast<std::size_t>(i)][static_cast<std::size_t>(c2)]);
    for (Int i = 0; i < n; ++i)
      std::swap(v[static_cast<std::size_t>(i)][static_cast<std::size_t>(c1)],
                v[static_cast<std::size_t>(i)][static_cast<std::size_t>(c2)]);
  };
  auto row_op = [&](Int dst, Wide q, Int src) {  // row dst -= q * row src
    row_axpy(s[static_cast<std::size_t>(dst)], q, s[static_cast<std::size_t>(src)]);
    row_axpy(u[static_cast<std::size_t>(dst)], q, u[static_cast<std::size_t>(src)]);
  };
  auto col_op = [&](Int dst, Wide q, Int src) {  // col dst -= q * col src
    for (Int i = 0; i < m; ++i) {
      auto& row = s[static_cast<std::size_t>(i)];
      row[static_cast<std::size_t>(dst)] -= q * row[static_cast<std::size_t>(src)];
      check_range(row[static_cast<std::size_t>(dst)]);
    }
    for (Int i = 0; i < n; ++i) {
      auto& row = v[static_cast<std::size_t>(i)];
      row[static_cast<std::size_t>(dst)] -= q * row[static_cast<std::size_t>(src)];
      check_range(row[static_cast<std::size_t>(dst)]);
    }
  };

  const Int steps = std::min(m, n);
  for (Int t = 0; t < steps; ++t) {
    while (true) {
      Int pi = -1, pj = -1;
      for (Int i = t; i < m; ++i)
        for (Int j = t; j < n; ++j) {
          const Wide val = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (val == 0) continue;
          if (pi < 0 || wabs(val) < wabs(s[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)])) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        t = steps;  // remaining block is zero
        break;
      }
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);

      bool dirty = false;
      const std::size_t tt = static_cast<std::size_t>(t);
      for (Int i = t + 1; i < m; ++i) {
        Wide val = s[static_cast<std::size_t>(i)][tt];
        if (val == 0) continue;
        row_op(i, val / s[tt][tt], t);
        if (s[static_cast<std::size_t>(i)][tt] != 0) dirty = true;
      }
      for (Int j = t + 1; j < n; ++j) {
        Wide val = s[tt][static_cast<std::size_t>(j)];
        if (val == 0) continue;
        col_op(j, val / s[tt][tt], t);
        if (s[tt][static_cast<std::size_t>(j)] != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide the rest of the block.
      Int bad_row = -1;
      for (Int i = t + 1; i < m && bad_row < 0; ++i)
        for (Int j = t + 1; j < n; ++j)
          if (s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % s[tt][tt] != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      row_op(t, Wide(-1), bad_row);
    }
    if (t >= steps) break;
    const std::size_t tt = static_cast<std::size_t>(t);
    if (s[tt][tt] < 0) {
      for (auto& val : s[tt]) val = -val;
      for (auto& val : u[tt]) val = -val;
    }
  }

  SmithResult out;
  out.s = Mat::Zero(m, n);
  out.u = Mat::Zero(m, m);
  out.v = Mat::Zero(n, n);
  auto narrow = [](Wide x) {
    if (wabs(x) > Wide(INT64_MAX)) throw std::logic_error("smith_normal_form: entry overflow");
    return static_cast<Int>(x);
  };
  for (Int i = 0; i < m; ++i)
    for (Int j = 0; j < n; ++j) out.s(i, j) = narrow(s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  for (Int i = 0; i < m; ++i)
    for (Int j = 0; j < m; ++j) out.u(i, j) = narrow(u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) out.v(i, j) = narrow(v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return out;
}

Mat congruence_kernel(const Mat& coeffs, Int modulus) {
  if (modulus < 1) throw std::invalid_argument("congruence_kernel: modulus must be positive");
  const Int m = coeffs.rows(), n = coeffs.cols();
  if (n == 0) return Mat(0, 0);
  SmithResult snf = smith_normal_form(coeffs);
  // With w = v^{-1} x the system reads s_i w_i == 0 (mod modulus), so w_i
  // ranges over (modulus / gcd(s_i, modulus)) Z; unconstrained coordinates
  // (past the diagonal, or with s_i = 0) are free.
  Mat basis(n, n);
  for (Int i = 0; i < n; ++i) {
    Int mult = 1;
    if (i < std::min(m, n)) {
      Int si = snf.s(i, i);
      mult = modulus / std::gcd(si, modulus);
    }
    for (Int j = 0; j < n; ++j) {
      Wide prod = Wide(mult) * Wide(snf.v(j, i));
      if (wabs(prod) > Wide(INT64_MAX)) throw std::logic_error("congruence_kernel: entry overflow");
      basis(i, j) = static_cast<Int>(prod);
    }
  }
  return basis;
}

Mat integer_kernel(const Mat& coeffs) {
  const Int m = coeffs.rows(), n = coeffs.cols();
  if (n == 0) return Mat(0, 0);
  SmithResult snf = smith_normal_form(coeffs);
  // With w = v^{-1} x: s_i w_i = 0 over Z, so w_i = 0 wherever s_i != 0.
  std::vector<Int> free_cols;
  for (Int i = 0; i < n; ++i)
    if (i >= std::min(m, n) || snf.s(i, i) == 0) free_cols.push_back(i);
  Mat basis(static_cast<Int>(free_cols.size()), n);
  for (std::size_t r = 0; r < free_cols.size(); ++r)
    for (Int j = 0; j < n; ++j) basis(static_cast<Int>(r), j) = snf.v(j, free_cols[r]);
  return basis;
}

std::vector<Int> nontrivial_smith_diagonal(const Mat& a) {
  SmithResult snf = smith_normal_form(a);
  std::vector<Int> out;
  const Int steps = std::min(a.rows(), a.cols());
  for (Int i = 0; i < steps; ++i)
    if (snf.s(i, i) >= 2) out.push_back(snf.s(i, i));
  return out;
}

}  // namespace precompact
