#include "precompact/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "precompact/arith.hpp"

namespace precompact {

namespace {

Vec moduli_of(const FiniteAbelianGroup& g) {
  Vec d(g.rank());
  for (Int i = 0; i < g.rank(); ++i) d[i] = g.factors[static_cast<std::size_t>(i)];
  return d;
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw std::invalid_argument("subgroup parents differ");
}

// Solves y^T * basis = row for each requested row; exact by construction
// whenever the rows lie in the span of the (triangular) basis.
Mat express_in_basis(const Mat& basis, const Mat& rows) {
  const Int k = basis.rows();
  Mat out(rows.rows(), k);
  for (Int r = 0; r < rows.rows(); ++r) {
    std::vector<Wide> rem(static_cast<std::size_t>(k));
    for (Int j = 0; j < k; ++j) rem[static_cast<std::size_t>(j)] = rows(r, j);
    for (Int i = 0; i < k; ++i) {
      Wide p = basis(i, i);
      Wide q = rem[static_cast<std::size_t>(i)] / p;
      if (rem[static_cast<std::size_t>(i)] % p != 0)
        throw std::logic_error("express_in_basis: row outside span");
      out(r, i) = static_cast<Int>(q);
      for (Int j = i; j < k; ++j) rem[static_cast<std::size_t>(j)] -= q * basis(i, j);
    }
  }
  return out;
}

}  // namespace

Subgroup subgroup_from_rows(const FiniteAbelianGroup& parent, const Mat& rows) {
  Subgroup h;
  h.parent = parent;
  h.basis = lattice_normal_form(rows, moduli_of(parent));
  h.order = 1;
  for (Int i = 0; i < parent.rank(); ++i)
    h.order *= parent.factors[static_cast<std::size_t>(i)] / h.basis(i, i);
  return h;
}

Subgroup trivial_subgroup(const FiniteAbelianGroup& g) { return subgroup_from_rows(g, Mat(0, g.rank())); }

Subgroup full_subgroup(const FiniteAbelianGroup& g) {
  Mat rows = Mat::Identity(g.rank(), g.rank());
  return subgroup_from_rows(g, rows);
}

Subgroup canonicalize_subgroup(const FiniteAbelianGroup& parent, const std::vector<Vec>& generators) {
  Mat rows(static_cast<Int>(generators.size()), parent.rank());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    validate_element(parent, generators[i]);
    rows.row(static_cast<Int>(i)) = generators[i].transpose();
  }
  return subgroup_from_rows(parent, rows);
}

bool membership(const Subgroup& h, const Vec& x) {
  validate_element(h.parent, x);
  return lattice_contains(h.basis, x);
}

bool subgroup_contains(const Subgroup& outer, const Subgroup& inner) {
  require_same_parent(outer, inner);
  for (Int r = 0; r < inner.basis.rows(); ++r)
    if (!lattice_contains(outer.basis, inner.basis.row(r).transpose())) return false;
  return true;
}

bool is_trivial(const Subgroup& h) { return h.order == 1; }
bool is_full(const Subgroup& h) { return h.order == h.parent.order(); }

Subgroup subgroup_sum(const Subgroup& h1, const Subgroup& h2) {
  require_same_parent(h1, h2);
  const Int k = h1.parent.rank();
  Mat rows(h1.basis.rows() + h2.basis.rows(), k);
  rows << h1.basis, h2.basis;
  return subgroup_from_rows(h1.parent, rows);
}

Subgroup subgroup_intersection(const Subgroup& h1, const Subgroup& h2) {
  require_same_parent(h1, h2);
  const Int k = h1.parent.rank();
  if (k == 0) return h1;
  // x in L1 ∩ L2 iff x = a^T B1 = b^T B2; stack the two bases and take the
  // integer kernel in the (a, b) coefficients.
  Mat stacked(k, 2 * k);
  stacked << h1.basis.transpose(), -h2.basis.transpose();
  Mat kernel = integer_kernel(stacked);
  Mat rows(kernel.rows(), k);
  for (Int r = 0; r < kernel.rows(); ++r) {
    for (Int j = 0; j < k; ++j) {
      Wide acc = 0;
      for (Int i = 0; i < k; ++i) acc += Wide(kernel(r, i)) * Wide(h1.basis(i, j));
      Wide d = h1.parent.factors[static_cast<std::size_t>(j)];
      acc %= d;
      if (acc < 0) acc += d;
      rows(r, j) = static_cast<Int>(acc);
    }
  }
  return subgroup_from_rows(h1.parent, rows);
}

Vec QuotientResult::project(const Vec& x) const {
  const Int k = transform.rows();
  Vec y(quotient.rank());
  Int out = 0;
  for (Int i = 0; i < k; ++i) {
    Wide acc = 0;
    for (Int j = 0; j < k; ++j) acc += Wide(transform(i, j)) * Wide(x[j]);
    Int s = moduli[static_cast<std::size_t>(i)];
    if (s >= 2) {
      Wide r = acc % s;
      if (r < 0) r += s;
      y[out++] = static_cast<Int>(r);
    }
  }
  return y;
}

QuotientResult quotient_group(const FiniteAbelianGroup& g, const Subgroup& h) {
  if (h.parent != g) throw std::invalid_argument("quotient_group: subgroup of a different group");
  const Int k = g.rank();
  // G/H is Z^k modulo the subgroup lattice; Smith form of the (transposed)
  // basis splits it into cyclic coordinates.
  SmithResult snf = smith_normal_form(h.basis.transpose());
  QuotientResult out;
  out.transform = snf.u;
  std::vector<Int> nontrivial;
  for (Int i = 0; i < k; ++i) {
    out.moduli.push_back(snf.s(i, i));
    if (snf.s(i, i) >= 2) nontrivial.push_back(snf.s(i, i));
  }
  out.quotient = FiniteAbelianGroup{nontrivial, g.dual_marker};
  return out;
}

std::vector<Vec> subgroup_elements(const Subgroup& h) {
  const Int k = h.parent.rank();
  std::vector<Int> ranges(static_cast<std::size_t>(k));
  for (Int i = 0; i < k; ++i)
    ranges[static_cast<std::size_t>(i)] = h.parent.factors[static_cast<std::size_t>(i)] / h.basis(i, i);
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(h.order));
  std::vector<Int> a(static_cast<std::size_t>(k), 0);
  while (true) {
    Vec x = Vec::Zero(k);
    for (Int i = 0; i < k; ++i)
      if (a[static_cast<std::size_t>(i)] != 0)
        x += a[static_cast<std::size_t>(i)] * h.basis.row(i).transpose();
    out.push_back(reduce_element(h.parent, x));
    Int i = k - 1;
    for (; i >= 0; --i) {
      if (++a[static_cast<std::size_t>(i)] < ranges[static_cast<std::size_t>(i)]) break;
      a[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end(), vec_less);
  return out;
}

std::vector<Vec> reduced_generators(const Subgroup& h) {
  std::vector<Vec> gens;
  for (Int r = 0; r < h.basis.rows(); ++r) {
    Vec g = reduce_element(h.parent, h.basis.row(r).transpose());
    if (g.size() > 0 && !vec_eq(g, zero_element(h.parent))) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end(), vec_less);
  gens.erase(std::unique(gens.begin(), gens.end(), vec_eq), gens.end());
  return gens;
}

std::vector<Int> subgroup_invariant_factors(const Subgroup& h) {
  const Int k = h.parent.rank();
  Mat d = Mat::Zero(k, k);
  for (Int i = 0; i < k; ++i) d(i, i) = h.parent.factors[static_cast<std::size_t>(i)];
  // H is the coordinate lattice modulo diag(d); rewrite diag(d) in the basis
  // of the lattice and read the cyclic structure off the Smith diagonal.
  return nontrivial_smith_diagonal(express_in_basis(h.basis, d));
}

std::vector<Int> quotient_invariant_factors(const Subgroup& outer, const Subgroup& inner) {
  require_same_parent(outer, inner);
  if (!subgroup_contains(outer, inner))
    throw std::invalid_argument("quotient_invariant_factors: not a nested pair");
  return nontrivial_smith_diagonal(express_in_basis(outer.basis, inner.basis));
}

bool embeds_in(const std::vector<Int>& a, const std::vector<Int>& b) {
  // Per prime, the descending exponent lists must dominate pointwise.
  std::map<Int, std::vector<Int>> ea, eb;
  for (Int d : a)
    for (auto [p, e] : factorize(d)) ea[p].push_back(e);
  for (Int d : b)
    for (auto [p, e] : factorize(d)) eb[p].push_back(e);
  for (auto& [p, list] : ea) {
    std::sort(list.begin(), list.end(), std::greater<Int>());
    auto it = eb.find(p);
    std::vector<Int> other = it == eb.end() ? std::vector<Int>{} : it->second;
    std::sort(other.begin(), other.end(), std::greater<Int>());
    if (list.size() > other.size()) return false;
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i] > other[i]) return false;
  }
  return true;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order != b.order) return a.order < b.order;
  std::vector<Vec> ea = subgroup_elements(a), eb = subgroup_elements(b);
  for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
    if (!vec_eq(ea[i], eb[i])) return vec_less(ea[i], eb[i]);
  }
  return false;
}

std::string subgroup_key(const Subgroup& h) {
  std::string key;
  for (Int d : h.parent.factors) key += std::to_string(d) + ".";
  key += h.parent.dual_marker ? "^|" : "|";
  for (Int i = 0; i < h.basis.rows(); ++i)
    for (Int j = 0; j < h.basis.cols(); ++j) key += std::to_string(h.basis(i, j)) + ",";
  return key;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, Int bound) {
  if (g.order() > bound) throw CapacityError(g.order(), bound);
  std::vector<Vec> elems = all_elements(g);
  std::vector<Subgroup> found;
  std::unordered_map<std::string, std::size_t> seen;
  std::deque<std::size_t> frontier;

  Subgroup triv = trivial_subgroup(g);
  seen.emplace(subgroup_key(triv), 0);
  found.push_back(std::move(triv));
  frontier.push_back(0);

  const Int k = g.rank();
  while (!frontier.empty()) {
    std::size_t idx = frontier.front();
    frontier.pop_front();
    Mat base = found[idx].basis;
    for (const Vec& e : elems) {
      Mat rows(k + 1, k);
      if (k > 0) {
        rows.topRows(k) = base;
        rows.row(k) = e.transpose();
      }
      Subgroup next = subgroup_from_rows(g, rows);
      auto [it, fresh] = seen.emplace(subgroup_key(next), found.size());
      if (fresh) {
        found.push_back(next);
        frontier.push_back(it->second);
      }
    }
  }

  // Order by (order, lexicographic element list); precompute the keys.
  std::vector<std::pair<std::vector<Vec>, std::size_t>> keys;
  keys.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) keys.emplace_back(subgroup_elements(found[i]), i);
  std::sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
    if (found[x.second].order != found[y.second].order)
      return found[x.second].order < found[y.second].order;
    for (std::size_t i = 0; i < x.first.size() && i < y.first.size(); ++i)
      if (!vec_eq(x.first[i], y.first[i])) return vec_less(x.first[i], y.first[i]);
    return false;
  });
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& [key, i] : keys) out.push_back(std::move(found[i]));
  return out;
}

Subgroup parse_subgroup(const std::string& text, const FiniteAbelianGroup& g) {
  std::size_t pos = 0;
  if (text.compare(pos, 5, "gens=") != 0) throw ParseError(pos, "expected 'gens='");
  pos += 5;
  std::vector<Vec> gens;
  if (pos < text.size()) {
    while (true) {
      Vec x = parse_bracketed_vector(text, pos);
      validate_element(g, x);
      gens.push_back(x);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  if (pos != text.size()) throw ParseError(pos, "trailing characters in subgroup spec");
  return canonicalize_subgroup(g, gens);
}

std::string format_subgroup(const Subgroup& h) {
  std::string out = "gens=";
  std::vector<Vec> gens = reduced_generators(h);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += format_element(gens[i]);
  }
  return out;
}

}  // namespace precompact
