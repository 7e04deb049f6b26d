#include "precompact/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "precompact/arith.hpp"

namespace precompact {

FiniteAbelianGroup group_from_cyclic_orders(const std::vector<Int>& orders) {
  // Collect, per prime, the multiset of exponents across all cyclic factors.
  std::map<Int, std::vector<Int>> exps;
  std::size_t count = 0;
  for (Int n : orders) {
    if (n < 1) throw std::invalid_argument("cyclic order must be positive");
    for (auto [p, e] : factorize(n)) {
      exps[p].push_back(e);
      count = std::max(count, exps[p].size());
    }
  }
  for (auto& [p, list] : exps) {
    std::sort(list.begin(), list.end(), std::greater<Int>());
    list.resize(count, 0);
  }
  // Invariant factor j (from the top) multiplies the j-th largest exponent of
  // each prime.
  std::vector<Int> factors;
  Wide total = 1;
  for (std::size_t j = 0; j < count; ++j) {
    Wide d = 1;
    for (auto& [p, list] : exps) {
      for (Int i = 0; i < list[j]; ++i) {
        d *= p;
        if (d > Wide(1) << 62) throw std::invalid_argument("group order too large");
      }
    }
    if (d == 1) break;  // remaining factors are all trivial
    total *= d;
    if (total > Wide(1) << 62) throw std::invalid_argument("group order too large");
    factors.push_back(static_cast<Int>(d));
  }
  std::reverse(factors.begin(), factors.end());
  return FiniteAbelianGroup{factors, false};
}

GroupInvariants group_invariants(const FiniteAbelianGroup& g) {
  GroupInvariants inv;
  inv.order = g.order();
  inv.exponent = g.exponent();
  for (Int d : g.factors)
    for (auto [p, e] : factorize(d)) inv.p_ranks[p] += 1;
  return inv;
}

namespace {

void extend_chains(std::vector<Int>& chain, Int max_order, Int used,
                   std::vector<FiniteAbelianGroup>& out) {
  // chain holds a divisibility chain d_k >= ... >= d_1 built top-down.
  Int largest = chain.empty() ? max_order : chain.back();
  for (Int d = 2; d <= largest; ++d) {
    if (used * d > max_order) break;
    if (!chain.empty() && chain.back() % d != 0) continue;
    chain.push_back(d);
    std::vector<Int> factors(chain.rbegin(), chain.rend());
    out.push_back(FiniteAbelianGroup{factors, false});
    extend_chains(chain, max_order, used * d, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<FiniteAbelianGroup> groups_up_to_order(Int max_order) {
  std::vector<FiniteAbelianGroup> out;
  out.push_back(FiniteAbelianGroup{});  // trivial group
  std::vector<Int> chain;
  extend_chains(chain, max_order, 1, out);
  std::sort(out.begin(), out.end(), [](const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.factors < b.factors;
  });
  return out;
}

Vec zero_element(const FiniteAbelianGroup& g) { return Vec::Zero(g.rank()); }

Vec reduce_element(const FiniteAbelianGroup& g, Vec x) {
  for (Int i = 0; i < g.rank(); ++i) {
    x[i] %= g.factors[static_cast<std::size_t>(i)];
    if (x[i] < 0) x[i] += g.factors[static_cast<std::size_t>(i)];
  }
  return x;
}

void validate_element(const FiniteAbelianGroup& g, const Vec& x) {
  if (x.size() != g.rank())
    throw std::invalid_argument("malformed element: expected " + std::to_string(g.rank()) +
                                " coordinates, got " + std::to_string(x.size()));
  for (Int i = 0; i < g.rank(); ++i)
    if (x[i] < 0 || x[i] >= g.factors[static_cast<std::size_t>(i)])
      throw std::invalid_argument("malformed element: coordinate " + std::to_string(i) +
                                  " out of range [0, " +
                                  std::to_string(g.factors[static_cast<std::size_t>(i)]) + ")");
}

Vec add_elements(const FiniteAbelianGroup& g, const Vec& a, const Vec& b) {
  return reduce_element(g, a + b);
}

Vec negate_element(const FiniteAbelianGroup& g, const Vec& a) { return reduce_element(g, -a); }

Vec scale_element(const FiniteAbelianGroup& g, Int m, const Vec& a) {
  Vec out(g.rank());
  for (Int i = 0; i < g.rank(); ++i) {
    Int d = g.factors[static_cast<std::size_t>(i)];
    Int f = m % d;
    if (f < 0) f += d;
    out[i] = (f * (a[i] % d)) % d;
  }
  return out;
}

Int element_order(const FiniteAbelianGroup& g, const Vec& a) {
  Int ord = 1;
  for (Int i = 0; i < g.rank(); ++i) {
    Int d = g.factors[static_cast<std::size_t>(i)];
    ord = std::lcm(ord, d / std::gcd(a[i], d));
  }
  return ord;
}

std::vector<Vec> all_elements(const FiniteAbelianGroup& g) {
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  Vec x = zero_element(g);
  out.push_back(x);
  for (Int n = 1; n < g.order(); ++n) {
    for (Int i = g.rank() - 1; i >= 0; --i) {
      if (++x[i] < g.factors[static_cast<std::size_t>(i)]) break;
      x[i] = 0;
    }
    out.push_back(x);
  }
  return out;
}

Int element_index(const FiniteAbelianGroup& g, const Vec& x) {
  Int idx = 0;
  for (Int i = 0; i < g.rank(); ++i) idx = idx * g.factors[static_cast<std::size_t>(i)] + x[i];
  return idx;
}

Vec element_at(const FiniteAbelianGroup& g, Int index) {
  Vec x(g.rank());
  for (Int i = g.rank() - 1; i >= 0; --i) {
    Int d = g.factors[static_cast<std::size_t>(i)];
    x[i] = index % d;
    index /= d;
  }
  return x;
}

namespace {

void skip_spaces(const std::string& text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

Int parse_integer(const std::string& text, std::size_t& pos) {
  skip_spaces(text, pos);
  std::size_t start = pos;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw ParseError(start, "expected an integer");
  Wide value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > Wide(1) << 62) throw ParseError(start, "integer too large");
    ++pos;
  }
  return negative ? -static_cast<Int>(value) : static_cast<Int>(value);
}

}  // namespace

FiniteAbelianGroup parse_group(const std::string& text) {
  std::size_t pos = 0;
  std::vector<Int> orders;
  while (true) {
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != 'Z') throw ParseError(pos, "expected 'Z'");
    ++pos;
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != '(') throw ParseError(pos, "expected '('");
    ++pos;
    Int n = parse_integer(text, pos);
    if (n < 1) throw ParseError(pos, "cyclic order must be positive");
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != ')') throw ParseError(pos, "expected ')'");
    ++pos;
    orders.push_back(n);
    skip_spaces(text, pos);
    if (pos >= text.size()) break;
    if (text[pos] != 'x') throw ParseError(pos, "expected 'x' between factors");
    ++pos;
  }
  return group_from_cyclic_orders(orders);
}

std::string format_group(const FiniteAbelianGroup& g) {
  if (g.factors.empty()) return "Z(1)";
  std::string out;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    if (i) out += 'x';
    out += "Z(" + std::to_string(g.factors[i]) + ")";
  }
  return out;
}

Vec parse_bracketed_vector(const std::string& text, std::size_t& pos) {
  skip_spaces(text, pos);
  if (pos >= text.size() || text[pos] != '[') throw ParseError(pos, "expected '['");
  ++pos;
  std::vector<Int> coords;
  skip_spaces(text, pos);
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      coords.push_back(parse_integer(text, pos));
      skip_spaces(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError(pos, "expected ',' or ']'");
    }
  }
  Vec out(static_cast<Int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) out[static_cast<Int>(i)] = coords[i];
  return out;
}

Vec parse_element(const std::string& text, const FiniteAbelianGroup& g) {
  std::size_t pos = 0;
  Vec x = parse_bracketed_vector(text, pos);
  skip_spaces(text, pos);
  if (pos != text.size()) throw ParseError(pos, "trailing characters after element");
  validate_element(g, x);
  return x;
}

std::string format_element(const Vec& x) {
  std::string out = "[";
  for (Int i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x[i]);
  }
  return out + "]";
}

}  // namespace precompact
