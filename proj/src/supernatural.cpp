#include "precompact/supernatural.hpp"

#include <cctype>
#include <numeric>

namespace precompact {

SupernaturalNumber SupernaturalNumber::make(Int default_exponent, std::map<Int, Int> exponents) {
  if (default_exponent != 0 && default_exponent != kInfinity)
    throw std::invalid_argument("supernatural default exponent must be 0 or infinity");
  for (auto it = exponents.begin(); it != exponents.end();) {
    if (it->second == default_exponent)
      it = exponents.erase(it);
    else
      ++it;
  }
  return SupernaturalNumber{default_exponent, std::move(exponents)};
}

SupernaturalNumber SupernaturalNumber::from_integer(Int n) {
  if (n < 1) throw std::invalid_argument("supernatural value must be positive");
  std::map<Int, Int> exps;
  for (auto [p, e] : factorize(n)) exps[p] = e;
  return make(0, std::move(exps));
}

bool SupernaturalNumber::divides(Int n) const {
  if (n < 1) throw std::invalid_argument("divides: argument must be positive");
  for (auto [p, e] : factorize(n)) {
    Int a = exponent_of(p);
    if (a != kInfinity && e > a) return false;
  }
  return true;
}

bool SupernaturalNumber::is_finite() const {
  if (default_exponent != 0) return false;
  for (auto& [p, e] : exponents)
    if (e == kInfinity) return false;
  return true;
}

Int SupernaturalNumber::value() const {
  if (!is_finite()) throw std::invalid_argument("supernatural number is infinite");
  Wide v = 1;
  for (auto& [p, e] : exponents)
    for (Int i = 0; i < e; ++i) {
      v *= p;
      if (v > Wide(1) << 62) throw std::invalid_argument("supernatural value overflows");
    }
  return static_cast<Int>(v);
}

Int lcm_pair(Int a, Int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("lcm: arguments must be positive");
  return std::lcm(a, b);
}

Int lcm_set(const std::vector<Int>& f) {
  if (f.empty()) throw std::invalid_argument("lcm of the empty set is undefined");
  Int acc = 1;
  for (Int n : f) acc = lcm_pair(acc, n);
  return acc;
}

SupernaturalNumber lcm_closure(const std::vector<Int>& c) {
  std::map<Int, Int> exps;
  for (Int n : c) {
    if (n < 1) throw std::invalid_argument("lcm_closure: elements must be positive");
    for (auto [p, e] : factorize(n)) {
      auto [it, fresh] = exps.emplace(p, e);
      if (!fresh && e > it->second) it->second = e;
    }
  }
  return SupernaturalNumber::make(0, std::move(exps));
}

namespace {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Int parse_number(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw ParseError(start, "expected a number");
  Wide value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > Wide(1) << 62) throw ParseError(start, "number too large");
    ++pos;
  }
  return static_cast<Int>(value);
}

}  // namespace

SupernaturalNumber parse_supernatural(const std::string& text) {
  std::size_t pos = 0;
  Int def = 0;
  std::map<Int, Int> exps;
  if (text.compare(0, 3, "all") == 0) {
    def = SupernaturalNumber::kInfinity;
    pos = 3;
    if (pos < text.size()) {
      if (text[pos] != '*') throw ParseError(pos, "expected '*' after 'all'");
      ++pos;
    }
  } else if (text == "1") {
    return SupernaturalNumber::one();
  }
  while (pos < text.size()) {
    std::size_t p_pos = pos;
    Int p = parse_number(text, pos);
    if (!is_prime(p)) throw ParseError(p_pos, "base must be prime");
    Int e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (text.compare(pos, 3, "inf") == 0) {
        e = SupernaturalNumber::kInfinity;
        pos += 3;
      } else {
        e = parse_number(text, pos);
      }
    }
    if (exps.count(p)) throw ParseError(p_pos, "duplicate prime");
    exps[p] = e;
    if (pos < text.size()) {
      if (text[pos] != '*') throw ParseError(pos, "expected '*'");
      ++pos;
      if (pos == text.size()) throw ParseError(pos, "trailing '*'");
    }
  }
  if (def == 0 && exps.empty() && text != "1") throw ParseError(0, "empty supernatural number");
  return SupernaturalNumber::make(def, std::move(exps));
}

std::string format_supernatural(const SupernaturalNumber& s) {
  std::string out;
  if (s.default_exponent == SupernaturalNumber::kInfinity) {
    out = "all";
    for (auto& [p, e] : s.exponents) {
      out += "*" + std::to_string(p);
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }
  if (s.exponents.empty()) return "1";
  bool first = true;
  for (auto& [p, e] : s.exponents) {
    if (!first) out += "*";
    first = false;
    out += std::to_string(p);
    if (e == SupernaturalNumber::kInfinity)
      out += "^inf";
    else if (e != 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace precompact
