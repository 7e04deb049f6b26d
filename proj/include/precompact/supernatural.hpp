#pragma once

#include <map>
#include <string>
#include <vector>

#include "precompact/arith.hpp"
#include "precompact/types.hpp"

namespace precompact {

/// A formal product prod_p p^(a_p) with exponents in N union {infinity} and a
/// default exponent (0 or infinity) for primes absent from the map. Map
/// entries never equal the default, so the representation is canonical.
/// Encodes a subgroup of Q/Z by its divisor set {n : n divides the product}.
struct SupernaturalNumber {
  static constexpr Int kInfinity = -1;

  Int default_exponent = 0;  // 0 or kInfinity
  std::map<Int, Int> exponents;

  static SupernaturalNumber one() { return SupernaturalNumber{}; }
  static SupernaturalNumber all_primes_infinite() { return SupernaturalNumber{kInfinity, {}}; }
  static SupernaturalNumber from_integer(Int n);
  static SupernaturalNumber make(Int default_exponent, std::map<Int, Int> exponents);

  Int exponent_of(Int p) const {
    auto it = exponents.find(p);
    return it == exponents.end() ? default_exponent : it->second;
  }

  /// Whether the positive integer n divides this supernatural number.
  bool divides(Int n) const;

  bool is_finite() const;
  /// The integer value when finite.
  Int value() const;
  bool is_trivial() const { return default_exponent == 0 && exponents.empty(); }
  bool is_all_infinite() const { return default_exponent == kInfinity && exponents.empty(); }
  bool is_infinite() const { return !is_finite(); }

  friend bool operator==(const SupernaturalNumber& a, const SupernaturalNumber& b) {
    return a.default_exponent == b.default_exponent && a.exponents == b.exponents;
  }
  friend bool operator!=(const SupernaturalNumber& a, const SupernaturalNumber& b) {
    return !(a == b);
  }
};

Int lcm_pair(Int a, Int b);
Int lcm_set(const std::vector<Int>& f);

/// The supernatural number whose divisor set is the lcm-closure of C (all
/// divisors of lcms of finite subsets). Always finite, with value lcm(C).
SupernaturalNumber lcm_closure(const std::vector<Int>& c);

// Grammar: `1`, `all`, `2^3*5^inf`, exponent 1 printed bare (`3`), default-
// infinity exceptions as `all*2^3` or `all*7^0`.
SupernaturalNumber parse_supernatural(const std::string& text);
std::string format_supernatural(const SupernaturalNumber& s);

}  // namespace precompact
