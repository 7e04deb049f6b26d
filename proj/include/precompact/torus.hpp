#pragma once

#include <numeric>
#include <string>

#include "precompact/types.hpp"

namespace precompact {

/// An element of Q/Z as a reduced fraction num/den with 0 <= num < den.
/// The zero element is 0/1. Addition is rational addition mod 1; the order of
/// a value equals its denominator.
struct TorusValue {
  Int num = 0;
  Int den = 1;

  static TorusValue make(Int numerator, Int denominator) {
    if (denominator <= 0) throw std::invalid_argument("torus denominator must be positive");
    Int n = numerator % denominator;
    if (n < 0) n += denominator;
    Int g = std::gcd(n, denominator);
    return TorusValue{n / g, denominator / g};
  }

  bool is_zero() const { return num == 0; }
  Int order() const { return den; }

  friend TorusValue operator+(const TorusValue& a, const TorusValue& b) {
    // den <= 2^31 in practice, so the cross products stay inside Int.
    return make(a.num * b.den + b.num * a.den, a.den * b.den);
  }

  friend TorusValue operator-(const TorusValue& a) { return make(-a.num, a.den); }

  friend TorusValue operator*(Int m, const TorusValue& a) {
    Int f = m % a.den;
    if (f < 0) f += a.den;
    return make(f * a.num, a.den);
  }

  friend bool operator==(const TorusValue& a, const TorusValue& b) {
    return a.num == b.num && a.den == b.den;
  }

  friend bool operator<(const TorusValue& a, const TorusValue& b) {
    return a.num * b.den < b.num * a.den;
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace precompact
