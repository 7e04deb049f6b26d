#pragma once

#include <utility>
#include <vector>

#include "precompact/types.hpp"

namespace precompact {

/// Prime factorization (p, exponent) with primes ascending. n >= 1.
std::vector<std::pair<Int, Int>> factorize(Int n);

/// p-adic valuation of n (n >= 1, p prime).
Int valuation(Int n, Int p);

/// All positive divisors of n, ascending.
std::vector<Int> divisors(Int n);

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace precompact
