#include "precompact/arith.hpp"

#include <algorithm>

namespace precompact {

std::vector<std::pair<Int, Int>> factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<Int, Int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      Int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Int valuation(Int n, Int p) {
  Int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace precompact
