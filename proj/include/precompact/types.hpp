#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace precompact {

using Int = std::int64_t;
using Wide = __int128;

// Dense integer types; every computation in the library is exact.
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

inline bool vec_eq(const Vec& a, const Vec& b) {
  return a.size() == b.size() && (a.size() == 0 || (a.array() == b.array()).all());
}

inline bool mat_eq(const Mat& a, const Mat& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.size() == 0 || (a.array() == b.array()).all());
}

// Lexicographic order on coordinate vectors of equal length.
inline bool vec_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

constexpr Int kDefaultEnumerationBound = 256;

/// Raised when an exhaustive operation is asked to run past the configured
/// enumeration bound.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(Int order, Int bound)
      : std::runtime_error("group order " + std::to_string(order) +
                           " exceeds enumeration bound " + std::to_string(bound)),
        order_(order),
        bound_(bound) {}

  Int order() const { return order_; }
  Int bound() const { return bound_; }

 private:
  Int order_;
  Int bound_;
};

/// Parse failure with the byte offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("at position " + std::to_string(pos) + ": " + what),
        pos_(pos) {}

  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace precompact
