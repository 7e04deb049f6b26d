#include "precompact/zee.hpp"

#include <cctype>

namespace precompact {

bool descriptor_hausdorff(const TorusSubgroupDesc& s) {
  return s.torsion.is_infinite() || s.free_rank != 0;
}

bool c_set_contains(const TorusSubgroupDesc& s, Int n) {
  if (n < 1)
    throw std::invalid_argument("c_set_contains: n must be >= 1 (use closure_int for {0})");
  return s.torsion.divides(n);
}

IntSubgroup closure_int(const TorusSubgroupDesc& s, IntSubgroup h) {
  if (h.k < 0) throw std::invalid_argument("closure_int: negative subgroup index");
  if (h.k == 0) {
    if (s.torsion.is_finite() && s.free_rank == 0) return IntSubgroup{s.torsion.value()};
    return IntSubgroup{0};
  }
  Wide t = 1;
  for (auto [p, e] : factorize(h.k)) {
    Int a = s.torsion.exponent_of(p);
    Int reach = (a == SupernaturalNumber::kInfinity || a > e) ? e : a;
    for (Int i = 0; i < reach; ++i) t *= p;
  }
  return IntSubgroup{static_cast<Int>(t)};
}

bool is_closed_int(const TorusSubgroupDesc& s, IntSubgroup h) {
  return closure_int(s, h) == h;
}

bool is_dense_int(const TorusSubgroupDesc& s, IntSubgroup h) {
  if (h.k == 0 || h.k == 1) return closure_int(s, h).k == 1;
  bool by_closure = closure_int(s, h).k == 1;
  bool not_in_c = !c_set_contains(s, h.k);
  bool no_proper_divisor = true;
  for (auto [p, e] : factorize(h.k))
    if (s.torsion.exponent_of(p) != 0) {
      no_proper_divisor = false;
      break;
    }
  bool by_conditions = not_in_c && no_proper_divisor;
  if (by_closure != by_conditions)
    throw std::logic_error("is_dense_int: closure and divisibility routes disagree");
  return by_closure;
}

TorusSubgroupDesc m_s(const TorusSubgroupDesc& s) { return TorusSubgroupDesc{s.torsion, 0}; }

TorusSubgroupDesc M_s(const TorusSubgroupDesc& s) {
  return TorusSubgroupDesc{s.torsion, kContinuum};
}

ZClassification classify_int(const TorusSubgroupDesc& s) {
  ZClassification out;
  out.hausdorff = descriptor_hausdorff(s);
  out.sc = s.torsion.is_all_infinite();
  out.topologically_simple = s.torsion.is_trivial();
  out.has_nontrivial_closed = !s.torsion.is_trivial();
  out.family_descriptor = s.torsion;
  return out;
}

TorusSubgroupDesc parse_descriptor(const std::string& text) {
  if (text.compare(0, 5, "tors=") != 0) throw ParseError(0, "expected 'tors='");
  std::size_t comma = text.find(",free=");
  if (comma == std::string::npos) throw ParseError(text.size(), "expected ',free='");
  TorusSubgroupDesc out;
  out.torsion = parse_supernatural(text.substr(5, comma - 5));
  std::string free = text.substr(comma + 6);
  if (free == "c") {
    out.free_rank = kContinuum;
  } else {
    if (free.empty()) throw ParseError(comma + 6, "expected a free rank");
    for (char ch : free)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError(comma + 6, "free rank must be a number or 'c'");
    out.free_rank = std::stoll(free);
  }
  return out;
}

std::string format_descriptor(const TorusSubgroupDesc& s) {
  std::string free = s.free_rank == kContinuum ? "c" : std::to_string(s.free_rank);
  return "tors=" + format_supernatural(s.torsion) + ",free=" + free;
}

IntSubgroup parse_int_subgroup(const std::string& text) {
  if (text == "Z") return IntSubgroup{1};
  if (text.empty() || text.back() != 'Z') throw ParseError(text.size(), "expected trailing 'Z'");
  std::string digits = text.substr(0, text.size() - 1);
  if (digits.empty()) throw ParseError(0, "expected a coefficient before 'Z'");
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError(0, "subgroup coefficient must be a non-negative integer");
  return IntSubgroup{std::stoll(digits)};
}

std::string format_int_subgroup(IntSubgroup h) { return std::to_string(h.k) + "Z"; }

}  // namespace precompact
