#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace affsemi {

// Arbitrary-precision signed integer. Everything in the library is exact;
// floating point is never used.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

// cpp_int division truncates toward zero; these round toward -infinity,
// which is what remainder maps and HNF reduction need.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// In [0, |b|).
inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

}  // namespace affsemi
