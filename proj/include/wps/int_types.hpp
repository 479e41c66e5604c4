#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace wps {

// Exact arbitrary-precision integer. Every computation in this library is
// exact; fixed-width overflow is not permitted anywhere.
using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

// Caller-facing precondition failures. The CLI maps these to exit code 1.
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Internal invariant failures (bugs). The CLI maps these to exit code 2.
inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error("internal: " + msg);
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int((a / gcd_int(a, b)) * b);
}

inline Int gcd_all(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  return g;
}

inline Int lcm_all(const IntVec& v) {
  Int m = 1;
  for (const Int& x : v) m = lcm_int(m, x);
  return m;
}

// g = gcd(a,b) >= 0 together with Bezout coefficients a*x + b*y = g.
inline Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int xn = x0 - q * x1;
    x0 = x1;
    x1 = xn;
    Int yn = y0 - q * y1;
    y0 = y1;
    y1 = yn;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

// Representative of a mod m in [0, m); m >= 1.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Inverse of a mod m; requires gcd(a, m) = 1, m >= 1.
inline Int mod_inverse(const Int& a, const Int& m) {
  if (m == 1) return 0;
  Int x, y;
  Int g = ext_gcd(mod_floor(a, m), m, x, y);
  check_internal(g == 1, "mod_inverse: arguments not coprime");
  return mod_floor(x, m);
}

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Largest e with p^e dividing a; a != 0.
inline int p_valuation(Int a, const Int& p) {
  check_internal(a != 0, "p_valuation of zero");
  a = abs_int(a);
  int e = 0;
  while (a % p == 0) {
    a /= p;
    ++e;
  }
  return e;
}

}  // namespace wps
