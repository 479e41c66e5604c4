#pragma once

#include "wps/int_matrix.hpp"
#include "wps/int_types.hpp"
#include "wps/smith.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>

namespace wps {

// Finitely generated abelian group in canonical form: free rank plus an
// ascending chain of invariant factors t1 | t2 | ..., each >= 2. Two groups
// are isomorphic exactly when the fields agree.
struct FgAbelianGroup {
  std::size_t free_rank = 0;
  IntVec torsion;

  bool operator==(const FgAbelianGroup&) const = default;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }

  Int torsion_order() const {
    Int o = 1;
    for (const Int& t : torsion) o *= t;
    return o;
  }

  std::string str() const {
    if (is_trivial()) return "0";
    std::string s;
    if (free_rank == 1) s = "Z";
    if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (const Int& t : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + t.str();
    }
    return s;
  }
};

// Z^rows / column-span(m) in canonical form.
inline FgAbelianGroup cokernel(const IntMat& m) {
  SmithDecomposition s = smith_normal_form(m);
  FgAbelianGroup g;
  g.free_rank = m.rows() - s.rank();
  for (const Int& f : s.invariant_factors)
    if (f >= 2) g.torsion.push_back(f);
  return g;
}

// Free rank plus the p-primary torsion of g.
inline FgAbelianGroup localize_at_prime(const FgAbelianGroup& g, const Int& p) {
  require(is_prime(p), "localize_at_prime: p is not prime");
  FgAbelianGroup out;
  out.free_rank = g.free_rank;
  for (const Int& t : g.torsion) {
    Int q = 1, r = t;
    while (r % p == 0) {
      r /= p;
      q *= p;
    }
    if (q >= 2) out.torsion.push_back(q);
  }
  return out;
}

// Canonical form of free_rank copies of Z plus one cyclic group Z/o per
// listed order (orders may be arbitrary positive integers).
inline FgAbelianGroup from_cyclic_orders(std::size_t free_rank, const IntVec& orders) {
  std::map<Int, IntVec> exps;  // prime -> exponents, later sorted descending
  for (Int o : orders) {
    check_internal(o >= 1, "from_cyclic_orders: nonpositive order");
    for (Int d = 2; d * d <= o; ++d) {
      if (o % d != 0) continue;
      Int pe = 1;
      while (o % d == 0) {
        o /= d;
        pe *= d;
      }
      exps[d].push_back(pe);
    }
    if (o >= 2) exps[o].push_back(o);
  }
  std::size_t slots = 0;
  for (auto& [p, v] : exps) {
    std::sort(v.begin(), v.end(), [](const Int& a, const Int& b) { return a > b; });
    slots = std::max(slots, v.size());
  }
  IntVec factors(slots, Int(1));  // factors[0] is the largest invariant factor
  for (const auto& [p, v] : exps)
    for (std::size_t k = 0; k < v.size(); ++k) factors[k] *= v[k];
  FgAbelianGroup g;
  g.free_rank = free_rank;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    if (*it >= 2) g.torsion.push_back(*it);
  return g;
}

// Kernel of multiplication by d (d >= 1): Z/t contributes Z/gcd(t, d), free
// summands contribute nothing.
inline FgAbelianGroup multiplication_kernel(const FgAbelianGroup& g, const Int& d) {
  require(d >= 1, "multiplication_kernel: d must be positive");
  FgAbelianGroup out;
  for (const Int& t : g.torsion) {
    Int k = gcd_int(t, d);
    if (k >= 2) out.torsion.push_back(k);
  }
  return out;
}

}  // namespace wps
