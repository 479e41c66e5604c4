#pragma once

#include "wps/int_types.hpp"
#include "wps/weights.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <utility>
#include <vector>

namespace wps {

namespace detail {

// Number of e in Z_{>=0}^{n+1} with sum rho_i * e_i = ell, by dynamic
// programming on the generating function prod 1/(1 - x^{rho_i}). Counts are
// exact integers; they outgrow machine words quickly.
inline Int count_nonneg_solutions(const WeightVector& w, const Int& ell) {
  if (ell < 0) return 0;
  require(ell <= Int(std::numeric_limits<long long>::max() / 4),
          "cohomology: twist out of supported range");
  const long long L = ell.convert_to<long long>();
  IntVec table(static_cast<std::size_t>(L) + 1, Int(0));
  table[0] = 1;
  for (const Int& weight : w.rho) {
    if (weight > ell) continue;
    const long long s = weight.convert_to<long long>();
    for (long long v = s; v <= L; ++v)
      table[static_cast<std::size_t>(v)] += table[static_cast<std::size_t>(v - s)];
  }
  return table[static_cast<std::size_t>(L)];
}

// Monomial exponent vectors with nonnegative entries and weighted sum ell,
// in descending lexicographic order.
inline void enumerate_nonneg(const WeightVector& w, std::size_t idx, const Int& remaining,
                             IntVec& cur, std::vector<IntVec>& out) {
  if (idx + 1 == w.size()) {
    if (remaining % w.rho[idx] == 0) {
      cur[idx] = remaining / w.rho[idx];
      out.push_back(cur);
    }
    return;
  }
  for (Int e = remaining / w.rho[idx]; e >= 0; --e) {
    cur[idx] = e;
    enumerate_nonneg(w, idx + 1, remaining - e * w.rho[idx], cur, out);
  }
}

}  // namespace detail

// dim H^i(P(rho), O(ell)): the count of monomials with nonnegative exponents
// for i = 0 and ell >= 0, the count with strictly negative exponents for
// i = n and ell < 0 (via e_i -> -1 - e_i this is the nonnegative count at
// -ell - sum(rho)), and zero elsewhere. The same formulas compute the stack
// cohomology.
inline Int h_dim(const WeightVector& w, int i, const Int& ell) {
  require(i >= 0 && i <= w.n(), "h_dim: cohomological degree out of range");
  if (i == 0 && ell >= 0) return detail::count_nonneg_solutions(w, ell);
  if (i == w.n() && ell < 0) {
    Int sum = 0;
    for (const Int& r : w.rho) sum += r;
    return detail::count_nonneg_solutions(w, -ell - sum);
  }
  return 0;
}

// Exponent vectors of the monomial basis, descending lexicographic. Bases are
// materialized only when the dimension is at most `guard`.
inline std::vector<IntVec> monomial_basis(const WeightVector& w, int i, const Int& ell,
                                          const Int& guard = Int(1000000)) {
  Int dim = h_dim(w, i, ell);  // also validates i
  require(dim <= guard, "monomial_basis: basis larger than materialization guard");
  std::vector<IntVec> out;
  if (dim == 0) return out;
  IntVec cur(w.size());
  if (i == 0) {
    detail::enumerate_nonneg(w, 0, ell, cur, out);
  } else {
    Int sum = 0;
    for (const Int& r : w.rho) sum += r;
    detail::enumerate_nonneg(w, 0, -ell - sum, cur, out);
    // e = -1 - f reverses the lexicographic order
    for (IntVec& e : out)
      for (Int& x : e) x = -1 - x;
    std::reverse(out.begin(), out.end());
  }
  check_internal(Int(out.size()) == dim, "monomial_basis: count mismatch");
  return out;
}

// Table of dimensions over a twist range; rows exist for i = 0 and i = n
// (all other degrees vanish identically). The stack variant carries the same
// numbers and only tags reports.
struct CohomologyTable {
  WeightVector weights;
  bool stack_variant = false;
  std::map<std::pair<int, long long>, Int> rows;
  std::map<std::pair<int, long long>, std::vector<IntVec>> bases;
};

inline CohomologyTable cohomology_table(const WeightVector& w, long long ell_lo,
                                        long long ell_hi, bool with_bases = false,
                                        bool stack_variant = false) {
  require(ell_lo <= ell_hi, "cohomology_table: empty range");
  CohomologyTable t;
  t.weights = w;
  t.stack_variant = stack_variant;
  for (long long ell = ell_lo; ell <= ell_hi; ++ell) {
    for (int i : {0, w.n()}) {
      t.rows[{i, ell}] = h_dim(w, i, Int(ell));
      if (with_bases) t.bases[{i, ell}] = monomial_basis(w, i, Int(ell));
      if (w.n() == 0) break;
    }
  }
  return t;
}

}  // namespace wps
