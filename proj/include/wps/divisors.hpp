#pragma once

#include "wps/abelian.hpp"
#include "wps/fan.hpp"
#include "wps/int_matrix.hpp"
#include "wps/int_types.hpp"
#include "wps/linear_solve.hpp"
#include "wps/smith.hpp"
#include "wps/weights.hpp"

#include <cstddef>
#include <utility>

namespace wps {

// Class group of the fan: cokernel of the ray pairing Z^n -> Z^{n+1}. For
// weighted projective fans this is free of rank one; ray_degrees are the
// classes of the ray divisors under the orientation that makes them positive.
struct ClassGroupData {
  FgAbelianGroup group;
  IntVec ray_degrees;
};

inline ClassGroupData class_group(const Fan& fan) {
  const std::size_t m = fan.weights.size();
  SmithDecomposition s = smith_normal_form(fan.y);
  check_internal(s.rank() == fan.y.cols(), "class_group: ray matrix is rank deficient");
  for (const Int& f : s.invariant_factors)
    check_internal(f == 1, "class_group: rays do not span the lattice");

  ClassGroupData out;
  out.group = FgAbelianGroup{1, {}};
  // the free coordinate of coker(Y) is the last row of L; its value on the
  // j-th standard basis vector is the degree of the j-th ray divisor
  out.ray_degrees.resize(m);
  for (std::size_t j = 0; j < m; ++j) out.ray_degrees[j] = s.l.at(m - 1, j);
  for (std::size_t j = 0; j < m; ++j) {
    if (out.ray_degrees[j] == 0) continue;
    if (out.ray_degrees[j] < 0)
      for (Int& d : out.ray_degrees) d = -d;
    break;
  }
  for (const Int& d : out.ray_degrees)
    check_internal(d > 0, "class_group: mixed-sign ray degrees");
  return out;
}

struct PicardData {
  Int cartier_subgroup_generator_degree;
  Int index_in_class_group;
};

namespace detail {

// Compatibility constraints for Cartier data (m_0,...,m_n), m_j in Z^n: for
// every ray i shared by two maximal cones the pairings <m_j, v_i> agree.
// Unknowns are the n*(n+1) coordinates of the m_j, block j at columns [j*n).
inline IntMat cartier_constraints(const Fan& fan) {
  const std::size_t m = fan.weights.size();  // number of cones and of rays
  const std::size_t n = m - 1;
  IntMat c((m) * (n >= 1 ? n - 1 : 0), m * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ref = (i == 0) ? 1 : 0;  // reference cone containing ray i
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i || j == ref) continue;
      for (std::size_t cidx = 0; cidx < n; ++cidx) {
        c.at(row, j * n + cidx) = fan.y.at(i, cidx);
        c.at(row, ref * n + cidx) = -fan.y.at(i, cidx);
      }
      ++row;
    }
  }
  check_internal(row == c.rows(), "cartier_constraints: row count mismatch");
  return c;
}

// Weil divisor of a compatible tuple: a_i = <m_{ref(i)}, v_i>.
inline IntMat cartier_to_divisor(const Fan& fan) {
  const std::size_t m = fan.weights.size();
  const std::size_t n = m - 1;
  IntMat a(m, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ref = (i == 0) ? 1 : 0;
    for (std::size_t cidx = 0; cidx < n; ++cidx) a.at(i, ref * n + cidx) = fan.y.at(i, cidx);
  }
  return a;
}

}  // namespace detail

// Degree of the image of the Cartier subgroup inside Cl = Z, computed as a
// lattice kernel problem: solve the compatibility constraints, push each
// kernel generator to its divisor class, and take the gcd of the degrees.
inline PicardData picard_index(const Fan& fan) {
  ClassGroupData cl = class_group(fan);
  IntMat kern = kernel_basis(detail::cartier_constraints(fan));
  IntMat div = detail::cartier_to_divisor(fan) * kern;
  Int g = 0;
  for (std::size_t j = 0; j < div.cols(); ++j) {
    Int deg = 0;
    for (std::size_t i = 0; i < div.rows(); ++i) deg += cl.ray_degrees[i] * div.at(i, j);
    g = gcd_int(g, deg);
  }
  check_internal(g > 0, "picard_index: Cartier image is degenerate");
  return {g, g};
}

// Independent route for cross-checks: the least positive ell whose degree-ell
// class admits a compatible Cartier tuple. Searches up to `bound`.
inline Int picard_index_by_search(const Fan& fan, const Int& bound) {
  ClassGroupData cl = class_group(fan);
  IntMat constraints = detail::cartier_constraints(fan);
  IntMat div = detail::cartier_to_divisor(fan);
  IntMat deg_row(1, div.cols());
  for (std::size_t j = 0; j < div.cols(); ++j) {
    Int v = 0;
    for (std::size_t i = 0; i < div.rows(); ++i) v += cl.ray_degrees[i] * div.at(i, j);
    deg_row.at(0, j) = v;
  }
  IntMat system = vstack(constraints, deg_row);
  for (Int ell = 1; ell <= bound; ++ell) {
    IntVec rhs(system.rows(), Int(0));
    rhs[system.rows() - 1] = ell;
    if (solve(system, rhs).has_value()) return ell;
  }
  check_internal(false, "picard_index_by_search: no Cartier class up to bound");
  return 0;
}

// Stack-versus-space comparison: Pic of the stack is generated by the twist
// O(1), and pulling back the coarse-space Picard generator multiplies the
// twist by the Picard index.
struct StackComparison {
  Int stack_picard_generator_twist;
  Int pullback_multiplier;

  bool comparison_is_iso_for(const Int& ell) const { return ell % pullback_multiplier == 0; }
};

inline StackComparison stack_comparison(const WeightVector& w) {
  require(w.gcd() == 1, "stack_comparison: gcd(rho) != 1");
  PicardData pd = picard_index(build_fan(w));
  return {Int(1), pd.index_in_class_group};
}

}  // namespace wps
