#pragma once

#include "wps/int_matrix.hpp"
#include "wps/int_types.hpp"
#include "wps/smith.hpp"

#include <cstddef>
#include <optional>

namespace wps {

namespace detail {

// Solve m*x = b given a precomputed decomposition of m. With d = l*m*r the
// system becomes d*y = l*b, x = r*y; absence of an integer solution is
// definitive (a diagonal entry fails to divide, or a zero row meets a
// nonzero right-hand side).
inline std::optional<IntVec> solve_with(const SmithDecomposition& s, std::size_t cols,
                                        const IntVec& b) {
  IntVec c = s.l * b;
  const std::size_t rank = s.rank();
  IntVec y(cols, Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < rank) {
      const Int& di = s.d.at(i, i);
      if (c[i] % di != 0) return std::nullopt;
      y[i] = c[i] / di;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.r * y;
}

}  // namespace detail

// One integer solution of m*x = b, or nullopt when none exists.
inline std::optional<IntVec> solve(const IntMat& m, const IntVec& b) {
  require(b.size() == m.rows(), "solve: dimension mismatch");
  return detail::solve_with(smith_normal_form(m), m.cols(), b);
}

// Columnwise solve of m*X = B; nullopt if any column has no integer solution.
inline std::optional<IntMat> solve_matrix(const IntMat& m, const IntMat& b) {
  require(b.rows() == m.rows(), "solve_matrix: dimension mismatch");
  SmithDecomposition s = smith_normal_form(m);
  IntMat x(m.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto xi = detail::solve_with(s, m.cols(), b.col(j));
    if (!xi) return std::nullopt;
    x.set_col(j, *xi);
  }
  return x;
}

// Basis of ker(m) as matrix columns (may have zero columns).
inline IntMat kernel_basis(const IntMat& m) {
  SmithDecomposition s = smith_normal_form(m);
  return col_range(s.r, s.rank(), m.cols());
}

// Order of v in Z^rows / column-span(m); nullopt means infinite order.
inline std::optional<Int> order_in_cokernel(const IntMat& m, const IntVec& v) {
  require(v.size() == m.rows(), "order_in_cokernel: dimension mismatch");
  SmithDecomposition s = smith_normal_form(m);
  IntVec c = s.l * v;
  const std::size_t rank = s.rank();
  Int order = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < rank) {
      const Int& di = s.d.at(i, i);
      order = lcm_int(order, di / gcd_int(di, c[i]));
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return order;
}

// Inverse of an integrally invertible square matrix.
inline IntMat integer_inverse(const IntMat& m) {
  require(m.rows() == m.cols(), "integer_inverse: matrix not square");
  auto inv = solve_matrix(m, IntMat::identity(m.rows()));
  require(inv.has_value(), "integer_inverse: matrix is not invertible over Z");
  check_internal(m * *inv == IntMat::identity(m.rows()), "integer_inverse: verification failed");
  return *inv;
}

}  // namespace wps
