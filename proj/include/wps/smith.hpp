#pragma once

#include "wps/int_matrix.hpp"
#include "wps/int_types.hpp"

#include <algorithm>
#include <cstddef>

namespace wps {

// L * M * R = D with L, R unimodular and D diagonal, d1 | d2 | ..., all
// diagonal entries nonnegative, zeros trailing. invariant_factors holds the
// nonzero diagonal entries (including any 1s).
struct SmithDecomposition {
  IntMat d;
  IntMat l;
  IntMat r;
  IntVec invariant_factors;

  std::size_t rank() const { return invariant_factors.size(); }
};

// Deterministic Smith normal form. Pivot rule: the nonzero entry of minimal
// absolute value in the trailing submatrix, ties broken by smallest row then
// smallest column index.
inline SmithDecomposition smith_normal_form(const IntMat& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  IntMat d = m;
  IntMat l = IntMat::identity(nr);
  IntMat r = IntMat::identity(nc);

  std::size_t t = 0;
  const std::size_t tmax = std::min(nr, nc);
  while (t < tmax) {
    // pivot selection
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j) {
        const Int& v = d.at(i, j);
        if (v == 0) continue;
        Int a = abs_int(v);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;  // trailing submatrix is zero

    d.swap_rows(t, pi);
    l.swap_rows(t, pi);
    d.swap_cols(t, pj);
    r.swap_cols(t, pj);

    for (;;) {
      bool restart = false;
      // clear column t below the pivot
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        if (q != 0) {
          d.add_row(i, t, -q);
          l.add_row(i, t, -q);
        }
        if (d.at(i, t) != 0) {  // remainder strictly smaller than the pivot
          d.swap_rows(t, i);
          l.swap_rows(t, i);
          restart = true;
          break;
        }
      }
      if (restart) continue;
      // clear row t right of the pivot
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        if (q != 0) {
          d.add_col(j, t, -q);
          r.add_col(j, t, -q);
        }
        if (d.at(t, j) != 0) {
          d.swap_cols(t, j);
          r.swap_cols(t, j);
          restart = true;
          break;
        }
      }
      if (restart) continue;
      // the pivot must divide the whole trailing submatrix
      const Int& piv = d.at(t, t);
      bool fixed = false;
      for (std::size_t i = t + 1; i < nr && !fixed; ++i)
        for (std::size_t j = t + 1; j < nc && !fixed; ++j)
          if (d.at(i, j) % piv != 0) {
            d.add_row(t, i, 1);
            l.add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }

    if (d.at(t, t) < 0) {
      d.negate_row(t);
      l.negate_row(t);
    }
    ++t;
  }

  SmithDecomposition out;
  out.invariant_factors.reserve(t);
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(d.at(i, i));
  out.d = std::move(d);
  out.l = std::move(l);
  out.r = std::move(r);
  return out;
}

}  // namespace wps
