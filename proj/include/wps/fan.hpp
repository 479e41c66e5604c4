#pragma once

#include "wps/int_matrix.hpp"
#include "wps/int_types.hpp"
#include "wps/linear_solve.hpp"
#include "wps/weights.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace wps {

// Toric fan of a weighted projective space: a unimodular completion U with
// rho as first row, the ray matrix Y (U^{-1} with the leftmost column
// removed), rays v_0..v_n as rows of Y, the n+1 maximal cones spanned by all
// n-element subsets of the rays, and their listed-generator multiplicities.
struct Fan {
  WeightVector weights;
  IntMat u;
  IntMat u_inv;
  IntMat y;
  std::vector<IntVec> rays;
  std::vector<std::vector<int>> maximal_cones;  // cone j omits ray j
  IntVec multiplicities;                        // m_j = |det(v_i : i != j)|
};

namespace detail {

struct CompletionPair {
  IntMat u;
  IntMat u_inv;
};

// Deterministic Euclidean completion. Column operations reduce rho to
// (1,0,...,0), always pivoting on the entry of minimal absolute value
// (ties: lowest index); U accumulates the inverse operations so that its
// first row ends up equal to rho, and U^{-1} is accumulated alongside.
inline CompletionPair completion_pair(const WeightVector& w) {
  require(w.gcd() == 1, "unimodular_completion: gcd(rho) != 1");
  const std::size_t m = w.size();
  IntVec r = w.rho;
  IntMat u = IntMat::identity(m);      // becomes U
  IntMat w_inv = IntMat::identity(m);  // becomes U^{-1}

  for (;;) {
    std::size_t piv = m;
    Int best;
    for (std::size_t j = 0; j < m; ++j) {
      if (r[j] == 0) continue;
      Int a = abs_int(r[j]);
      if (piv == m || a < best) {
        piv = j;
        best = a;
      }
    }
    check_internal(piv < m, "completion: zero vector");
    bool reduced_all = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == piv || r[j] == 0) continue;
      Int q = r[j] / r[piv];
      // column op: col_j -= q * col_piv; inverse acts on rows of U
      r[j] -= q * r[piv];
      w_inv.add_col(j, piv, -q);
      u.add_row(piv, j, q);
      if (r[j] != 0) reduced_all = false;
    }
    if (reduced_all) {
      // only the pivot column is nonzero now
      bool done = true;
      for (std::size_t j = 0; j < m; ++j)
        if (j != piv && r[j] != 0) done = false;
      if (done) {
        if (piv != 0) {
          std::swap(r[0], r[piv]);
          w_inv.swap_cols(0, piv);
          u.swap_rows(0, piv);
        }
        if (r[0] < 0) {
          r[0] = -r[0];
          w_inv.negate_col(0);
          u.negate_row(0);
        }
        break;
      }
    }
  }
  check_internal(r[0] == 1, "completion: reduction did not reach gcd 1");
  check_internal(u.row(0) == w.rho, "completion: first row is not rho");
  check_internal(u * w_inv == IntMat::identity(m), "completion: inverse mismatch");
  return {std::move(u), std::move(w_inv)};
}

inline Fan fan_from_pair(const WeightVector& w, detail::CompletionPair pair) {
  const std::size_t m = w.size();
  Fan f;
  f.weights = w;
  f.u = std::move(pair.u);
  f.u_inv = std::move(pair.u_inv);
  f.y = drop_col(f.u_inv, 0);
  f.rays.reserve(m);
  for (std::size_t i = 0; i < m; ++i) f.rays.push_back(f.y.row(i));

  // rho * Y = 0: the rays satisfy the single weighted relation
  IntVec rel(f.y.cols(), Int(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < f.y.cols(); ++c) rel[c] += w.rho[i] * f.y.at(i, c);
  for (const Int& x : rel) check_internal(x == 0, "fan: weighted ray relation violated");

  f.maximal_cones.reserve(m);
  f.multiplicities.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<int> cone;
    for (std::size_t i = 0; i < m; ++i)
      if (i != j) cone.push_back(static_cast<int>(i));
    f.maximal_cones.push_back(std::move(cone));
    Int mj = abs_int(determinant(drop_row(f.y, j)));
    check_internal(mj != 0, "fan: degenerate maximal cone");
    f.multiplicities.push_back(std::move(mj));
  }
  return f;
}

}  // namespace detail

inline IntMat unimodular_completion(const WeightVector& w) {
  return detail::completion_pair(w).u;
}

inline Fan build_fan(const WeightVector& w) {
  return detail::fan_from_pair(w, detail::completion_pair(w));
}

// Fan from a caller-supplied completion (used to check that downstream
// invariants do not depend on the choice of U).
inline Fan build_fan_with_completion(const WeightVector& w, const IntMat& u) {
  require(w.gcd() == 1, "build_fan_with_completion: gcd(rho) != 1");
  require(u.rows() == w.size() && u.cols() == w.size(),
          "build_fan_with_completion: wrong shape");
  require(u.row(0) == w.rho, "build_fan_with_completion: first row is not rho");
  require(abs_int(determinant(u)) == 1, "build_fan_with_completion: |det| != 1");
  return detail::fan_from_pair(w, {u, integer_inverse(u)});
}

inline IntVec multiplicities(const Fan& f) { return f.multiplicities; }

inline bool is_smooth(const Fan& f) {
  for (const Int& m : f.multiplicities)
    if (m != 1) return false;
  return true;
}

}  // namespace wps
