#pragma once

#include "wps/int_types.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>

namespace wps {

// Dense integer matrix, row-major. Shapes with zero rows or zero columns are
// legal everywhere and stand for maps to or from the zero module.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  IntMat(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      require(r.size() == cols_, "IntMat: ragged initializer");
      for (const Int& v : r) e_.push_back(v);
    }
  }

  static IntMat identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool operator==(const IntMat&) const = default;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
  }

  // row dst += q * row src
  void add_row(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
  }

  // col dst += q * col src
  void add_col(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
  }

  void negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
  }

  IntVec col(std::size_t j) const {
    IntVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, j);
    return v;
  }

  IntVec row(std::size_t i) const {
    IntVec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(i, c);
    return v;
  }

  void set_col(std::size_t j, const IntVec& v) {
    check_internal(v.size() == rows_, "set_col: size mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = v[r];
  }

  bool is_zero() const {
    for (const Int& v : e_)
      if (v != 0) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVec e_;
};

inline IntMat operator*(const IntMat& a, const IntMat& b) {
  check_internal(a.cols() == b.rows(), "matrix product: shape mismatch");
  IntMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

inline IntVec operator*(const IntMat& a, const IntVec& x) {
  check_internal(a.cols() == x.size(), "matrix-vector product: shape mismatch");
  IntVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a.at(i, j) * x[j];
  return y;
}

inline IntMat operator*(const Int& s, const IntMat& a) {
  IntMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = s * a.at(i, j);
  return c;
}

// [a | b]
inline IntMat hstack(const IntMat& a, const IntMat& b) {
  check_internal(a.rows() == b.rows(), "hstack: row mismatch");
  IntMat c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

// [a ; b]
inline IntMat vstack(const IntMat& a, const IntMat& b) {
  check_internal(a.cols() == b.cols(), "vstack: column mismatch");
  IntMat c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

inline IntMat transpose(const IntMat& a) {
  IntMat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

inline IntMat drop_row(const IntMat& a, std::size_t skip) {
  check_internal(skip < a.rows(), "drop_row: out of range");
  IntMat c(a.rows() - 1, a.cols());
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i == skip) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(r, j) = a.at(i, j);
    ++r;
  }
  return c;
}

inline IntMat drop_col(const IntMat& a, std::size_t skip) {
  check_internal(skip < a.cols(), "drop_col: out of range");
  IntMat c(a.rows(), a.cols() - 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::size_t cc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j == skip) continue;
      c.at(i, cc++) = a.at(i, j);
    }
  }
  return c;
}

// Columns [lo, hi) as a matrix.
inline IntMat col_range(const IntMat& a, std::size_t lo, std::size_t hi) {
  check_internal(lo <= hi && hi <= a.cols(), "col_range: out of range");
  IntMat c(a.rows(), hi - lo);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = lo; j < hi; ++j) c.at(i, j - lo) = a.at(i, j);
  return c;
}

// Exact determinant via Bareiss fraction-free elimination. Independent of the
// Smith normal form machinery so it can serve as a cross-check oracle.
inline Int determinant(IntMat m) {
  check_internal(m.rows() == m.cols(), "determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

}  // namespace wps
