#pragma once

#include "wps/int_types.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace wps {

// Weight vector rho = (rho_0, ..., rho_n): at least two positive integers.
struct WeightVector {
  IntVec rho;

  WeightVector() = default;
  explicit WeightVector(IntVec r) : rho(std::move(r)) {
    require(rho.size() >= 2, "weight vector needs at least 2 entries");
    for (const Int& x : rho) require(x >= 1, "weights must be positive");
  }

  std::size_t size() const { return rho.size(); }
  int n() const { return static_cast<int>(rho.size()) - 1; }
  Int gcd() const { return gcd_all(rho); }
  Int lcm() const { return lcm_all(rho); }

  bool operator==(const WeightVector&) const = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rho.size(); ++i) {
      if (i) s += ",";
      s += rho[i].str();
    }
    return s + ")";
  }
};

// gcd of all weights except the i-th.
inline Int leave_one_out_gcd(const WeightVector& w, std::size_t i) {
  Int g = 0;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (j != i) g = gcd_int(g, w.rho[j]);
  return g;
}

// Condition (N): every leave-one-out gcd equals 1.
inline bool satisfies_N(const WeightVector& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (leave_one_out_gcd(w, i) != 1) return false;
  return true;
}

inline WeightVector divided_by(const WeightVector& w, const Int& d) {
  IntVec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    check_internal(w.rho[i] % d == 0, "divided_by: not divisible");
    out[i] = w.rho[i] / d;
  }
  return WeightVector(out);
}

// One reduction step: d_i = gcd of the weights omitting the i-th,
// s_i = lcm of the d_j omitting the i-th, s = lcm of all s_i, and the output
// weights are rho_i / s_i. Requires gcd(rho) = 1, which makes the d_j
// pairwise coprime and each s_i an exact divisor of rho_i.
struct DelormeStep {
  IntVec d;
  IntVec s_each;
  Int s;
  WeightVector output;
};

inline DelormeStep delorme_step(const WeightVector& w) {
  check_internal(w.gcd() == 1, "delorme_step: gcd(rho) != 1");
  const std::size_t m = w.size();
  DelormeStep st;
  st.d.resize(m);
  st.s_each.resize(m);
  for (std::size_t i = 0; i < m; ++i) st.d[i] = leave_one_out_gcd(w, i);
  for (std::size_t i = 0; i < m; ++i) {
    Int s_i = 1;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) s_i = lcm_int(s_i, st.d[j]);
    st.s_each[i] = s_i;
  }
  st.s = lcm_all(st.s_each);
  IntVec out(m);
  for (std::size_t i = 0; i < m; ++i) {
    check_internal(w.rho[i] % st.s_each[i] == 0, "delorme_step: s_i does not divide rho_i");
    out[i] = w.rho[i] / st.s_each[i];
  }
  st.output = WeightVector(out);
  return st;
}

struct NormalizationReport {
  WeightVector input;
  WeightVector gcd_divided;
  std::vector<DelormeStep> steps;
  WeightVector normal_form;
  Int total_s = 1;
};

// Divide by gcd(rho), then iterate reduction steps to the (N) fixpoint. Each
// step with s > 1 strictly decreases lcm(rho) via lcm(rho) = s * lcm(rho'),
// and s = 1 can only happen once (N) holds, so the loop terminates.
inline NormalizationReport normalize(const WeightVector& w) {
  NormalizationReport rep;
  rep.input = w;
  rep.gcd_divided = divided_by(w, w.gcd());
  WeightVector cur = rep.gcd_divided;
  while (!satisfies_N(cur)) {
    DelormeStep st = delorme_step(cur);
    check_internal(st.s > 1, "normalize: stalled reduction step");
    check_internal(cur.lcm() == st.s * st.output.lcm(), "normalize: lcm identity violated");
    rep.total_s *= st.s;
    cur = st.output;
    check_internal(cur.gcd() == 1, "normalize: gcd not preserved");
    rep.steps.push_back(std::move(st));
  }
  rep.normal_form = cur;
  return rep;
}

// Isomorphism test: normal forms agree as multisets.
inline bool is_isomorphic(const WeightVector& a, const WeightVector& b) {
  IntVec x = normalize(a).normal_form.rho;
  IntVec y = normalize(b).normal_form.rho;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// Twist transport data for O(ell): the unique b_i in [0, d_i) with
// ell = b_i*rho_i + c_i*d_i, the reduced twist ell' = ell - sum b_i*rho_i
// (always divisible by s), and the monomial exponent vector b.
struct TwistTransport {
  Int ell;
  IntVec b;
  IntVec c;
  Int ell_prime;
  IntVec monomial;
  Int reduced_twist;
  // step data the transport is relative to
  IntVec d;
  IntVec s_each;
  Int s;
};

inline TwistTransport twist_transport(const WeightVector& w, const Int& ell) {
  require(w.gcd() == 1, "twist_transport: gcd(rho) != 1");
  DelormeStep st = delorme_step(w);
  const std::size_t m = w.size();
  TwistTransport t;
  t.ell = ell;
  t.b.resize(m);
  t.c.resize(m);
  t.d = st.d;
  t.s_each = st.s_each;
  t.s = st.s;
  Int used = 0;
  for (std::size_t i = 0; i < m; ++i) {
    // gcd(rho_i, d_i) divides gcd(rho) = 1, so rho_i is invertible mod d_i
    t.b[i] = mod_floor(mod_floor(ell, st.d[i]) * mod_inverse(w.rho[i], st.d[i]), st.d[i]);
    Int rem = ell - t.b[i] * w.rho[i];
    check_internal(rem % st.d[i] == 0, "twist_transport: b_i reconstruction failed");
    t.c[i] = rem / st.d[i];
    used += t.b[i] * w.rho[i];
  }
  t.ell_prime = ell - used;
  check_internal(t.ell_prime % st.s == 0, "twist_transport: s does not divide ell'");
  t.reduced_twist = t.ell_prime / st.s;
  t.monomial = t.b;
  return t;
}

// p-reduction: keep only the p-part of every weight.
inline WeightVector p_reduce(const WeightVector& w, const Int& p) {
  require(is_prime(p), "p_reduce: p is not prime");
  IntVec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Int q = 1, r = w.rho[i];
    while (r % p == 0) {
      r /= p;
      q *= p;
    }
    out[i] = q;
  }
  return WeightVector(out);
}

// O(r) is invertible exactly when lcm(rho) divides r; only stated for (N)
// weight vectors.
inline bool is_invertible_twist(const WeightVector& w, const Int& r) {
  require(satisfies_N(w), "is_invertible_twist: weights do not satisfy (N)");
  return r % w.lcm() == 0;
}

}  // namespace wps
