#include "wps/abelian.hpp"
#include "wps/cech.hpp"
#include "wps/fan.hpp"
#include "wps/int_matrix.hpp"
#include "wps/linear_solve.hpp"
#include "wps/sweep.hpp"
#include "wps/weights.hpp"

#include <catch2/catch.hpp>

#include <random>

using namespace wps;

namespace {

WeightVector wv(std::initializer_list<int> xs) {
  IntVec v;
  for (int x : xs) v.push_back(x);
  return WeightVector(v);
}

SpectralPages pages_of(const WeightVector& w) {
  return SpectralPages{DoubleComplex(build_fan(w))};
}

std::vector<WeightVector> small_corpus() {
  std::vector<WeightVector> out;
  out.push_back(wv({1, 1}));
  out.push_back(wv({2, 3}));
  for (int a = 1; a <= 5; ++a)
    for (int b = a; b <= 5; ++b)
      for (int c = b; c <= 5; ++c) {
        WeightVector w(IntVec{a, b, c});
        if (w.gcd() == 1) out.push_back(w);
      }
  out.push_back(wv({1, 2, 3, 4}));
  out.push_back(wv({2, 3, 5, 7}));
  out.push_back(wv({1, 6, 10, 15}));
  out.push_back(wv({1, 2, 2, 4}));
  return out;
}

// block I of the vertical differential: fan.y with the rows outside I removed
IntMat block_matrix(const Fan& fan, const std::vector<int>& subset) {
  IntMat m(subset.size(), fan.y.cols());
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t c = 0; c < fan.y.cols(); ++c)
      m.at(a, c) = fan.y.at(subset[a], c);
  return m;
}

Int ipow(Int base, int e) {
  Int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

TEST_CASE("double complex block shapes") {
  SECTION("P(1,1,2): the surface diagram") {
    DoubleComplex dc(build_fan(wv({1, 1, 2})));
    // q = 1 row: Z^3 | (Z^2)^3 | (Z^1)^3 | 0
    REQUIRE(dc.rank(-1, 1) == 3);
    REQUIRE(dc.rank(0, 1) == 6);
    REQUIRE(dc.rank(1, 1) == 3);
    REQUIRE(dc.rank(2, 1) == 0);
    // q = 0 row: Z^2 | (Z^2)^3 | (Z^2)^3 | Z^2
    REQUIRE(dc.rank(-1, 0) == 2);
    REQUIRE(dc.rank(0, 0) == 6);
    REQUIRE(dc.rank(1, 0) == 6);
    REQUIRE(dc.rank(2, 0) == 2);
  }
  SECTION("A^{n,1} = 0 and A^{n,0} = Z^n for several n") {
    for (auto w : {wv({1, 1}), wv({1, 2, 3}), wv({1, 1, 2, 3})}) {
      DoubleComplex dc(build_fan(w));
      REQUIRE(dc.rank(dc.n(), 1) == 0);
      REQUIRE(dc.rank(dc.n(), 0) == static_cast<std::size_t>(dc.n()));
    }
  }
  SECTION("n = 1 degenerates gracefully") {
    DoubleComplex dc(build_fan(wv({1, 1})));
    REQUIRE(dc.rank(-1, 0) == 1);
    REQUIRE(dc.rank(0, 0) == 2);
    REQUIRE(dc.rank(1, 0) == 1);
  }
  SECTION("subsets are enumerated lexicographically") {
    DoubleComplex dc(build_fan(wv({1, 1, 2})));
    REQUIRE(dc.subsets(0) ==
            std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  }
}

TEST_CASE("differentials square to zero and squares commute") {
  for (const WeightVector& w : small_corpus()) {
    DoubleComplex dc(build_fan(w));
    REQUIRE(double_complex_valid(dc));
  }
}

TEST_CASE("row exactness across the corpus") {
  for (const WeightVector& w : small_corpus()) {
    DoubleComplex dc(build_fan(w));
    for (int q = 0; q <= 1; ++q)
      for (int p = -1; p <= dc.n(); ++p) REQUIRE(row_homology(dc, q, p).is_trivial());
  }
}

TEST_CASE("E1 page for prime-power weights") {
  // rho = (1, p^{e_1}, ..., p^{e_n}) with nondecreasing exponents: E1^{0,1}
  // is the sum of Z/p^{e_i} and E1^{1,1} the sum of Z/p^{min(e_i1, e_i2)}
  for (Int p : {Int(2), Int(3)}) {
    for (std::vector<int> es :
         std::vector<std::vector<int>>{{0, 1, 2}, {1, 1}, {0, 0, 0}, {2, 3}, {1, 2, 2}, {0, 1, 1, 2}}) {
      IntVec rho{1};
      for (int e : es) rho.push_back(ipow(p, e));
      WeightVector w{rho};
      SpectralPages pages = pages_of(w);

      IntVec orders01;
      for (int e : es) orders01.push_back(ipow(p, e));
      REQUIRE(pages.e1(0, 1).group == from_cyclic_orders(0, orders01));

      std::vector<int> all_es;
      all_es.push_back(0);
      for (int e : es) all_es.push_back(e);
      IntVec orders11;
      for (std::size_t i = 0; i < all_es.size(); ++i)
        for (std::size_t j = i + 1; j < all_es.size(); ++j)
          orders11.push_back(ipow(p, std::min(all_es[i], all_es[j])));
      REQUIRE(pages.e1(1, 1).group == from_cyclic_orders(0, orders11));
    }
  }

  SECTION("stated instances for (1,2,4)") {
    SpectralPages pages = pages_of(wv({1, 2, 4}));
    REQUIRE(pages.e1(0, 1).group == FgAbelianGroup{0, {2, 4}});
    REQUIRE(pages.e1(1, 1).group == FgAbelianGroup{0, {2}});
    REQUIRE(pages_of(wv({1, 1, 1})).e1(0, 1).group.is_trivial());
  }
}

TEST_CASE("E1^{0,1} summand generators are the first basis vectors") {
  // block I = [n] minus {i} carries Z/p^{e_i}, generated by the image of the
  // first standard basis vector
  WeightVector w = wv({1, 2, 4});
  Fan fan = build_fan(w);
  DoubleComplex dc(fan);
  std::vector<Int> expected{1, 2, 4};  // p^{e_i} with e = (0, 1, 2)
  const auto& subs = dc.subsets(0);
  for (int i = 0; i <= 2; ++i) {
    std::vector<int> block;
    for (int j = 0; j <= 2; ++j)
      if (j != i) block.push_back(j);
    std::size_t si = 0;
    while (subs[si] != block) ++si;
    IntMat y_block = block_matrix(fan, subs[si]);
    IntVec e1(y_block.rows(), Int(0));
    e1[0] = 1;
    auto order = order_in_cokernel(y_block, e1);
    REQUIRE(order.has_value());
    REQUIRE(*order == expected[static_cast<std::size_t>(i)]);
    // the image of e1 generates the whole block cokernel
    IntMat e1col(y_block.rows(), 1);
    e1col.at(0, 0) = 1;
    REQUIRE(cokernel(hstack(e1col, y_block)).is_trivial());
  }
}

TEST_CASE("d1 on E1^{0,1} follows the signed coordinate formula") {
  // Under the sign rule "removing the i-th element of I carries (-1)^i", the
  // image of (x_0, ..., x_n) has (i1, i2) coordinate
  //   (-1)^{i2-1} x_{i1} + (-1)^{i1} x_{i2},
  // which is the per-summand unit (-1)^{i1+i2-1} times the transposed form
  // (-1)^{i1} x_{i1} + (-1)^{i2-1} x_{i2}; the two coincide on consecutive
  // pairs and generate the same kernel and image everywhere.
  for (auto rho : {wv({1, 2, 4}), wv({1, 2, 8}), wv({1, 3, 9, 27})}) {
    Fan fan = build_fan(rho);
    DoubleComplex dc(fan);
    const int n = dc.n();
    const auto& src_subs = dc.subsets(0);
    const auto& dst_subs = dc.subsets(1);
    for (int i = 0; i <= n; ++i) {
      std::vector<int> src_block;
      for (int j = 0; j <= n; ++j)
        if (j != i) src_block.push_back(j);
      std::size_t si = 0;
      while (src_subs[si] != src_block) ++si;
      IntVec xi(dc.rank(0, 1), Int(0));
      xi[dc.block_offset(0, 1, si)] = 1;  // e1 of the block omitting i
      IntVec image = dc.dh1(0) * xi;
      for (int i1 = 0; i1 <= n; ++i1)
        for (int i2 = i1 + 1; i2 <= n; ++i2) {
          std::vector<int> dst_block;
          for (int j = 0; j <= n; ++j)
            if (j != i1 && j != i2) dst_block.push_back(j);
          std::size_t ti = 0;
          while (dst_subs[ti] != dst_block) ++ti;
          const std::size_t off = dc.block_offset(1, 1, ti);
          const std::size_t bk = dc.block_rank(1, 1);
          IntVec component(bk);
          for (std::size_t c = 0; c < bk; ++c) component[c] = image[off + c];
          Int coeff = 0;
          if (i == i1) coeff += (i2 % 2 == 0) ? -1 : 1;  // (-1)^{i2 - 1}
          if (i == i2) coeff += (i1 % 2 == 0) ? 1 : -1;  // (-1)^{i1}
          Int transposed = 0;
          if (i == i1) transposed += (i1 % 2 == 0) ? 1 : -1;
          if (i == i2) transposed += (i2 % 2 == 0) ? -1 : 1;
          Int unit = ((i1 + i2 - 1) % 2 == 0) ? 1 : -1;
          REQUIRE(coeff == unit * transposed);
          if (i2 == i1 + 1) REQUIRE(coeff == transposed);
          component[0] -= coeff;
          // the difference must be a boundary of the block
          REQUIRE(solve(block_matrix(fan, dst_block), component).has_value());
        }
    }
  }
}

TEST_CASE("d1 composes to zero on witnesses") {
  for (const WeightVector& w : small_corpus()) {
    SpectralPages pages = pages_of(w);
    for (int q = 0; q <= 1; ++q)
      for (int p = -1; p + 1 <= pages.n() - 1; ++p) {
        IntMat composite = pages.d1(p + 1, q) * pages.d1(p, q);
        REQUIRE(induced_is_zero(pages.e1(p + 2, q).sq, composite));
      }
  }
}

TEST_CASE("Brauer group instances") {
  REQUIRE(brauer_group(wv({1, 2, 4})).is_trivial());
  REQUIRE(brauer_group(wv({1, 1, 1})).is_trivial());
  REQUIRE(brauer_group(wv({2, 3, 5})).is_trivial());
  // gcd-normalization happens internally
  REQUIRE(brauer_group(wv({2, 4, 8})).is_trivial());
}

TEST_CASE("d2 zig-zag instances") {
  SECTION("P(1,2,4), p = 0") {
    auto d2 = d2_map(pages_of(wv({1, 2, 4})), 0);
    REQUIRE(d2.source.is_trivial());
    REQUIRE(d2.target.is_trivial());
    REQUIRE(d2.is_isomorphism);
  }
  SECTION("P(1,1,2), p = -1: both sides are Z") {
    auto d2 = d2_map(pages_of(wv({1, 1, 2})), -1);
    REQUIRE(d2.source == FgAbelianGroup{1, {}});
    REQUIRE(d2.target == FgAbelianGroup{1, {}});
    REQUIRE(d2.is_isomorphism);
  }
  SECTION("P(1,1,1): every valid p") {
    SpectralPages pages = pages_of(wv({1, 1, 1}));
    for (int p = -1; p <= pages.n() - 2; ++p) REQUIRE(d2_map(pages, p).is_isomorphism);
  }
  SECTION("p out of range is rejected") {
    SpectralPages pages = pages_of(wv({1, 1, 1}));
    REQUIRE_THROWS_AS(d2_map(pages, pages.n() - 1), std::invalid_argument);
  }
}

TEST_CASE("d2 is an isomorphism across the corpus") {
  for (const WeightVector& w : small_corpus()) {
    SpectralPages pages = pages_of(w);
    // independence of the n-subsets of rays makes the Brauer column finite
    REQUIRE(pages.e1(0, 1).group.is_finite());
    REQUIRE(pages.e2(0, 1).group.is_finite());
    for (int p = -1; p <= pages.n() - 2; ++p) REQUIRE(d2_map(pages, p).is_isomorphism);
  }
}

TEST_CASE("dilation action") {
  SECTION("d = 1 is the identity") {
    SpectralPages pages = pages_of(wv({1, 2, 4}));
    DilationAction act = dilation_action(pages, 1);
    for (int p = -1; p <= pages.n(); ++p)
      for (int q = 0; q <= 1; ++q) {
        const Subquotient& sq1 = pages.e1(p, q).sq;
        const Subquotient& sq2 = pages.e2(p, q).sq;
        IntMat diff1 = act.on_e1(p, q);
        IntMat diff2 = act.on_e2(p, q);
        for (std::size_t i = 0; i < diff1.rows(); ++i) diff1.at(i, i) -= 1;
        for (std::size_t i = 0; i < diff2.rows(); ++i) diff2.at(i, i) -= 1;
        REQUIRE(induced_is_zero(sq1, diff1));
        REQUIRE(induced_is_zero(sq2, diff2));
      }
  }
  SECTION("induced maps equal multiplication by d on canonical forms") {
    SpectralPages pages = pages_of(wv({1, 2, 4}));
    for (Int d : {Int(2), Int(3), Int(5)}) {
      DilationAction act = dilation_action(pages, d);
      for (int p = -1; p <= pages.n(); ++p)
        for (int q = 0; q <= 1; ++q) {
          IntMat diff1 = act.on_e1(p, q);
          IntMat diff2 = act.on_e2(p, q);
          for (std::size_t i = 0; i < diff1.rows(); ++i) diff1.at(i, i) -= d;
          for (std::size_t i = 0; i < diff2.rows(); ++i) diff2.at(i, i) -= d;
          REQUIRE(induced_is_zero(pages.e1(p, q).sq, diff1));
          REQUIRE(induced_is_zero(pages.e2(p, q).sq, diff2));
        }
    }
  }
  SECTION("kernel of x2 on E1^{0,1} of P(1,2,4)") {
    SpectralPages pages = pages_of(wv({1, 2, 4}));
    REQUIRE(pages.e1(0, 1).group == FgAbelianGroup{0, {2, 4}});
    REQUIRE(multiplication_kernel(pages.e1(0, 1).group, 2) == FgAbelianGroup{0, {2, 2}});
  }
  SECTION("d = 6 equals the composite of d = 2 and d = 3") {
    SpectralPages pages = pages_of(wv({1, 1, 2}));
    DilationAction a2 = dilation_action(pages, 2);
    DilationAction a3 = dilation_action(pages, 3);
    DilationAction a6 = dilation_action(pages, 6);
    for (int p = -1; p <= pages.n(); ++p)
      for (int q = 0; q <= 1; ++q) {
        IntMat diff = a6.on_e2(p, q);
        IntMat comp = a2.on_e2(p, q) * a3.on_e2(p, q);
        for (std::size_t i = 0; i < diff.rows(); ++i)
          for (std::size_t j = 0; j < diff.cols(); ++j) diff.at(i, j) -= comp.at(i, j);
        REQUIRE(induced_is_zero(pages.e2(p, q).sq, diff));
      }
  }
  SECTION("nonpositive d is rejected") {
    SpectralPages pages = pages_of(wv({1, 1}));
    REQUIRE_THROWS_AS(dilation_action(pages, 0), std::invalid_argument);
  }
}

TEST_CASE("p-reduction is consistent with localization") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<std::size_t> len(3, 4);
  std::uniform_int_distribution<int> entry(1, 12);
  for (int trial = 0; trial < 30; ++trial) {
    IntVec v(len(rng));
    for (auto& x : v) x = entry(rng);
    WeightVector w(v);
    for (Int p : {Int(2), Int(3), Int(5), Int(7)}) {
      FgAbelianGroup a = localize_at_prime(brauer_group(w), p);
      FgAbelianGroup b = localize_at_prime(brauer_group(p_reduce(w, p)), p);
      REQUIRE(a == b);
      REQUIRE(a.is_trivial());
    }
  }
  // on pure p-power weights the E1-level p-parts match the direct sum formula
  for (auto es : std::vector<std::vector<int>>{{1, 2}, {0, 2, 3}, {1, 1, 1}}) {
    IntVec rho{1};
    for (int e : es) rho.push_back(ipow(2, e));
    WeightVector w{rho};
    IntVec orders;
    for (int e : es) orders.push_back(ipow(2, e));
    FgAbelianGroup e1 = pages_of(w).e1(0, 1).group;
    REQUIRE(localize_at_prime(e1, 2) == from_cyclic_orders(0, orders));
  }
}

TEST_CASE("sweep harness") {
  SECTION("dim 2, max weight 1: the single vector (1,1,1)") {
    SweepResult res = run_sweep({2, Int(1), 1});
    REQUIRE(res.checked == 1);
    REQUIRE(res.all_brauer_trivial);
    REQUIRE(res.failures.empty());
  }
  SECTION("dim 2, max weight 4: all trivial, no failures") {
    SweepResult res = run_sweep({2, Int(4), 1});
    REQUIRE(res.checked == 20);
    REQUIRE(res.all_brauer_trivial);
    REQUIRE(res.failures.empty());
  }
  SECTION("enumeration is nondecreasing and permutation-free") {
    auto corpus = enumerate_weight_vectors(2, 3);
    REQUIRE(corpus.size() == 10);
    for (const IntVec& v : corpus)
      for (std::size_t i = 0; i + 1 < v.size(); ++i) REQUIRE(v[i] <= v[i + 1]);
  }
  SECTION("worker count does not change the result") {
    SweepResult a = run_sweep({2, Int(4), 1});
    SweepResult b = run_sweep({2, Int(4), 3});
    REQUIRE(a.checked == b.checked);
    REQUIRE(a.failures.size() == b.failures.size());
    REQUIRE(a.all_brauer_trivial == b.all_brauer_trivial);
  }
  SECTION("invalid options are rejected") {
    REQUIRE_THROWS_AS(run_sweep({1, Int(3), 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(run_sweep({2, Int(3), 0}), std::invalid_argument);
  }
}

TEST_CASE("E pages are independent of the completion") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> qdist(-2, 2);
  for (auto w : {wv({1, 2, 4}), wv({2, 3, 5}), wv({3, 4, 5}), wv({1, 2, 3, 5})}) {
    Fan f1 = build_fan(w);
    IntMat e = IntMat::identity(w.size());
    std::uniform_int_distribution<std::size_t> src(0, w.size() - 1);
    std::uniform_int_distribution<std::size_t> dst(1, w.size() - 1);
    for (int k = 0; k < 8; ++k) {
      std::size_t j = dst(rng), i = src(rng);
      if (i != j) e.add_row(j, i, qdist(rng));
    }
    Fan f2 = build_fan_with_completion(w, e * f1.u);
    SpectralPages p1{DoubleComplex(f1)}, p2{DoubleComplex(f2)};
    for (int p = -1; p <= p1.n(); ++p)
      for (int q = 0; q <= 1; ++q) {
        REQUIRE(p1.e1(p, q).group == p2.e1(p, q).group);
        REQUIRE(p1.e2(p, q).group == p2.e2(p, q).group);
      }
  }
}
