#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oremat/linalg.hpp"
#include "support.hpp"

using namespace oremat;
using namespace oremat::testsupport;

namespace {

// the 4x2 module with parametrization (a, b, a+b, a+b^2)
Mat<SkewPolyRing> kf_matrix(const SkewPolyRing& ring) {
  return smat(ring, Orientation::right_columns,
              {{{{1}}, {}}, {{}, {{1}}}, {{{1}}, {{1}}}, {{{1}}, {{0}, {1}}}});
}

Mat<SkewPolyRing> kf_perp_rows(const SkewPolyRing& ring) {
  return smat(ring, Orientation::left_rows, {{{{1}}, {{1}}, {{1}}, {}}, {{{1}}, {{0}, {1}}, {}, {{1}}}});
}

Mat<SkewPolyRing> kf_dual_printed(const SkewPolyRing& ring) {
  return smat(ring, Orientation::right_columns,
              {{{{1}}, {{0}, {1}}}, {{{1}}, {{1}}}, {{{1}}, {}}, {{}, {{0}, {1}}}});
}

template <class Ring>
Mat<Ring> random_module(const Ring& ring, SplitMix64& rng, int rows, int cols, int size) {
  Mat<Ring> m = Mat<Ring>::zero(ring, Orientation::right_columns, rows, cols);
  for (auto& e : m.a) e = ring.random_elem(rng, size);
  return m;
}

}  // namespace

TEST_CASE("ranks over the division ring") {
  auto ring = f2_ring();
  QMat<SkewPolyRing> id2 = QMat<SkewPolyRing>::identity(ring, 2);
  CHECK(q_rank(id2) == 2);
  Mat<SkewPolyRing> psi = kf_matrix(ring);
  CHECK(q_rank(psi) == 2);
  Mat<SkewPolyRing> col = smat(ring, Orientation::right_columns, {{{{0}, {1}}}, {{{0}, {0}, {1}}}});
  CHECK(q_rank(col) == 1);
}

TEST_CASE("left kernel matches the printed annihilator rows") {
  auto ring = f2_ring();
  QMat<SkewPolyRing> k = left_kernel(qmat_of(kf_matrix(ring)));
  CHECK(k.rows == 2);
  CHECK(q_span_equal_rows(k, qmat_of(kf_perp_rows(ring))));

  QMat<SkewPolyRing> none = left_kernel(QMat<SkewPolyRing>::identity(ring, 3));
  CHECK(none.rows == 0);

  IntegerRing zz(2);
  Mat<IntegerRing> ones = zmat(zz, Orientation::right_columns, {{1}, {1}});
  QMat<IntegerRing> kz = left_kernel(qmat_of(ones));
  CHECK(kz.rows == 1);
  CHECK(q_span_equal_rows(kz, qmat_of(zmat(zz, Orientation::left_rows, {{1, -1}}))));
}

TEST_CASE("dieudonne valuations of small matrices") {
  auto ring = f2_ring();
  auto F = SkewPoly::f_power(ring.field(), 1);
  auto one = ring.one(), zero = ring.zero();
  auto val = [&](std::vector<std::vector<SkewPoly>> rows) {
    Mat<SkewPolyRing> m = Mat<SkewPolyRing>::zero(ring, Orientation::right_columns, 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.at(i, j) = rows[i][j];
    return dieudonne_val(qmat_of(m));
  };
  CHECK(val({{one, zero}, {one, F}}) == Valuation::finite(1));
  CHECK(val({{one, one}, {one, F}}) == Valuation::finite(0));  // eliminates to diag(1, F+1)
  CHECK(val({{one, one}, {one, one}}).is_infinite());
}

TEST_CASE("dieudonne is invariant under row permutation and multiplicative") {
  auto ring = f4_ring();
  SplitMix64 rng(5);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng.below(2));
    Mat<SkewPolyRing> a = random_module(ring, rng, n, n, 2);
    Mat<SkewPolyRing> b = random_module(ring, rng, n, n, 2);
    QMat<SkewPolyRing> qa = qmat_of(a), qb = qmat_of(b);
    Valuation va = dieudonne_val(qa), vb = dieudonne_val(qb);
    // product
    QMat<SkewPolyRing> prod = QMat<SkewPolyRing>::zero(ring, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto acc = ring.q_zero();
        for (int k = 0; k < n; ++k) acc = ring.q_add(acc, ring.q_mul(qa.at(i, k), qb.at(k, j)));
        prod.at(i, j) = acc;
      }
    CHECK(dieudonne_val(prod) == va + vb);
    // permutation of rows
    QMat<SkewPolyRing> perm = qa;
    for (int j = 0; j < n; ++j) std::swap(perm.at(0, j), perm.at(n - 1, j));
    CHECK(dieudonne_val(perm) == va);
  }
}

TEST_CASE("fraction and fraction-free dieudonne routes agree") {
  auto ring = f4_ring();
  IntegerRing zz(2);
  HurwitzRing hw(2);
  SplitMix64 rng(7);
  auto run = [&](const auto& r) {
    for (int t = 0; t < 80; ++t) {
      int n = 2 + static_cast<int>(rng.below(3));
      auto m = random_module(r, rng, n, n, 2);
      CHECK(dieudonne_val(qmat_of(m)) == dieudonne_val_integral(m));
    }
  };
  run(ring);
  run(zz);
  run(hw);
}

TEST_CASE("hermite form over the integers matches the reference reduction") {
  IntegerRing zz(2);
  Mat<IntegerRing> m = zmat(zz, Orientation::right_columns, {{2, 0}, {0, 2}, {2, 2}});
  Mat<IntegerRing> h = hermite_form(m);
  // already echelon with pivots 2, 2
  CHECK(h.cols == 2);
  CHECK(span_equal(m, h, SpanLevel::ring_module));
  SplitMix64 rng(11);
  for (int t = 0; t < 100; ++t) {
    int rows = 2 + static_cast<int>(rng.below(3));
    int cols = 1 + static_cast<int>(rng.below(3));
    Mat<IntegerRing> a = random_module(zz, rng, rows, cols, 4);
    Mat<IntegerRing> ha = hermite_form(a);
    CHECK(span_equal(a, ha, SpanLevel::ring_module));
    // reference oracle agrees entrywise after dropping zero columns
    std::vector<std::vector<Int>> cols_in;
    for (int j = 0; j < cols; ++j) {
      std::vector<Int> c;
      for (int i = 0; i < rows; ++i) c.push_back(a.at(i, j));
      cols_in.push_back(std::move(c));
    }
    auto ref = integer_hnf_oracle(cols_in, rows);
    REQUIRE(static_cast<int>(ref.size()) == ha.cols);
    for (int j = 0; j < ha.cols; ++j)
      for (int i = 0; i < rows; ++i) CHECK(ref[j][i] == ha.at(i, j));
  }
}

TEST_CASE("hermite form keeps spans over the skew and quaternion rings") {
  auto ring = f4_ring();
  HurwitzRing hw(2);
  SplitMix64 rng(13);
  for (int t = 0; t < 60; ++t) {
    auto a = random_module(ring, rng, 3, 2 + static_cast<int>(rng.below(2)), 2);
    CHECK(span_equal(a, hermite_form(a), SpanLevel::ring_module));
    auto b = random_module(hw, rng, 3, 2, 3);
    CHECK(span_equal(b, hermite_form(b), SpanLevel::ring_module));
  }
  // the span is unchanged even when unsaturated
  Mat<SkewPolyRing> ff = smat(ring, Orientation::right_columns, {{{{0, 0}, {1, 0}}}, {{{0, 0}, {1, 0}}}});
  Mat<SkewPolyRing> h = hermite_form(ff);
  CHECK(span_equal(ff, h, SpanLevel::ring_module));
  CHECK(h.cols == 1);
}

TEST_CASE("saturation of explicit modules") {
  auto ring = f2_ring();
  // (F, F)^T saturates to (1, 1)^T
  Mat<SkewPolyRing> ff = smat(ring, Orientation::right_columns, {{{{0}, {1}}}, {{{0}, {1}}}});
  Mat<SkewPolyRing> ones = smat(ring, Orientation::right_columns, {{{{1}}}, {{{1}}}});
  CHECK(span_equal(saturate(ff), ones, SpanLevel::ring_module));
  CHECK_FALSE(span_equal(ff, ones, SpanLevel::ring_module));
  CHECK(span_equal(ff, ones, SpanLevel::q_space));

  IntegerRing zz(2);
  Mat<IntegerRing> twos = zmat(zz, Orientation::right_columns, {{2}, {2}});
  CHECK(span_equal(saturate(twos), zmat(zz, Orientation::right_columns, {{1}, {1}}), SpanLevel::ring_module));
  // saturation sees primes other than the distinguished one
  Mat<IntegerRing> threes = zmat(zz, Orientation::right_columns, {{3}, {3}});
  CHECK(span_equal(saturate(threes), zmat(zz, Orientation::right_columns, {{1}, {1}}), SpanLevel::ring_module));

  Mat<SkewPolyRing> psi = kf_matrix(ring);
  CHECK(is_saturated(psi));
  CHECK(span_equal(saturate(psi), psi, SpanLevel::ring_module));
}

TEST_CASE("perp of explicit modules") {
  auto ring = f2_ring();
  Mat<SkewPolyRing> j = kf_perp_rows(ring);
  Mat<SkewPolyRing> n = perp(j);
  CHECK(n.orient == Orientation::right_columns);
  CHECK(span_equal(n, kf_matrix(ring), SpanLevel::ring_module));

  // zero module -> everything
  Mat<SkewPolyRing> zero_mod{ring, Orientation::right_columns, 3, 0, {}};
  Mat<SkewPolyRing> all = perp(zero_mod);
  CHECK(all.orient == Orientation::left_rows);
  CHECK(all.rows == 3);
  CHECK(q_rank(all) == 3);

  IntegerRing zz(2);
  Mat<IntegerRing> jz = zmat(zz, Orientation::left_rows, {{1, 1}});
  Mat<IntegerRing> nz = perp(jz);
  CHECK(span_equal(nz, zmat(zz, Orientation::right_columns, {{1}, {-1}}), SpanLevel::ring_module));
}

TEST_CASE("perp is an involution on saturated modules and ranks add up") {
  auto skew = f4_ring();
  IntegerRing zz(2);
  HurwitzRing hw(2);
  SplitMix64 rng(17);
  auto run = [&](const auto& ring) {
    for (int t = 0; t < 20; ++t) {
      int rows = 2 + static_cast<int>(rng.below(3));
      int cols = 1 + static_cast<int>(rng.below(3));
      auto m = random_module(ring, rng, rows, cols, 2);
      auto p = perp(m);
      CHECK(q_rank(m) + q_rank(p) == rows);
      auto sat = saturate(m);
      CHECK(span_equal(perp(p), sat, SpanLevel::ring_module));
      CHECK(ring_span_contains(sat, m));
      CHECK(span_equal(sat, m, SpanLevel::q_space));
      CHECK(span_equal(saturate(sat), sat, SpanLevel::ring_module));
      CHECK(q_rank(sat) == q_rank(m));
    }
  };
  run(skew);
  run(zz);
  run(hw);
}

TEST_CASE("saturation is invariant under right column scaling") {
  auto skew = f4_ring();
  IntegerRing zz(2);
  HurwitzRing hw(2);
  SplitMix64 rng(19);
  auto run = [&](const auto& ring) {
    for (int t = 0; t < 15; ++t) {
      auto m = random_module(ring, rng, 3, 2, 2);
      auto scaled = m;
      for (int j = 0; j < m.cols; ++j) {
        auto c = random_nonzero(ring, rng, 2);
        for (int i = 0; i < m.rows; ++i) scaled.at(i, j) = ring.mul(m.at(i, j), c);
      }
      CHECK(span_equal(saturate(m), saturate(scaled), SpanLevel::ring_module));
    }
  };
  run(skew);
  run(zz);
  run(hw);
}

TEST_CASE("dual module reproduces the printed dual representation") {
  auto ring = f2_ring();
  Mat<SkewPolyRing> psi = kf_matrix(ring);
  Mat<SkewPolyRing> dual = dual_module(psi);
  CHECK(span_equal(dual, kf_dual_printed(ring), SpanLevel::ring_module));

  // full module -> zero module
  Mat<SkewPolyRing> full = smat(ring, Orientation::right_columns, {{{{1}}, {}}, {{}, {{1}}}});
  CHECK(dual_module(full).cols == 0);

  // over the integers tau is the identity and the dual is the complement
  IntegerRing zz(2);
  Mat<IntegerRing> n = zmat(zz, Orientation::right_columns, {{1, 0}, {1, 1}, {0, 1}});
  Mat<IntegerRing> expected = zmat(zz, Orientation::right_columns, {{1}, {-1}, {1}});
  CHECK(span_equal(dual_module(n), expected, SpanLevel::ring_module));
}

TEST_CASE("span equality distinguishes levels and ranks") {
  auto ring = f2_ring();
  Mat<SkewPolyRing> psi = kf_matrix(ring);
  Mat<SkewPolyRing> swapped = Mat<SkewPolyRing>::zero(ring, Orientation::right_columns, 4, 2);
  for (int i = 0; i < 4; ++i) {
    swapped.at(i, 0) = psi.at(i, 1);
    swapped.at(i, 1) = psi.at(i, 0);
  }
  CHECK(span_equal(psi, swapped, SpanLevel::ring_module));
  Mat<SkewPolyRing> first = Mat<SkewPolyRing>::zero(ring, Orientation::right_columns, 4, 1);
  for (int i = 0; i < 4; ++i) first.at(i, 0) = psi.at(i, 0);
  CHECK_FALSE(span_equal(psi, first, SpanLevel::q_space));
  CHECK_FALSE(span_equal(psi, first, SpanLevel::ring_module));
}
