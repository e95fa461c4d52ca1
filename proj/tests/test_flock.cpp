#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oremat/flock.hpp"
#include "support.hpp"

using namespace oremat;
using namespace oremat::testsupport;

namespace {

Mat<SkewPolyRing> kf_matrix(const SkewPolyRing& ring) {
  return smat(ring, Orientation::right_columns,
              {{{{1}}, {}}, {{}, {{1}}}, {{{1}}, {{1}}}, {{{1}}, {{0}, {1}}}});
}

FqMat fq_from(const FqContextPtr& ctx, const std::vector<std::vector<std::uint64_t>>& rows) {
  FqMat m = FqMat::zero(ctx, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = FqElem(ctx, FqCoords{rows[i][j]});
  return m;
}

}  // namespace

TEST_CASE("slices of the 4x2 module at explicit shifts") {
  auto ring = f2_ring();
  auto psi = kf_matrix(ring);
  FlockEngine<SkewPolyRing> eng(psi);
  CHECK(eng.rank() == 2);
  {
    FlockSlice s = eng.slice({0, 0, 0, 0});
    // columns reduce to their constant terms
    FqMat expected = fq_from(ring.field(), {{1, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(fq_same_column_span(s.basis, expected));
  }
  {
    FlockSlice s = eng.slice({0, 0, 0, 1});
    FqMat expected = fq_from(ring.field(), {{0, 0}, {0, 1}, {0, 1}, {1, 1}});
    CHECK(fq_same_column_span(s.basis, expected));
  }
}

TEST_CASE("slice dimension always equals the rank") {
  auto ring = f4_ring();
  SplitMix64 rng(3);
  for (int t = 0; t < 10; ++t) {
    Mat<SkewPolyRing> m = Mat<SkewPolyRing>::zero(ring, Orientation::right_columns, 4, 2);
    for (auto& e : m.a) e = ring.random_elem(rng, 2);
    if (q_rank(m) != 2) continue;
    FlockEngine<SkewPolyRing> eng(m);
    for (auto alpha : std::vector<std::vector<std::int64_t>>{{0, 0, 0, 0}, {1, -2, 0, 3}, {-1, -1, 2, 0}}) {
      FlockSlice s = eng.slice(alpha);
      CHECK(s.basis.cols == 2);
      CHECK(fq_rank(s.basis) == 2);
    }
  }
}

TEST_CASE("full module slices to the whole space") {
  auto ring = f2_ring();
  Mat<SkewPolyRing> full = smat(ring, Orientation::right_columns, {{{{1}}, {}}, {{}, {{1}}}});
  FlockSlice s = flock_slice(full, {3, -2});
  CHECK(s.basis.cols == 2);
  CHECK(fq_rank(s.basis) == 2);
}

TEST_CASE("flock matroids by slice and argmin agree on the 4x2 module") {
  auto ring = f2_ring();
  auto psi = kf_matrix(ring);
  {
    Matroid m = flock_matroid(psi, {0, 0, 0, 0}, FlockMatroidMethod::slice);
    // all pairs except {1,4}
    Matroid expected = uniform_matroid(2, 4);
    expected.bases.erase(std::remove(expected.bases.begin(), expected.bases.end(), mask_of({0, 3})),
                         expected.bases.end());
    CHECK(m == expected);
    CHECK(flock_matroid(psi, {0, 0, 0, 0}, FlockMatroidMethod::argmin) == expected);
  }
  {
    Matroid m = flock_matroid(psi, {0, 0, 0, 1}, FlockMatroidMethod::slice);
    Matroid expected;
    expected.n = 4;
    expected.r = 2;
    expected.bases = {mask_of({1, 3}), mask_of({2, 3})};
    std::sort(expected.bases.begin(), expected.bases.end());
    CHECK(m == expected);
    CHECK(flock_matroid(psi, {0, 0, 0, 1}, FlockMatroidMethod::argmin) == expected);
  }
}

TEST_CASE("integer module slices flip with the shift") {
  IntegerRing zz(2);
  Mat<IntegerRing> m = zmat(zz, Orientation::right_columns, {{1}, {2}});
  FlockEngine<IntegerRing> eng(m);
  auto fp = zz.residue_field();
  CHECK(fq_same_column_span(eng.slice({0, 0}).basis, fq_from(fp, {{1}, {0}})));
  CHECK(fq_same_column_span(eng.slice({0, 1}).basis, fq_from(fp, {{1}, {1}})));
  CHECK(fq_same_column_span(eng.slice({0, 2}).basis, fq_from(fp, {{0}, {1}})));
  auto rep = check_flock_axioms(m, 1);
  CHECK(rep.ok);
}

TEST_CASE("axioms hold on boxes around the corpus modules") {
  auto ring = f2_ring();
  auto psi = kf_matrix(ring);
  auto rep = check_flock_axioms(psi, 2);
  CHECK(rep.ok);
  CHECK(rep.points == 625);
  auto cons = check_flock_valuation_consistency(psi, 2);
  CHECK(cons.ok);
  CHECK(cons.points == 625);

  // rank-n module: slices are everything, trivially consistent
  Mat<SkewPolyRing> full = smat(ring, Orientation::right_columns, {{{{1}}, {}}, {{}, {{1}}}});
  CHECK(check_flock_axioms(full, 2).ok);
  CHECK(check_flock_valuation_consistency(full, 2).ok);
}

TEST_CASE("translation by the all-one vector is the residue twist") {
  auto ring = f4_ring();
  SplitMix64 rng(5);
  Mat<SkewPolyRing> m = Mat<SkewPolyRing>::zero(ring, Orientation::right_columns, 3, 2);
  for (auto& e : m.a) e = ring.random_elem(rng, 2);
  if (q_rank(m) == 2) {
    FlockEngine<SkewPolyRing> eng(m);
    for (auto alpha : std::vector<std::vector<std::int64_t>>{{0, 0, 0}, {1, 0, -1}}) {
      auto up = alpha;
      for (auto& x : up) ++x;
      FqMat twisted = eng.slice(alpha).basis;
      for (auto& e : twisted.a) e = e.frobenius_inverse();
      CHECK(fq_same_column_span(eng.slice(up).basis, twisted));
    }
  }
}

TEST_CASE("rank zero modules are trivially consistent") {
  IntegerRing zz(2);
  Mat<IntegerRing> z{zz, Orientation::right_columns, 2, 0, {}};
  CHECK(check_flock_axioms(z, 1).ok);
  CHECK(check_flock_valuation_consistency(z, 1).ok);
}

TEST_CASE("quaternion slices are rejected with the named error") {
  HurwitzRing hw(2);
  Mat<HurwitzRing> m = Mat<HurwitzRing>::zero(hw, Orientation::right_columns, 2, 1);
  m.at(0, 0) = Hurwitz::one();
  m.at(1, 0) = Hurwitz::one();
  CHECK_THROWS_AS(flock_slice(m, {0, 0}), UnsupportedRingError);
  CHECK_THROWS_AS(check_flock_axioms(m, 1), UnsupportedRingError);
}

TEST_CASE("threaded sweeps match the single-threaded result") {
  auto ring = f2_ring();
  auto psi = kf_matrix(ring);
  auto a1 = check_flock_axioms(psi, 2, 1);
  auto a4 = check_flock_axioms(psi, 2, 4);
  CHECK(a1.ok == a4.ok);
  CHECK(a1.points == a4.points);
}
