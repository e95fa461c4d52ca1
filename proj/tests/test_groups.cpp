#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oremat/groups.hpp"
#include "support.hpp"

using namespace oremat;
using namespace oremat::testsupport;

namespace {

Mat<SkewPolyRing> kf_matrix(const SkewPolyRing& ring) {
  return smat(ring, Orientation::right_columns,
              {{{{1}}, {}}, {{}, {{1}}}, {{{1}}, {{1}}}, {{{1}}, {{0}, {1}}}});
}

}  // namespace

TEST_CASE("additive evaluation: (F^2+F)(x) = x^4 + x^2") {
  auto ring = f2_ring();
  auto k = ExtField::make(ring.field(), 3);
  SplitMix64 rng(1);
  SkewPoly e = SkewPoly::f_power(ring.field(), 2) + SkewPoly::f_power(ring.field(), 1);
  for (int t = 0; t < 20; ++t) {
    auto x = k->random(rng);
    auto x2 = k->mul(x, x);
    auto x4 = k->mul(x2, x2);
    CHECK(k->equal(eval_endo_ga(k, e, x), k->add(x4, x2)));
  }
}

TEST_CASE("evaluation respects the ring structure") {
  auto ring = f4_ring();
  auto k = ExtField::make(ring.field(), 2);
  SplitMix64 rng(2);
  for (int t = 0; t < 60; ++t) {
    SkewPoly e1 = ring.random_elem(rng, 2), e2 = ring.random_elem(rng, 2);
    auto x = k->random(rng);
    // addition
    CHECK(k->equal(eval_endo_ga(k, e1 + e2, x), k->add(eval_endo_ga(k, e1, x), eval_endo_ga(k, e2, x))));
    // composition matches skew multiplication
    CHECK(k->equal(eval_endo_ga(k, e1 * e2, x), eval_endo_ga(k, e1, eval_endo_ga(k, e2, x))));
  }
  // eval(F * lam, x) = (lam x)^2 both ways
  FqElem lam = FqElem::generator(ring.field());
  SkewPoly F = SkewPoly::f_power(ring.field(), 1);
  auto x = k->random(rng);
  auto lhs = eval_endo_ga(k, F * SkewPoly::constant(lam), x);
  auto lx = k->mul(k->embed(lam), x);
  CHECK(k->equal(lhs, k->mul(lx, lx)));
}

TEST_CASE("multiplicative evaluation") {
  auto f = FqContext::prime_field(10007);
  FqElem t = FqElem::from_int(f, 5);
  CHECK(eval_endo_gm(Int(-2), t) == t.pow(Int(-2)));
  CHECK(eval_endo_gm(Int(3), t) * eval_endo_gm(Int(-3), t) == FqElem::one(f));
  CHECK_THROWS_AS(eval_endo_gm(Int(2), FqElem::zero(f)), std::domain_error);
}

TEST_CASE("sampled points follow the parametrization") {
  auto ring = f2_ring();
  auto psi = kf_matrix(ring);
  auto pts = sample_points_ga(psi, 40, 42);
  REQUIRE(pts.size() == 40);
  auto k = ExtField::make(ring.field(), 5);
  for (const auto& pt : pts) {
    // (a, b, a+b, a+b^2)
    CHECK(k->equal(pt.coords[2], k->add(pt.coords[0], pt.coords[1])));
    auto b2 = k->mul(pt.coords[1], pt.coords[1]);
    CHECK(k->equal(pt.coords[3], k->add(pt.coords[0], b2)));
  }
  // deterministic under the seed
  auto again = sample_points_ga(psi, 40, 42);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int c = 0; c < 4; ++c) CHECK(k->equal(pts[i].coords[c], again[i].coords[c]));
  auto other = sample_points_ga(psi, 40, 43);
  bool all_same = true;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int c = 0; c < 4; ++c) all_same = all_same && k->equal(pts[i].coords[c], other[i].coords[c]);
  CHECK_FALSE(all_same);
}

TEST_CASE("annihilator verification on the additive group") {
  auto ring = f2_ring();
  auto psi = kf_matrix(ring);
  auto pts = sample_points_ga(psi, 60, 7);
  CHECK(verify_annihilator_ga(perp(psi), pts));
  // a row that is not an annihilator fails for generic points
  Mat<SkewPolyRing> bad = smat(ring, Orientation::left_rows, {{{{1}}, {}, {}, {}}});
  CHECK_FALSE(verify_annihilator_ga(bad, pts));
}

TEST_CASE("annihilator verification on the torus") {
  IntegerRing zz(2);
  Mat<IntegerRing> n = zmat(zz, Orientation::right_columns, {{1, 0}, {0, 1}, {1, 1}});
  auto pts = sample_points_gm(n, 60, 7);
  for (const auto& pt : pts) CHECK(pt.coords[2] == pt.coords[0] * pt.coords[1]);
  Mat<IntegerRing> j = zmat(zz, Orientation::left_rows, {{1, 1, -1}});
  CHECK(verify_annihilator_gm(j, pts));
  CHECK(verify_annihilator_gm(perp(n), pts));
  Mat<IntegerRing> bad = zmat(zz, Orientation::left_rows, {{1, 0, 0}});
  CHECK_FALSE(verify_annihilator_gm(bad, pts));
}

TEST_CASE("dual module points satisfy the swapped parametrization") {
  auto ring = f2_ring();
  // (a+b^2, a+b, a, b^2) from the printed dual module
  Mat<SkewPolyRing> dual = smat(ring, Orientation::right_columns,
                                {{{{1}}, {{0}, {1}}}, {{{1}}, {{1}}}, {{{1}}, {}}, {{}, {{0}, {1}}}});
  auto pts = sample_points_ga(dual, 30, 9);
  auto k = ExtField::make(ring.field(), 5);
  for (const auto& pt : pts) {
    auto a = pt.coords[2];
    auto b2 = pt.coords[3];
    CHECK(k->equal(pt.coords[0], k->add(a, b2)));
  }
  CHECK(verify_annihilator_ga(perp(dual), pts));
}

TEST_CASE("zero module samples to the origin") {
  auto ring = f2_ring();
  Mat<SkewPolyRing> zero_mod{ring, Orientation::right_columns, 3, 0, {}};
  auto pts = sample_points_ga(zero_mod, 5, 1);
  auto k = ExtField::make(ring.field(), 5);
  for (const auto& pt : pts)
    for (const auto& c : pt.coords) CHECK(k->is_zero(c));
}
