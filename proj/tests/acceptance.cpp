// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <vector>

#include "oremat/api.hpp"
#include "oremat/corpus.hpp"
#include "oremat/groups.hpp"
#include "oremat/linalg.hpp"
#include "oremat/valuated.hpp"
#include "support.hpp"

using namespace oremat;
using namespace oremat::testsupport;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::string&)> run;
};

template <class Ring>
Mat<Ring> load_matrix(const std::string& id) {
  Json ex = corpus_example(id);
  ParsedDocument parsed = parse_matrix_document(ex.at("document"));
  return std::get<Mat<Ring>>(parsed.matrix);
}

ParsedDocument load_parsed(const std::string& id) {
  Json ex = corpus_example(id);
  return parse_matrix_document(ex.at("document"));
}

std::map<std::uint32_t, std::int64_t> coeffs_from(const Json& j, int index_base) {
  std::map<std::uint32_t, std::int64_t> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::uint32_t mask = 0;
    std::string key = it.key();
    std::size_t pos = 0;
    while (pos < key.size()) {
      std::size_t comma = key.find(',', pos);
      if (comma == std::string::npos) comma = key.size();
      mask |= 1u << (std::stoi(key.substr(pos, comma - pos)) - index_base);
      pos = comma + 1;
    }
    out[mask] = it.value().get<std::int64_t>();
  }
  return out;
}

bool expect(bool cond, const std::string& what, std::string& why) {
  if (!cond && why.empty()) why = what;
  return cond;
}

// ---------------------------------------------------------------------------

bool criterion1(std::string& why) {
  auto psi = load_matrix<SkewPolyRing>("kf_u24");
  bool ok = expect(matroid_from_matrix(psi) == uniform_matroid(2, 4), "matroid is not U_{2,4}", why);
  ok &= expect(is_saturated(psi), "matrix not reported saturated", why);
  return ok;
}

bool criterion2(std::string& why) {
  auto psi = load_matrix<SkewPolyRing>("kf_u24");
  auto printed = load_matrix<SkewPolyRing>("dual_u24");
  Mat<SkewPolyRing> dual = dual_module(psi);
  bool ok = expect(span_equal(dual, printed, SpanLevel::ring_module), "dual span differs from the printed module", why);
  ok &= expect(matroid_from_matrix(dual) == uniform_matroid(2, 4), "dual matroid is not U_{2,4}", why);
  return ok;
}

bool criterion3(std::string& why) {
  Json ex = corpus_example("nonfano");
  ParsedDocument parsed = parse_matrix_document(ex.at("document"));
  auto& zmatx = std::get<Mat<IntegerRing>>(parsed.matrix);
  auto coeffs = coeffs_from(ex["expected"]["combination"]["coeffs"], parsed.index_base);
  bool ok = expect(linear_functional(lindstrom_valuation(zmatx), coeffs) == 1, "gamma over Z is not 1", why);

  HurwitzRing hw(2);
  Mat<HurwitzRing> hmat = Mat<HurwitzRing>::zero(hw, zmatx.orient, zmatx.rows, zmatx.cols);
  for (std::size_t i = 0; i < zmatx.a.size(); ++i) hmat.a[i] = Hurwitz::from_int(zmatx.a[i]);
  ok &= expect(linear_functional(lindstrom_valuation(hmat), coeffs) == 2, "gamma over the quaternions is not 2", why);

  // characteristic-2 commutative control: {4,5,6} collapses since det = -2
  ParsedDocument control = parse_matrix_document(ex["expected"]["control"]["document"]);
  auto& cmat = std::get<Mat<SkewPolyRing>>(control.matrix);
  ok &= expect(!is_independent_rows(qmat_of(cmat), cmat.orient, {3, 4, 5}),
               "triple {4,5,6} stays independent in characteristic 2", why);
  ok &= expect(is_independent_rows(qmat_of(zmatx), zmatx.orient, {3, 4, 5}),
               "triple {4,5,6} not independent over Z", why);
  return ok;
}

bool criterion4(std::string& why) {
  Json ex = corpus_example("nondual_u24");
  ParsedDocument parsed = parse_matrix_document(ex.at("document"));
  auto& primal = std::get<Mat<SkewPolyRing>>(parsed.matrix);
  auto coeffs = coeffs_from(ex["expected"]["combination"]["coeffs"], parsed.index_base);
  ValuatedMatroid w_primal = lindstrom_valuation(primal);
  std::int64_t primal_comb = linear_functional(w_primal, coeffs);
  bool ok = expect(primal_comb == 1, "primal combination is not v(y0) = 1", why);
  ok &= expect(((primal_comb % 3) + 3) % 3 == 1, "primal combination is not 1 mod 3", why);

  ParsedDocument side = parse_matrix_document(ex["expected"]["dual_side"]["document"]);
  auto& dual_side = std::get<Mat<SkewPolyRing>>(side.matrix);
  ValuatedMatroid w_side = lindstrom_valuation(dual_side);
  ok &= expect(linear_functional(w_side, coeffs) == -1, "dual-side combination is not -1", why);

  ValuatedMatroid w_star = dual_valuation(w_primal);
  ok &= expect(w_star.m == w_side.m && !differ_by_trivial(w_star, w_side).has_value(),
               "printed dual valuation differs from the dual valuation only trivially", why);
  return ok;
}

bool criterion5(std::string& why) {
  Json ex = corpus_example("lindstrom_grid");
  ParsedDocument parsed = parse_matrix_document(ex.at("document"));
  auto& grid = std::get<Mat<SkewPolyRing>>(parsed.matrix);
  bool ok = expect(q_rank(grid) == 4, "grid rank is not 4", why);
  std::vector<int> rows = {7, 11, 13, 14};  // 1-indexed 8, 12, 14, 15
  ok &= expect(is_independent_rows(qmat_of(grid), grid.orient, rows), "rows 8,12,14,15 not independent", why);
  ParsedDocument control = parse_matrix_document(ex["expected"]["control"]["document"]);
  auto& cmat = std::get<Mat<SkewPolyRing>>(control.matrix);
  ok &= expect(!is_independent_rows(qmat_of(cmat), cmat.orient, rows),
               "rows 8,12,14,15 stay independent with a central lambda", why);
  return ok;
}

bool criterion6(std::string& why) {
  auto psi = load_matrix<HurwitzRing>("elliptic9");
  QMat<HurwitzRing> q = qmat_of(psi);
  bool ok = true;
  for (auto dep : std::vector<std::vector<int>>{{0, 3, 8}, {1, 4, 8}, {2, 5, 8}})
    ok &= expect(!is_independent_rows(q, psi.orient, dep), "a stated collinear triple is independent", why);
  ok &= expect(is_independent_rows(q, psi.orient, {3, 4, 5}), "triple {3,4,5} not independent", why);
  ok &= expect(gaussian_rational_matroid(psi) == matroid_from_matrix(psi),
               "quaternion matroid disagrees with the Gaussian-rational oracle", why);
  return ok;
}

bool criterion7(std::string& why) {
  auto run_box = [&](const auto& m, const std::string& label) {
    FlockEngine eng(m);
    auto box = check_flock_box(eng, 2, 1, true, true);
    bool ok = expect(box.axioms.ok, label + ": " + box.axioms.first_violation, why);
    ok &= expect(box.consistency.ok, label + ": " + box.consistency.first_violation, why);
    return ok;
  };
  bool ok = run_box(load_matrix<SkewPolyRing>("kf_u24"), "kf_u24");
  ok &= run_box(load_matrix<SkewPolyRing>("dual_u24"), "dual_u24");
  ok &= run_box(load_matrix<IntegerRing>("nonfano"), "nonfano");
  ok &= run_box(random_skew_module(5, 2, 42), "random 5x2");
  return ok;
}

bool criterion8(std::string& why) {
  bool ok = true;
  auto run_vm = [&](const auto& m, const std::string& label) {
    ValuatedMatroid vm = lindstrom_valuation(m);
    ok &= expect(check_valuated_exchange(vm), label + ": exchange axiom fails", why);
    ok &= expect(three_term_check_all(vm), label + ": three-term minimum fails", why);
    if (m.orient == Orientation::right_columns)
      ok &= expect(check_circuit_identity(vm, valuated_circuits(m)), label + ": circuit identity fails", why);
  };
  for (const auto& id : corpus_ids()) {
    ParsedDocument parsed = load_parsed(id);
    std::visit([&](const auto& m) { run_vm(m, id); }, parsed.matrix);
  }
  // the printed dual-side realization is a computed valuation as well
  Json nd = corpus_example("nondual_u24");
  ParsedDocument side = parse_matrix_document(nd["expected"]["dual_side"]["document"]);
  run_vm(std::get<Mat<SkewPolyRing>>(side.matrix), "nondual_u24 dual side");
  return ok;
}

bool criterion9(std::string& why) {
  bool ok = true;
  SplitMix64 rng(2026);
  auto skew = SkewPolyRing(FqContext::make(2, {1, 1, 1}));
  IntegerRing zz(2);
  HurwitzRing hw(2);

  auto substrate = [&](const auto& ring, const std::string& label) {
    for (int t = 0; t < 1000; ++t) {
      auto a = ring.random_elem(rng, 3), b = ring.random_elem(rng, 3), c = ring.random_elem(rng, 3);
      ok &= expect(ring.equal(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c))),
                   label + ": associativity fails", why);
      ok &= expect(ring.equal(ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c))),
                   label + ": distributivity fails", why);
      auto x = random_q_nonzero(ring, rng, 3);
      auto y = random_q_nonzero(ring, rng, 3);
      ok &= expect(ring.q_val(ring.q_mul(x, y)) == ring.q_val(x) + ring.q_val(y),
                   label + ": v(xy) != v(x)+v(y)", why);
      ok &= expect(ring.q_val(ring.q_add(x, y)) >= min(ring.q_val(x), ring.q_val(y)),
                   label + ": ultrametric inequality fails", why);
      ok &= expect(ring.q_equal(ring.tau(ring.q_mul(x, y)), ring.q_mul(ring.tau(y), ring.tau(x))),
                   label + ": tau is not anti-multiplicative", why);
      ok &= expect(ring.q_equal(ring.tau(ring.tau(x)), x), label + ": tau is not an involution", why);
    }
  };
  substrate(skew, "skew");
  substrate(zz, "integers");
  substrate(hw, "quaternions");

  auto residues = [&](const auto& ring, const std::string& label) {
    for (int t = 0; t < 1000; ++t) {
      auto x = random_q_nonzero(ring, rng, 3);
      auto y = random_q_nonzero(ring, rng, 3);
      x = ring.q_mul(ring.q_uniformizer_pow(-ring.q_val(x).value()), x);
      y = ring.q_mul(ring.q_uniformizer_pow(-ring.q_val(y).value()), y);
      ok &= expect(ring.residue(ring.q_mul(x, y)) == ring.residue(x) * ring.residue(y),
                   label + ": residue not multiplicative", why);
      auto s = ring.q_add(x, y);
      if (!(ring.q_val(s) >= Valuation::finite(0))) continue;
      ok &= expect(ring.residue(s) == ring.residue(x) + ring.residue(y), label + ": residue not additive", why);
      ok &= expect(ring.residue(s).is_zero() == (ring.q_val(s) > Valuation::finite(0)),
                   label + ": residue kernel is not {v > 0}", why);
    }
  };
  residues(skew, "skew");
  residues(zz, "integers");

  // Hurwitz Euclidean property on 1000 fresh pairs
  for (int t = 0; t < 1000; ++t) {
    Hurwitz a = hw.random_elem(rng, 6);
    Hurwitz b = random_nonzero(hw, rng, 4);
    auto [q, r] = hurwitz_divmod_left(a, b);
    ok &= expect(q * b + r == a && r.norm() < b.norm(), "quaternions: remainder bound fails", why);
  }

  auto modules = [&](const auto& ring, const std::string& label) {
    using R = std::decay_t<decltype(ring)>;
    for (int t = 0; t < 20; ++t) {
      int rows = 2 + static_cast<int>(rng.below(3));
      int cols = 1 + static_cast<int>(rng.below(3));
      Mat<R> m = Mat<R>::zero(ring, Orientation::right_columns, rows, cols);
      for (auto& e : m.a) e = ring.random_elem(rng, 2);
      auto p = perp(m);
      ok &= expect(q_rank(m) + q_rank(p) == rows, label + ": rank sum fails", why);
      auto sat = saturate(m);
      ok &= expect(span_equal(perp(p), sat, SpanLevel::ring_module), label + ": perp^2 != saturate", why);
      ok &= expect(ring_span_contains(sat, m), label + ": saturation does not contain the module", why);
      ok &= expect(span_equal(sat, m, SpanLevel::q_space), label + ": saturation changes the Q-span", why);
      ok &= expect(span_equal(saturate(sat), sat, SpanLevel::ring_module), label + ": saturation not idempotent",
                   why);
    }
  };
  modules(skew, "skew");
  modules(zz, "integers");
  modules(hw, "quaternions");

  // point-evaluation commutation through the lower square of the dictionary
  auto kf = load_matrix<SkewPolyRing>("kf_u24");
  ok &= expect(verify_annihilator_ga(perp(kf), sample_points_ga(kf, 100, 42)),
               "additive point evaluation fails on kf_u24", why);
  auto toric = load_matrix<IntegerRing>("toric");
  ok &= expect(verify_annihilator_gm(perp(toric), sample_points_gm(toric, 100, 42)),
               "multiplicative point evaluation fails on toric", why);
  return ok;
}

}  // namespace

int main() {
  bool c4 = false, c8 = false;
  std::vector<Criterion> criteria = {
      {1, "kf_u24 reproduction: matroid U_{2,4} and saturation", criterion1},
      {2, "dual_u24 reproduction: dual module span and matroid", criterion2},
      {3, "non-Fano gamma invariant: 1 over Z, 2 over quaternions, char-2 collapse", criterion3},
      {4, "nondual_u24 desk computations and trivial-shift infeasibility", criterion4},
      {5, "lindstrom_grid rank and noncommutativity witness", criterion5},
      {6, "elliptic 9x3: stated triples and Gaussian-rational agreement", criterion6},
      {7, "flock axioms and slice/argmin consistency on radius-2 boxes", criterion7},
      {8, "valuated-matroid properties of every computed valuation", criterion8},
      {9, "algebraic substrate: ring/valuation/tau/residue, perp/saturate, points", criterion9},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    std::string why;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << ms.count()
              << " ms]";
    if (!ok) std::cout << " -- " << why;
    std::cout << "\n";
    all_ok &= ok;
    if (c.id == 4) c4 = ok;
    if (c.id == 8) c8 = ok;
  }
  // the full-generality statements (algebraically closed coefficients, all
  // varieties) are runtime-untestable; their property-based surrogates are
  // criteria 4 and 8
  bool c10 = c4 && c8;
  std::cout << (c10 ? "PASS" : "FAIL")
            << " criterion 10: paper-scale limitations acknowledged via the surrogate criteria 4 and 8\n";
  all_ok &= c10;
  std::cout << (all_ok ? "acceptance: all criteria passed\n" : "acceptance: FAILURES above\n");
  return all_ok ? 0 : 1;
}
