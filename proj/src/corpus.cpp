#include "oremat/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "oremat/groups.hpp"
#include "oremat/linalg.hpp"
#include "oremat/valuated.hpp"

#ifndef OREMAT_DEFAULT_DATA_DIR
#define OREMAT_DEFAULT_DATA_DIR "data"
#endif

namespace oremat {

std::string corpus_data_dir() {
  if (const char* env = std::getenv("OREMAT_DATA_DIR")) return env;
  return OREMAT_DEFAULT_DATA_DIR;
}

const std::vector<std::string>& corpus_ids() {
  static const std::vector<std::string> ids = {"kf_u24",  "dual_u24",    "toric",         "elliptic9",
                                               "nonfano", "nondual_u24", "lindstrom_grid"};
  return ids;
}

Json corpus_example(const std::string& id) {
  bool known = false;
  for (const auto& k : corpus_ids()) known = known || k == id;
  if (!known) throw SchemaError("unknown example id: " + id);
  std::string path = corpus_data_dir() + "/" + id + ".json";
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open example file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Json j = Json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) throw SchemaError("example file is not valid JSON: " + path);
  return j;
}

Mat<SkewPolyRing> random_skew_module(int rows, int cols, std::uint64_t seed) {
  SkewPolyRing ring(FqContext::make(2, {1, 1, 1}));
  SplitMix64 rng(seed);
  while (true) {
    Mat<SkewPolyRing> m = Mat<SkewPolyRing>::zero(ring, Orientation::right_columns, rows, cols);
    for (auto& e : m.a) e = ring.random_elem(rng, 2);
    if (q_rank(m) == cols) return saturate(m);
  }
}

namespace {

struct GaussRat {
  Rat re, im;
  bool is_zero() const { return re == 0 && im == 0; }
  GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
  GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
  GaussRat operator*(const GaussRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRat inverse() const {
    Rat n = re * re + im * im;
    return {re / n, -im / n};
  }
};

int gauss_rank(std::vector<std::vector<GaussRat>> w) {
  int rows = static_cast<int>(w.size());
  int cols = rows ? static_cast<int>(w[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (!w[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(w[piv], w[rank]);
    GaussRat inv = w[rank][col].inverse();
    for (int j = col; j < cols; ++j) w[rank][j] = inv * w[rank][j];
    for (int i = 0; i < rows; ++i) {
      if (i == rank || w[i][col].is_zero()) continue;
      GaussRat f = w[i][col];
      for (int j = col; j < cols; ++j) w[i][j] = w[i][j] - f * w[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Matroid gaussian_rational_matroid(const Mat<HurwitzRing>& m) {
  std::vector<std::vector<GaussRat>> entries(m.rows, std::vector<GaussRat>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const auto& d = m.at(i, j).doubled();
      if (d[2] != 0 || d[3] != 0)
        throw std::invalid_argument("gaussian_rational_matroid: entry outside Z[i]");
      entries[i][j] = {Rat(d[0], 2), Rat(d[1], 2)};
    }
  return matroid_from_oracle(m.rows, [&](const std::vector<int>& subset) {
    std::vector<std::vector<GaussRat>> sub;
    for (int i : subset) sub.push_back(entries[i]);
    return gauss_rank(std::move(sub)) == static_cast<int>(subset.size());
  });
}

// ---------------------------------------------------------------------------
// Fact runner

namespace {

std::vector<int> parse_set(const Json& arr, int index_base) {
  std::vector<int> s;
  for (const auto& e : arr) s.push_back(e.get<int>() - index_base);
  return s;
}

std::uint32_t parse_mask_key(const std::string& key, int index_base) {
  std::uint32_t mask = 0;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) mask |= 1u << (std::stoi(part) - index_base);
  return mask;
}

std::map<std::uint32_t, std::int64_t> parse_coeffs(const Json& j, int index_base) {
  std::map<std::uint32_t, std::int64_t> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[parse_mask_key(it.key(), index_base)] = it.value().get<std::int64_t>();
  return out;
}

struct FactResult {
  bool ok = true;
  Json detail;
};

template <class Ring>
FactResult check_sets(const Mat<Ring>& m, const Json& fact, int base) {
  FactResult r;
  QMat<Ring> q = qmat_of(m);
  auto test = [&](const Json& sets, bool want_independent) {
    for (const auto& sj : sets) {
      std::vector<int> s = parse_set(sj, base);
      bool indep = is_independent_rows(q, m.orient, s);
      if (indep != want_independent) {
        r.ok = false;
        r.detail["failed_set"] = sj;
      }
    }
  };
  if (fact.contains("dependent_sets")) test(fact["dependent_sets"], false);
  if (fact.contains("independent_sets")) test(fact["independent_sets"], true);
  if (fact.contains("rank")) {
    int got = q_rank(q);
    if (got != fact["rank"].get<int>()) {
      r.ok = false;
      r.detail["rank"] = got;
    }
  }
  return r;
}

template <class Ring>
FactResult run_fact(const std::string& name, const Json& fact, const Mat<Ring>& m, int base, const Json& example);

FactResult run_fact_any(const std::string& name, const Json& fact, ParsedDocument& parsed, const Json& example) {
  return std::visit([&](auto& m) { return run_fact(name, fact, m, parsed.index_base, example); }, parsed.matrix);
}

// gamma over the quaternion order: re-embed an integer matrix
Mat<HurwitzRing> embed_hurwitz(const Mat<IntegerRing>& m) {
  HurwitzRing ring(m.ring.p());
  Mat<HurwitzRing> out = Mat<HurwitzRing>::zero(ring, m.orient, m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = Hurwitz::from_int(m.a[i]);
  return out;
}

template <class Ring>
FactResult run_fact(const std::string& name, const Json& fact, const Mat<Ring>& m, int base, const Json& example) {
  FactResult r;
  if (name == "matroid") {
    Json got = matroid_json(matroid_from_matrix(m), base);
    r.ok = got == fact["value"];
    if (!r.ok) r.detail["got"] = got;
  } else if (name == "saturated") {
    bool got = is_saturated(m);
    r.ok = got == fact["value"].get<bool>();
    if (!r.ok) r.detail["got"] = got;
  } else if (name == "mu") {
    Json got = valuation_json(lindstrom_valuation(m), base)["mu"];
    r.ok = got == fact["values"];
    if (!r.ok) r.detail["got"] = got;
  } else if (name == "sets") {
    r = check_sets(m, fact, base);
  } else if (name == "dual_of") {
    Json other = corpus_example(fact["id"].get<std::string>());
    ParsedDocument src = parse_matrix_document(other["document"]);
    if (!std::holds_alternative<Mat<Ring>>(src.matrix)) throw SchemaError("dual_of: ring mismatch");
    Mat<Ring> dual = dual_module(std::get<Mat<Ring>>(src.matrix));
    r.ok = span_equal(dual, m, SpanLevel::ring_module);
    if (!r.ok) r.detail["got"] = serialize_matrix_document(dual, base);
  } else if (name == "perp") {
    ParsedDocument expect = parse_matrix_document(fact["value"]);
    if (!std::holds_alternative<Mat<Ring>>(expect.matrix)) throw SchemaError("perp: ring mismatch");
    Mat<Ring> got = perp(m);
    r.ok = span_equal(got, std::get<Mat<Ring>>(expect.matrix), SpanLevel::ring_module);
    if (!r.ok) r.detail["got"] = serialize_matrix_document(got, base);
  } else if (name == "combination") {
    auto vm = lindstrom_valuation(m);
    std::int64_t got = linear_functional(vm, parse_coeffs(fact["coeffs"], base));
    r.ok = got == fact["value"].get<std::int64_t>();
    if (r.ok && fact.contains("mod")) {
      std::int64_t modulus = fact["mod"][0].get<std::int64_t>();
      std::int64_t residue = fact["mod"][1].get<std::int64_t>();
      r.ok = ((got % modulus) + modulus) % modulus == residue;
    }
    if (!r.ok) r.detail["got"] = got;
  } else if (name == "dual_side") {
    ParsedDocument side = parse_matrix_document(fact["document"]);
    if (!std::holds_alternative<Mat<Ring>>(side.matrix)) throw SchemaError("dual_side: ring mismatch");
    const Mat<Ring>& ds = std::get<Mat<Ring>>(side.matrix);
    auto vm_side = lindstrom_valuation(ds);
    std::int64_t got = linear_functional(vm_side, parse_coeffs(fact["combination"]["coeffs"], base));
    r.ok = got == fact["combination"]["value"].get<std::int64_t>();
    if (!r.ok) r.detail["combination"] = got;
    if (fact.value("trivial_shift_to_dual", "") == "none") {
      auto w_star = dual_valuation(lindstrom_valuation(m));
      bool none = w_star.m != vm_side.m || !differ_by_trivial(w_star, vm_side).has_value();
      if (!none) {
        r.ok = false;
        r.detail["trivial_shift_to_dual"] = "found";
      }
    }
  } else if (name == "gamma_hurwitz") {
    if constexpr (Ring::kind == RingKind::integers) {
      auto vm = lindstrom_valuation(embed_hurwitz(m));
      std::int64_t got = linear_functional(vm, parse_coeffs(fact["coeffs"], base));
      r.ok = got == fact["value"].get<std::int64_t>();
      if (!r.ok) r.detail["got"] = got;
    } else {
      throw SchemaError("gamma_hurwitz: expects an integer document");
    }
  } else if (name == "control") {
    ParsedDocument control = parse_matrix_document(fact["document"]);
    r = std::visit([&](auto& cm) { return check_sets(cm, fact, base); }, control.matrix);
  } else if (name == "gaussian_oracle") {
    if constexpr (Ring::kind == RingKind::hurwitz) {
      r.ok = gaussian_rational_matroid(m) == matroid_from_matrix(m);
    } else {
      throw SchemaError("gaussian_oracle: expects a quaternion document");
    }
  } else if (name == "exchange") {
    r.ok = check_basis_exchange(matroid_from_matrix(m)) == fact["value"].get<bool>();
  } else if (name == "flock_radius") {
    if (!m.ring.supports_flock()) throw UnsupportedRingError("flock facts on a ring without flock support");
    int radius = fact["value"].get<int>();
    FlockEngine eng(m);
    auto box = check_flock_box(eng, radius, /*threads=*/1, true, true);
    r.ok = box.ok();
    if (!box.axioms.ok) r.detail["axioms"] = box.axioms.first_violation;
    if (!box.consistency.ok) r.detail["consistency"] = box.consistency.first_violation;
  } else if (name == "points") {
    int count = fact["count"].get<int>();
    std::uint64_t seed = fact["seed"].get<std::uint64_t>();
    if constexpr (Ring::kind == RingKind::skew_poly) {
      r.ok = verify_annihilator_ga(perp(m), sample_points_ga(m, count, seed));
    } else if constexpr (Ring::kind == RingKind::integers) {
      r.ok = verify_annihilator_gm(perp(m), sample_points_gm(m, count, seed));
    } else {
      throw UnsupportedRingError("points: no point model for the quaternion ring");
    }
  } else if (name == "valuated") {
    auto vm = lindstrom_valuation(m);
    bool ok = check_valuated_exchange(vm) && three_term_check_all(vm);
    if (m.orient == Orientation::right_columns) ok = ok && check_circuit_identity(vm, valuated_circuits(m));
    r.ok = ok;
  } else {
    throw SchemaError("unknown fact kind: " + name);
  }
  (void)example;
  return r;
}

}  // namespace

Json run_example(const std::string& id) {
  Json example = corpus_example(id);
  ParsedDocument parsed = parse_matrix_document(example.at("document"));
  Json facts = Json::array();
  bool all_ok = true;
  const Json& expected = example.at("expected");
  for (auto it = expected.begin(); it != expected.end(); ++it) {
    FactResult res = run_fact_any(it.key(), it.value(), parsed, example);
    Json f;
    f["name"] = it.key();
    f["ok"] = res.ok;
    if (it.value().contains("provenance")) f["provenance"] = it.value()["provenance"];
    if (!res.detail.is_null()) f["detail"] = res.detail;
    all_ok = all_ok && res.ok;
    facts.push_back(std::move(f));
  }
  Json out;
  out["id"] = id;
  out["ok"] = all_ok;
  out["facts"] = std::move(facts);
  return out;
}

}  // namespace oremat
