#include "oremat/document.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace oremat {

namespace {

bool nonneg_int(const Json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::uint64_t get_prime(const Json& ring) {
  if (!ring.contains("p") || !nonneg_int(ring["p"]))
    throw SchemaError("ring descriptor: p must be a positive integer");
  std::uint64_t p = ring["p"].get<std::uint64_t>();
  if (!is_prime_u64(p)) throw InvariantError("ring descriptor: p must be prime");
  return p;
}

SkewPoly parse_skew_entry(const SkewPolyRing& ring, const Json& e) {
  if (!e.is_array()) throw SchemaError("skew entry must be an array of field elements");
  const auto& ctx = ring.field();
  std::vector<FqElem> coeffs;
  for (const auto& fe : e) {
    if (!fe.is_array()) throw SchemaError("field element must be an array of residues");
    std::vector<std::uint64_t> coords;
    for (const auto& c : fe) {
      if (!nonneg_int(c)) throw SchemaError("field element residues must be nonnegative integers");
      std::uint64_t v = c.get<std::uint64_t>();
      if (v >= ctx->p()) throw SchemaError("field element residue out of range");
      coords.push_back(v);
    }
    if (coords.size() != ctx->k()) throw SchemaError("field element must have k residues");
    coeffs.emplace_back(ctx, std::move(coords));
  }
  return SkewPoly(ctx, std::move(coeffs));
}

Int parse_int_entry(const Json& e) {
  if (e.is_number_integer()) return Int(e.get<std::int64_t>());
  if (e.is_string()) {
    const std::string s = e.get<std::string>();
    if (s.empty()) throw SchemaError("integer entry: empty string");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw SchemaError("integer entry: sign without digits");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw SchemaError("integer entry: not a decimal string");
    return Int(s);
  }
  throw SchemaError("integer entry must be a decimal string or integer");
}

Hurwitz parse_hurwitz_entry(const Json& e) {
  if (!e.is_array() || e.size() != 4) throw SchemaError("quaternion entry must be [A,B,C,D]");
  std::array<Int, 4> c;
  for (int i = 0; i < 4; ++i) {
    if (e[i].is_number_integer())
      c[i] = Int(e[i].get<std::int64_t>());
    else if (e[i].is_string())
      c[i] = Int(e[i].get<std::string>());
    else
      throw SchemaError("quaternion coordinate must be an integer");
  }
  return Hurwitz(c[0], c[1], c[2], c[3]);  // parity enforced by the type
}

template <class Ring>
Mat<Ring> parse_matrix_body(const Ring& ring, const Json& doc, Orientation orient, int rows, int cols) {
  const Json& entries = doc.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    throw SchemaError("entries must be an array with one row per matrix row");
  Mat<Ring> m = Mat<Ring>::zero(ring, orient, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw SchemaError("entries row has the wrong length");
    for (int j = 0; j < cols; ++j) {
      if constexpr (Ring::kind == RingKind::skew_poly)
        m.at(i, j) = parse_skew_entry(ring, row[j]);
      else if constexpr (Ring::kind == RingKind::integers)
        m.at(i, j) = parse_int_entry(row[j]);
      else
        m.at(i, j) = parse_hurwitz_entry(row[j]);
    }
  }
  return m;
}

}  // namespace

ParsedDocument parse_matrix_document(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  if (!doc.contains("ring")) throw SchemaError("document: missing ring descriptor");
  const Json& ring = doc["ring"];
  if (!ring.is_object() || !ring.contains("kind") || !ring["kind"].is_string())
    throw SchemaError("ring descriptor: missing kind");
  if (!doc.contains("rows") || !nonneg_int(doc["rows"]) || !doc.contains("cols") || !nonneg_int(doc["cols"]))
    throw SchemaError("document: rows and cols must be nonnegative integers");
  int rows = doc["rows"].get<int>();
  int cols = doc["cols"].get<int>();
  if (rows < 1) throw SchemaError("document: need at least one row");
  if (cols < 0) throw SchemaError("document: negative column count");
  Orientation orient = Orientation::right_columns;
  if (doc.contains("orientation")) {
    const std::string o = doc["orientation"].get<std::string>();
    if (o == "right")
      orient = Orientation::right_columns;
    else if (o == "left")
      orient = Orientation::left_rows;
    else
      throw SchemaError("document: orientation must be \"right\" or \"left\"");
  }
  int index_base = 1;
  if (doc.contains("index_base")) {
    if (!nonneg_int(doc["index_base"]) || doc["index_base"].get<int>() > 1)
      throw SchemaError("document: index_base must be 0 or 1");
    index_base = doc["index_base"].get<int>();
  }
  const std::string kind = ring["kind"].get<std::string>();
  if (kind == "skew_poly") {
    std::uint64_t p = get_prime(ring);
    if (!ring.contains("k") || !nonneg_int(ring["k"]) || ring["k"].get<unsigned>() < 1)
      throw SchemaError("ring descriptor: k must be a positive integer");
    unsigned k = ring["k"].get<unsigned>();
    std::vector<std::uint64_t> modulus;
    if (ring.contains("modulus")) {
      if (!ring["modulus"].is_array() || ring["modulus"].size() != k + 1)
        throw SchemaError("ring descriptor: modulus must have k+1 coefficients");
      for (const auto& c : ring["modulus"]) {
        if (!nonneg_int(c)) throw SchemaError("ring descriptor: modulus coefficients");
        modulus.push_back(c.get<std::uint64_t>());
      }
    }
    FqContextPtr ctx = modulus.empty() ? FqContext::default_field(p, k) : FqContext::make(p, modulus);
    SkewPolyRing r(ctx);
    return {parse_matrix_body(r, doc, orient, rows, cols), index_base};
  }
  if (kind == "integers") {
    IntegerRing r(get_prime(ring));
    return {parse_matrix_body(r, doc, orient, rows, cols), index_base};
  }
  if (kind == "hurwitz") {
    HurwitzRing r(get_prime(ring));
    return {parse_matrix_body(r, doc, orient, rows, cols), index_base};
  }
  throw SchemaError("ring descriptor: unknown kind \"" + kind + "\"");
}

ParsedDocument parse_matrix_document_text(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw SchemaError("document is not valid JSON");
  return parse_matrix_document(doc);
}

Json ring_descriptor_json(const SkewPolyRing& r) {
  Json j;
  j["kind"] = "skew_poly";
  j["p"] = r.field()->p();
  j["k"] = r.field()->k();
  j["modulus"] = r.field()->modulus();
  return j;
}

Json ring_descriptor_json(const IntegerRing& r) {
  Json j;
  j["kind"] = "integers";
  j["p"] = r.p();
  return j;
}

Json ring_descriptor_json(const HurwitzRing& r) {
  Json j;
  j["kind"] = "hurwitz";
  j["p"] = r.p();
  return j;
}

Json entry_json(const SkewPolyRing&, const SkewPoly& e) {
  Json a = Json::array();
  for (int i = 0; i <= e.degree(); ++i) a.push_back(e.coeff(i).coords_vec());
  return a;
}

Json entry_json(const IntegerRing&, const Int& e) { return e.str(); }

Json entry_json(const HurwitzRing&, const Hurwitz& e) {
  Json a = Json::array();
  for (const auto& c : e.doubled()) {
    if (c >= Int(std::numeric_limits<std::int64_t>::min()) && c <= Int(std::numeric_limits<std::int64_t>::max()))
      a.push_back(c.convert_to<std::int64_t>());
    else
      a.push_back(c.str());
  }
  return a;
}

namespace {

std::string set_key(std::uint32_t mask, int index_base) {
  std::string s;
  for (int e : set_of(mask)) {
    if (!s.empty()) s += ",";
    s += std::to_string(e + index_base);
  }
  return s;
}

}  // namespace

Json matroid_json(const Matroid& m, int index_base) {
  Json j;
  j["n"] = m.n;
  j["r"] = m.r;
  // lexicographic order on the printed element lists
  std::vector<std::vector<int>> lists;
  for (std::uint32_t b : m.bases) {
    std::vector<int> s = set_of(b);
    for (auto& e : s) e += index_base;
    lists.push_back(std::move(s));
  }
  std::sort(lists.begin(), lists.end());
  j["bases"] = lists;
  return j;
}

Json valuation_json(const ValuatedMatroid& vm, int index_base) {
  Json j;
  j["matroid"] = matroid_json(vm.m, index_base);
  Json mu = Json::object(), mu_norm = Json::object();
  ValuatedMatroid norm = vm.normalized();
  for (std::size_t i = 0; i < vm.m.bases.size(); ++i) {
    mu[set_key(vm.m.bases[i], index_base)] = vm.mu[i];
    mu_norm[set_key(vm.m.bases[i], index_base)] = norm.mu[i];
  }
  j["mu"] = std::move(mu);
  j["mu_normalized"] = std::move(mu_norm);
  return j;
}

Json fq_matrix_json(const FqMat& m) {
  Json j;
  Json field;
  field["p"] = m.ctx->p();
  field["k"] = m.ctx->k();
  field["modulus"] = m.ctx->modulus();
  j["field"] = std::move(field);
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  Json entries = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < m.cols; ++jj) row.push_back(m.at(i, jj).coords_vec());
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace oremat
