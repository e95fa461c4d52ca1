#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "oremat/matrix.hpp"
#include "oremat/matroid.hpp"
#include "oremat/rings.hpp"
#include "oremat/valuated.hpp"

namespace oremat {

using Json = nlohmann::json;

using AnyMatrix = std::variant<Mat<SkewPolyRing>, Mat<IntegerRing>, Mat<HurwitzRing>>;

/// A parsed interchange document: the matrix plus the index base its ground
/// set labels use externally (internally everything is 0-based).
struct ParsedDocument {
  AnyMatrix matrix;
  int index_base = 1;
};

/// Validates and parses a MatrixDocument. Structural problems raise
/// SchemaError; ring/matrix invariant violations (reducible modulus, mixed
/// quaternion parity, non-prime p) raise InvariantError.
ParsedDocument parse_matrix_document(const Json& doc);
ParsedDocument parse_matrix_document_text(const std::string& text);

Json ring_descriptor_json(const SkewPolyRing& r);
Json ring_descriptor_json(const IntegerRing& r);
Json ring_descriptor_json(const HurwitzRing& r);

Json entry_json(const SkewPolyRing& r, const SkewPoly& e);
Json entry_json(const IntegerRing& r, const Int& e);
Json entry_json(const HurwitzRing& r, const Hurwitz& e);

template <class Ring>
Json serialize_matrix_document(const Mat<Ring>& m, int index_base = 1) {
  Json doc;
  doc["ring"] = ring_descriptor_json(m.ring);
  doc["rows"] = m.rows;
  doc["cols"] = m.cols;
  doc["orientation"] = m.orient == Orientation::right_columns ? "right" : "left";
  doc["index_base"] = index_base;
  Json entries = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(entry_json(m.ring, m.at(i, j)));
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

Json matroid_json(const Matroid& m, int index_base);
Json valuation_json(const ValuatedMatroid& vm, int index_base);

/// {"field": descriptor, "rows": ..., "cols": ..., "entries": [[k residues]...], "alpha": ...}
Json fq_matrix_json(const FqMat& m);

}  // namespace oremat
