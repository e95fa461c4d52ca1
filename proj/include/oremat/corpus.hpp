#pragma once

#include <string>
#include <vector>

#include "oremat/document.hpp"
#include "oremat/flock.hpp"

namespace oremat {

/// Directory holding the example documents; the OREMAT_DATA_DIR environment
/// variable overrides the compiled-in default.
std::string corpus_data_dir();

/// The fixed registry of shipped examples.
const std::vector<std::string>& corpus_ids();

/// Loads one example file ({"id", "document", "expected"}).
Json corpus_example(const std::string& id);

/// Recomputes every expected fact of the example and reports pass/fail per
/// fact: {"id", "ok", "facts": [{"name", "ok", ...}, ...]}.
Json run_example(const std::string& id);

/// Seeded random module over F_4[F]: entries of degree <= 2, then saturated.
Mat<SkewPolyRing> random_skew_module(int rows, int cols, std::uint64_t seed);

/// Rank matroid of a quaternion matrix whose entries lie in Z[i], computed
/// in the commutative model x + y i with exact rational coordinates.
/// Independent of the quaternion elimination path.
Matroid gaussian_rational_matroid(const Mat<HurwitzRing>& m);

}  // namespace oremat
