#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oremat/document.hpp"

namespace oremat::api {

/// Document-level operations shared by the CLI and the Python module; each
/// takes a MatrixDocument and returns a JSON report. All computation lives
/// in the library modules behind these calls.

Json matroid_of(const Json& doc);
Json valuation_of(const Json& doc);
Json circuits_of(const Json& doc);
Json dual_of(const Json& doc);
Json saturate_of(const Json& doc);
Json perp_of(const Json& doc);
Json flock_slice_of(const Json& doc, const std::vector<std::int64_t>& alpha);
Json flock_check_of(const Json& doc, int radius, int threads = 1);
/// The full invariant suite: saturation/perp round trip, valuated exchange,
/// three-term and circuit identities, flock axioms and slice/argmin
/// consistency within the radius. {"ok": bool, "checks": [...]}.
Json check_of(const Json& doc, int radius, int threads = 1);
Json sample_verify_of(const Json& doc, int count, std::uint64_t seed);
Json examples_list();
Json example_run(const std::string& id);

}  // namespace oremat::api
