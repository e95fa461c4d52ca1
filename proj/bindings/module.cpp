#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oremat/api.hpp"
#include "oremat/corpus.hpp"

namespace py = pybind11;
namespace api = oremat::api;

namespace {

oremat::Json parse_doc(const std::string& text) {
  oremat::Json doc = oremat::Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw oremat::SchemaError("document is not valid JSON");
  return doc;
}

std::string dump(const oremat::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact matroids, Lindstrom valuations, duals and linear flocks of modules over"
            " the endomorphism rings of one-dimensional algebraic groups";

  py::register_exception<oremat::SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<oremat::InvariantError>(m, "InvariantError", PyExc_ValueError);
  py::register_exception<oremat::UnsupportedRingError>(m, "UnsupportedRingError", PyExc_ValueError);

  m.def("matroid", [](const std::string& doc) { return dump(api::matroid_of(parse_doc(doc))); },
        py::arg("document"), "Matroid of a MatrixDocument JSON string.");
  m.def("valuation", [](const std::string& doc) { return dump(api::valuation_of(parse_doc(doc))); },
        py::arg("document"), "Lindstrom valuation table.");
  m.def("circuits", [](const std::string& doc) { return dump(api::circuits_of(parse_doc(doc))); },
        py::arg("document"), "Valuated circuits.");
  m.def("dual", [](const std::string& doc) { return dump(api::dual_of(parse_doc(doc))); },
        py::arg("document"), "Dual module representation as a MatrixDocument.");
  m.def("saturate", [](const std::string& doc) { return dump(api::saturate_of(parse_doc(doc))); },
        py::arg("document"), "Saturation plus whether the input was saturated.");
  m.def("perp", [](const std::string& doc) { return dump(api::perp_of(parse_doc(doc))); },
        py::arg("document"), "Orthogonal complement module.");
  m.def(
      "flock_slice",
      [](const std::string& doc, const std::vector<std::int64_t>& alpha) {
        return dump(api::flock_slice_of(parse_doc(doc), alpha));
      },
      py::arg("document"), py::arg("alpha"), "Flock slice at a shift vector.");
  m.def(
      "flock_check",
      [](const std::string& doc, int radius, int threads) {
        return dump(api::flock_check_of(parse_doc(doc), radius, threads));
      },
      py::arg("document"), py::arg("radius") = 2, py::arg("threads") = 1,
      "Flock axioms and slice/argmin consistency over a box.");
  m.def(
      "check",
      [](const std::string& doc, int radius, int threads) {
        return dump(api::check_of(parse_doc(doc), radius, threads));
      },
      py::arg("document"), py::arg("radius") = 2, py::arg("threads") = 1,
      "Full invariant suite on one module document.");
  m.def(
      "sample_verify",
      [](const std::string& doc, int count, std::uint64_t seed) {
        return dump(api::sample_verify_of(parse_doc(doc), count, seed));
      },
      py::arg("document"), py::arg("count") = 100, py::arg("seed") = 42,
      "Annihilator check on seeded sample points.");
  m.def("examples", [] {
    std::vector<std::string> ids = oremat::corpus_ids();
    return ids;
  });
  m.def("run_example", [](const std::string& id) { return dump(api::example_run(id)); }, py::arg("id"));
  m.attr("__version__") = "0.1.0";
}
