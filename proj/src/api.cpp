#include "oremat/api.hpp"

#include "oremat/corpus.hpp"
#include "oremat/flock.hpp"
#include "oremat/groups.hpp"
#include "oremat/linalg.hpp"
#include "oremat/valuated.hpp"

namespace oremat::api {

namespace {

template <class F>
Json dispatch(const Json& doc, F&& f) {
  ParsedDocument parsed = parse_matrix_document(doc);
  return std::visit([&](auto& m) { return f(m, parsed.index_base); }, parsed.matrix);
}

}  // namespace

Json matroid_of(const Json& doc) {
  return dispatch(doc, [](const auto& m, int base) { return matroid_json(matroid_from_matrix(m), base); });
}

Json valuation_of(const Json& doc) {
  return dispatch(doc, [](const auto& m, int base) { return valuation_json(lindstrom_valuation(m), base); });
}

Json circuits_of(const Json& doc) {
  return dispatch(doc, [](const auto& m, int base) {
    Json out = Json::array();
    for (const auto& vc : valuated_circuits(m)) {
      Json c;
      Json supp = Json::array();
      for (int e : set_of(vc.support)) supp.push_back(e + base);
      c["support"] = std::move(supp);
      Json g = Json::array();
      for (const auto& v : vc.gamma) {
        if (v.is_infinite())
          g.push_back("inf");
        else
          g.push_back(v.value());
      }
      c["gamma"] = std::move(g);
      out.push_back(std::move(c));
    }
    return out;
  });
}

Json dual_of(const Json& doc) {
  return dispatch(doc, [](const auto& m, int base) { return serialize_matrix_document(dual_module(m), base); });
}

Json saturate_of(const Json& doc) {
  return dispatch(doc, [](const auto& m, int base) {
    auto sat = saturate(m);
    Json out;
    out["was_saturated"] = span_equal(m, sat, SpanLevel::ring_module);
    out["document"] = serialize_matrix_document(sat, base);
    return out;
  });
}

Json perp_of(const Json& doc) {
  return dispatch(doc, [](const auto& m, int base) { return serialize_matrix_document(perp(m), base); });
}

Json flock_slice_of(const Json& doc, const std::vector<std::int64_t>& alpha) {
  return dispatch(doc, [&](const auto& m, int) {
    auto s = flock_slice(m, alpha);
    Json out = fq_matrix_json(s.basis);
    out["alpha"] = s.alpha;
    return out;
  });
}

Json flock_check_of(const Json& doc, int radius, int threads) {
  return dispatch(doc, [&](const auto& m, int) {
    FlockEngine eng(m);
    auto box = check_flock_box(eng, radius, threads, true, true);
    Json out;
    out["radius"] = radius;
    out["points"] = box.axioms.points;
    out["axioms_ok"] = box.axioms.ok;
    if (!box.axioms.ok) out["axioms_violation"] = box.axioms.first_violation;
    out["consistency_ok"] = box.consistency.ok;
    if (!box.consistency.ok) out["consistency_violation"] = box.consistency.first_violation;
    out["ok"] = box.ok();
    return out;
  });
}

Json check_of(const Json& doc, int radius, int threads) {
  return dispatch(doc, [&](const auto& m, int) {
    Json checks = Json::array();
    bool all_ok = true;
    auto push = [&](const std::string& name, bool ok, const std::string& note = {}) {
      Json c;
      c["name"] = name;
      c["ok"] = ok;
      if (!note.empty()) c["note"] = note;
      checks.push_back(std::move(c));
      all_ok = all_ok && ok;
    };

    auto p = perp(m);
    push("rank_sum", q_rank(m) + q_rank(p) == m.ambient());
    auto sat = saturate(m);
    bool round_trip = span_equal(perp(p), sat, SpanLevel::ring_module) &&
                      ring_span_contains(sat, m) && span_equal(m, sat, SpanLevel::q_space) &&
                      span_equal(saturate(sat), sat, SpanLevel::ring_module);
    push("saturation_perp_round_trip", round_trip);

    auto vm = lindstrom_valuation(m);
    push("valuated_exchange", check_valuated_exchange(vm));
    push("three_term", three_term_check_all(vm));
    if (m.orient == Orientation::right_columns)
      push("circuit_identity", check_circuit_identity(vm, valuated_circuits(m)));

    if (m.ring.supports_flock() && m.orient == Orientation::right_columns) {
      FlockEngine eng(m);
      auto box = check_flock_box(eng, radius, threads, true, true);
      push("flock_axioms", box.axioms.ok, box.axioms.ok ? "" : box.axioms.first_violation);
      push("flock_valuation_consistency", box.consistency.ok,
           box.consistency.ok ? "" : box.consistency.first_violation);
    } else {
      push("flock_axioms", true, "skipped: ring without flock support");
      push("flock_valuation_consistency", true, "skipped: ring without flock support");
    }

    Json out;
    out["ok"] = all_ok;
    out["radius"] = radius;
    out["checks"] = std::move(checks);
    return out;
  });
}

namespace {

Json sample_verify_impl(const Mat<SkewPolyRing>& m, int count, std::uint64_t seed) {
  auto points = sample_points_ga(m, count, seed);
  auto j = perp(m);
  Json out;
  out["count"] = count;
  out["seed"] = seed;
  out["ok"] = verify_annihilator_ga(j, points);
  return out;
}

Json sample_verify_impl(const Mat<IntegerRing>& m, int count, std::uint64_t seed) {
  auto points = sample_points_gm(m, count, seed);
  auto j = perp(m);
  Json out;
  out["count"] = count;
  out["seed"] = seed;
  out["ok"] = verify_annihilator_gm(j, points);
  return out;
}

Json sample_verify_impl(const Mat<HurwitzRing>&, int, std::uint64_t) {
  throw UnsupportedRingError("sample: no point model for the quaternion ring");
}

}  // namespace

Json sample_verify_of(const Json& doc, int count, std::uint64_t seed) {
  return dispatch(doc, [&](const auto& m, int) { return sample_verify_impl(m, count, seed); });
}

Json examples_list() {
  Json out = Json::array();
  for (const auto& id : corpus_ids()) out.push_back(id);
  return out;
}

Json example_run(const std::string& id) { return run_example(id); }

}  // namespace oremat::api
