// Command line front end: every subcommand parses a document, calls one
// library operation, and renders the returned report.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "oremat/api.hpp"
#include "oremat/corpus.hpp"

namespace {

using oremat::Json;

Json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw oremat::SchemaError("cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Json doc = Json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded()) throw oremat::SchemaError("input is not valid JSON: " + path);
  return doc;
}

std::vector<std::int64_t> parse_alpha(const std::string& text) {
  std::vector<std::int64_t> alpha;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) alpha.push_back(std::stoll(part));
  return alpha;
}

void print_matrix_document(const Json& doc) {
  oremat::ParsedDocument parsed = oremat::parse_matrix_document(doc);
  std::visit(
      [&](const auto& m) {
        std::cout << m.ring.name() << ", " << m.rows << "x" << m.cols << ", "
                  << (m.orient == oremat::Orientation::right_columns ? "right column module" : "left row module")
                  << "\n";
        for (int i = 0; i < m.rows; ++i) {
          std::cout << "  [";
          for (int j = 0; j < m.cols; ++j) std::cout << (j ? ", " : " ") << m.ring.str(m.at(i, j));
          std::cout << " ]\n";
        }
      },
      parsed.matrix);
}

void print_matroid(const Json& m) {
  std::cout << "matroid: n=" << m["n"] << " r=" << m["r"] << ", " << m["bases"].size() << " bases\n";
  std::cout << "bases:";
  for (const auto& b : m["bases"]) std::cout << " " << b.dump();
  std::cout << "\n";
}

void print_valuation(const Json& v) {
  print_matroid(v["matroid"]);
  std::cout << "basis : mu : normalized\n";
  for (auto it = v["mu"].begin(); it != v["mu"].end(); ++it)
    std::cout << "  {" << it.key() << "} : " << it.value() << " : " << v["mu_normalized"][it.key()] << "\n";
}

void print_checks(const Json& rep) {
  for (const auto& c : rep["checks"]) {
    std::cout << (c["ok"].get<bool>() ? "ok   " : "FAIL ") << c["name"].get<std::string>();
    if (c.contains("note")) std::cout << "  (" << c["note"].get<std::string>() << ")";
    std::cout << "\n";
  }
  std::cout << (rep["ok"].get<bool>() ? "all checks passed" : "some checks FAILED") << "\n";
}

void print_example_report(const Json& rep) {
  std::cout << "example " << rep["id"].get<std::string>() << "\n";
  for (const auto& f : rep["facts"]) {
    std::cout << (f["ok"].get<bool>() ? "ok   " : "FAIL ") << f["name"].get<std::string>();
    if (f.contains("provenance")) std::cout << " [" << f["provenance"].get<std::string>() << "]";
    std::cout << "\n";
  }
  std::cout << (rep["ok"].get<bool>() ? "all facts reproduced" : "some facts FAILED") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matroids, Lindstrom valuations, duals and linear flocks of modules over"
               " the endomorphism rings of one-dimensional algebraic groups"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "machine readable output");

  std::string path, alpha_text = "0", example_id;
  int radius = 2, threads = 1, count = 100;
  std::uint64_t seed = 42;

  auto* cmd_matroid = app.add_subcommand("matroid", "matroid of a module document");
  cmd_matroid->add_option("file", path, "MatrixDocument JSON")->required();

  auto* cmd_val = app.add_subcommand("valuation", "Lindstrom valuation data");
  auto* val_lind = cmd_val->add_subcommand("lindstrom", "valuation table over the bases");
  val_lind->add_option("file", path)->required();
  auto* val_circ = cmd_val->add_subcommand("circuits", "valuated circuits");
  val_circ->add_option("file", path)->required();
  cmd_val->require_subcommand(1);

  auto* cmd_dual = app.add_subcommand("dual", "dual module representation");
  cmd_dual->add_option("file", path)->required();

  auto* cmd_sat = app.add_subcommand("saturate", "saturation of the module");
  cmd_sat->add_option("file", path)->required();

  auto* cmd_perp = app.add_subcommand("perp", "orthogonal complement");
  cmd_perp->add_option("file", path)->required();

  auto* cmd_flock = app.add_subcommand("flock", "linear flock slices and axioms");
  auto* flock_slice_cmd = cmd_flock->add_subcommand("slice", "slice at a shift vector");
  flock_slice_cmd->add_option("file", path)->required();
  flock_slice_cmd->add_option("--alpha", alpha_text, "comma separated shift, e.g. 0,0,0,1");
  auto* flock_check_cmd = cmd_flock->add_subcommand("check", "axioms and argmin consistency on a box");
  flock_check_cmd->add_option("file", path)->required();
  flock_check_cmd->add_option("--radius", radius, "box radius");
  flock_check_cmd->add_option("--threads", threads, "worker threads for the sweep");
  cmd_flock->require_subcommand(1);

  auto* cmd_sample = app.add_subcommand("sample", "point sampling on the group");
  auto* sample_verify_cmd = cmd_sample->add_subcommand("verify", "annihilator check on sampled points");
  sample_verify_cmd->add_option("--module", path, "MatrixDocument JSON")->required();
  sample_verify_cmd->add_option("--count", count, "number of points");
  sample_verify_cmd->add_option("--seed", seed, "PRNG seed");
  cmd_sample->require_subcommand(1);

  auto* cmd_examples = app.add_subcommand("examples", "the shipped example registry");
  auto* ex_list = cmd_examples->add_subcommand("list", "list example ids");
  auto* ex_run = cmd_examples->add_subcommand("run", "recompute the expected facts of one example");
  ex_run->add_option("id", example_id)->required();
  cmd_examples->require_subcommand(1);

  auto* cmd_check = app.add_subcommand("check", "full invariant suite on a module");
  cmd_check->add_option("file", path)->required();
  cmd_check->add_option("--radius", radius, "flock box radius");
  cmd_check->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    namespace api = oremat::api;
    if (*cmd_matroid) {
      Json out = api::matroid_of(load_document(path));
      if (json_out)
        std::cout << out.dump(2) << "\n";
      else
        print_matroid(out);
    } else if (*val_lind) {
      Json out = api::valuation_of(load_document(path));
      if (json_out)
        std::cout << out.dump(2) << "\n";
      else
        print_valuation(out);
    } else if (*val_circ) {
      Json out = api::circuits_of(load_document(path));
      if (json_out) {
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& c : out)
          std::cout << "circuit " << c["support"].dump() << " gamma " << c["gamma"].dump() << "\n";
      }
    } else if (*cmd_dual) {
      Json out = api::dual_of(load_document(path));
      if (json_out)
        std::cout << out.dump(2) << "\n";
      else
        print_matrix_document(out);
    } else if (*cmd_sat) {
      Json out = api::saturate_of(load_document(path));
      if (json_out) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << (out["was_saturated"].get<bool>() ? "input was saturated\n" : "input was not saturated\n");
        print_matrix_document(out["document"]);
      }
    } else if (*cmd_perp) {
      Json out = api::perp_of(load_document(path));
      if (json_out)
        std::cout << out.dump(2) << "\n";
      else
        print_matrix_document(out);
    } else if (*flock_slice_cmd) {
      Json out = api::flock_slice_of(load_document(path), parse_alpha(alpha_text));
      std::cout << out.dump(2) << "\n";
    } else if (*flock_check_cmd) {
      Json out = api::flock_check_of(load_document(path), radius, threads);
      if (json_out)
        std::cout << out.dump(2) << "\n";
      else
        std::cout << (out["ok"].get<bool>() ? "flock axioms and consistency hold" : out.dump(2)) << " ("
                  << out["points"] << " box points)\n";
      return out["ok"].get<bool>() ? 0 : 1;
    } else if (*sample_verify_cmd) {
      Json out = api::sample_verify_of(load_document(path), count, seed);
      std::cout << out.dump(2) << "\n";
      return out["ok"].get<bool>() ? 0 : 1;
    } else if (*ex_list) {
      Json out = api::examples_list();
      if (json_out) {
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& id : out) std::cout << id.get<std::string>() << "\n";
      }
    } else if (*ex_run) {
      Json out = api::example_run(example_id);
      if (json_out)
        std::cout << out.dump(2) << "\n";
      else
        print_example_report(out);
      return out["ok"].get<bool>() ? 0 : 1;
    } else if (*cmd_check) {
      Json out = api::check_of(load_document(path), radius, threads);
      if (json_out)
        std::cout << out.dump(2) << "\n";
      else
        print_checks(out);
      return out["ok"].get<bool>() ? 0 : 1;
    }
  } catch (const oremat::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const oremat::InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const oremat::UnsupportedRingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
