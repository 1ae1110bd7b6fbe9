// Command-line front end: validation, homology, chain-map verification and
// cocycle translation for finite higher-rank graphs, JSON in and out.
//
// Exit codes: 0 success; 1 validation failure; 2 identity or computation
// check failure (including refusals); 3 I/O or schema error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "khom/categorical.hpp"
#include "khom/chain_maps.hpp"
#include "khom/cocycle.hpp"
#include "khom/cubical.hpp"
#include "khom/json_io.hpp"
#include "khom/kgraph.hpp"

namespace {

using json = nlohmann::json;
using namespace khom;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitIo = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw SchemaError("cannot write file: " + out_path);
  out << text << "\n";
}

Degree parse_bound(const std::string& text, int k) {
  std::vector<int> coords;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) coords.push_back(std::stoi(item));
  if (static_cast<int>(coords.size()) == 1 && k > 1) coords.assign(k, coords[0]);
  if (static_cast<int>(coords.size()) != k)
    throw SchemaError("bound '" + text + "' does not match k = " + std::to_string(k));
  return Degree(coords);
}

Coefficients parse_coeff(const std::string& text) {
  if (text == "Z") return Coefficients::integers();
  if (text.rfind("Z/", 0) == 0) return Coefficients::mod(std::stol(text.substr(2)));
  throw SchemaError("coefficients must be 'Z' or 'Z/m'");
}

std::string coeff_name(const Coefficients& c) {
  return c.modular ? "Z/" + std::to_string(c.modulus) : "Z";
}

json group_json(const AbelianGroup& g) { return json::parse(abelian_group_to_json(g)); }

json validation_json(const ValidationReport& rep) {
  return json::parse(validation_report_to_json(rep));
}

// Loads and validates; on validation failure prints the report and exits 1.
KGraph load_validated(const std::string& path, const std::string& out_path,
                      std::uint64_t seed, const std::string& bound_text = "") {
  KGraph g = load_graph(read_file(path));
  Degree bound = bound_text.empty() ? Degree(std::vector<int>(g.k(), 2))
                                    : parse_bound(bound_text, g.k());
  ValidationReport rep = g.validate(bound, seed);
  if (!rep.passed) {
    json j{{"command", "validate"}, {"graph", path}};
    j.update(validation_json(rep));
    emit(j.dump(2), out_path);
    std::exit(kExitValidation);
  }
  return g;
}

json morphism_json(const KGraph& g, const Morphism& m) {
  return json::parse(morphism_to_json(g, m));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact (co-)homology toolkit for finite higher-rank graphs"};
  app.require_subcommand(1);

  std::string graph_path, out_path, bound_text, coeff_text = "Z";
  std::uint64_t seed = 0;
  std::optional<int> degree_opt;
  bool reduced = false;
  std::string probe_bound_text, naturality_path;
  long modulus = 2;
  std::string direction, cocycle_path, tuples_path, evaluator_spec;
  std::string color_order_text = "forward";
  int max_tuple_length = -1;
  long size_guard = 50000;
  std::string make_name, make_m_text = "1";
  int make_k = 2;

  auto add_common = [&](CLI::App* cmd, bool with_graph = true) {
    if (with_graph) cmd->add_option("graph", graph_path, "graph JSON file")->required();
    cmd->add_option("--out", out_path, "write the JSON report here instead of stdout");
    cmd->add_option("--seed", seed, "seed for randomized probes (default 0)");
  };

  CLI::App* cmd_validate = app.add_subcommand("validate", "check the factorization presentation");
  add_common(cmd_validate);
  cmd_validate->add_option("--bound", bound_text, "confluence probe degree bound, e.g. 2,2");

  CLI::App* cmd_info = app.add_subcommand("info", "counts of vertices, edges and cubes");
  add_common(cmd_info);

  CLI::App* cmd_homology = app.add_subcommand("homology", "cubical homology groups");
  add_common(cmd_homology);
  cmd_homology->add_option("--n", degree_opt, "single degree (default: all 0..k)");
  cmd_homology->add_option("--coeff", coeff_text, "Z or Z/m");
  cmd_homology->add_flag("--reduced", reduced, "use the augmented complex");

  CLI::App* cmd_cohomology = app.add_subcommand("cohomology", "cubical cohomology groups");
  add_common(cmd_cohomology);
  cmd_cohomology->add_option("--n", degree_opt, "single degree (default: all 0..k)");
  cmd_cohomology->add_option("--coeff", coeff_text, "Z or Z/m");

  CLI::App* cmd_cat = app.add_subcommand("cat-homology", "categorical homology (finite categories)");
  add_common(cmd_cat);
  cmd_cat->add_option("--probe-bound", probe_bound_text, "finiteness probe bound, e.g. 3,3")
      ->required();
  cmd_cat->add_option("--n", degree_opt, "single degree (default: all 0..k+1)");
  cmd_cat->add_option("--coeff", coeff_text, "Z or Z/m");
  cmd_cat->add_option("--size-guard", size_guard, "largest tuple basis allowed");

  CLI::App* cmd_verify = app.add_subcommand("verify", "chain-map identity suite");
  add_common(cmd_verify);
  cmd_verify->add_option("--bound", bound_text, "degree bound for generators, e.g. 2,2");
  cmd_verify->add_option("--max-tuple-length", max_tuple_length, "default k+1");
  cmd_verify->add_option("--naturality", naturality_path, "functor JSON file to check naturality");

  CLI::App* cmd_translate = app.add_subcommand("translate", "cocycle translation");
  add_common(cmd_translate);
  cmd_translate->add_option("--direction", direction, "cub2cat or cat2cub")->required();
  cmd_translate->add_option("--cocycle", cocycle_path, "cochain table JSON (cub2cat)");
  cmd_translate->add_option("--tuples", tuples_path, "tuple list JSON (cub2cat)");
  cmd_translate->add_option("--evaluator", evaluator_spec, "catalog evaluator (cat2cub)");
  cmd_translate->add_option("--coeff", coeff_text, "Z or Z/m (cat2cub)");
  cmd_translate->add_option("--color-order", color_order_text, "forward or reversed");

  CLI::App* cmd_uct = app.add_subcommand("uct", "universal-coefficient cross-check");
  add_common(cmd_uct);
  cmd_uct->add_option("--m", modulus, "modulus")->required();
  cmd_uct->add_option("--n", degree_opt, "single degree (default: all 0..k)");

  CLI::App* cmd_make = app.add_subcommand("make", "emit a builder graph as JSON");
  cmd_make->add_option("name", make_name, "omega | torus2 | fig8 | single-loop")->required();
  cmd_make->add_option("--k", make_k, "rank for omega");
  cmd_make->add_option("--m", make_m_text, "degree cap for omega, e.g. 1,1");
  cmd_make->add_option("--out", out_path, "write the graph here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_make->parsed()) {
      KGraph g = [&] {
        if (make_name == "omega") return omega(make_k, parse_bound(make_m_text, make_k));
        if (make_name == "torus2") return torus2();
        if (make_name == "fig8") return fig8();
        if (make_name == "single-loop") return single_loop();
        throw SchemaError("unknown builder: " + make_name);
      }();
      emit(graph_to_json(g), out_path);
      return kExitOk;
    }

    if (cmd_validate->parsed()) {
      KGraph g = load_graph(read_file(graph_path));
      Degree bound = bound_text.empty() ? Degree(std::vector<int>(g.k(), 2))
                                        : parse_bound(bound_text, g.k());
      ValidationReport rep = g.validate(bound, seed);
      json j{{"command", "validate"}, {"graph", graph_path}};
      j.update(validation_json(rep));
      emit(j.dump(2), out_path);
      return rep.passed ? kExitOk : kExitValidation;
    }

    if (cmd_info->parsed()) {
      KGraph g = load_validated(graph_path, out_path, seed);
      CubicalBasis basis(g);
      json cubes = json::object();
      for (int n = 0; n <= g.k(); ++n) cubes[std::to_string(n)] = basis.count(n);
      std::vector<int> by_color(g.k(), 0);
      for (const Edge& e : g.edges()) ++by_color[e.color - 1];
      json j{{"command", "info"},   {"graph", graph_path},
             {"k", g.k()},          {"vertices", g.vertex_count()},
             {"edges", g.edge_count()}, {"edgesByColor", by_color},
             {"squares", g.squares().size()}, {"cubes", cubes}};
      emit(j.dump(2), out_path);
      return kExitOk;
    }

    if (cmd_homology->parsed() || cmd_cohomology->parsed()) {
      const bool is_homology = cmd_homology->parsed();
      KGraph g = load_validated(graph_path, out_path, seed);
      Coefficients coeff = parse_coeff(coeff_text);
      auto compute = [&](int n) {
        return is_homology ? cubical_homology(g, n, coeff, reduced)
                           : cubical_cohomology(g, n, coeff);
      };
      json j{{"command", is_homology ? "homology" : "cohomology"},
             {"graph", graph_path},
             {"coeff", coeff_name(coeff)}};
      if (is_homology) j["reduced"] = reduced;
      if (degree_opt) {
        j["n"] = *degree_opt;
        j["group"] = group_json(compute(*degree_opt));
      } else {
        json groups = json::array();
        for (int n = 0; n <= g.k(); ++n)
          groups.push_back(json{{"n", n}, {"group", group_json(compute(n))}});
        j["groups"] = groups;
      }
      emit(j.dump(2), out_path);
      return kExitOk;
    }

    if (cmd_cat->parsed()) {
      KGraph g = load_validated(graph_path, out_path, seed);
      Coefficients coeff = parse_coeff(coeff_text);
      CatHomologyOptions options{parse_bound(probe_bound_text, g.k()), size_guard};
      json j{{"command", "cat-homology"},
             {"graph", graph_path},
             {"coeff", coeff_name(coeff)},
             {"probeBound", options.probe_bound.coords()}};
      if (degree_opt) {
        j["n"] = *degree_opt;
        j["group"] = group_json(cat_homology(g, *degree_opt, coeff, options));
      } else {
        json groups = json::array();
        for (int n = 0; n <= g.k() + 1; ++n)
          groups.push_back(json{{"n", n}, {"group", group_json(cat_homology(g, n, coeff, options))}});
        j["groups"] = groups;
      }
      emit(j.dump(2), out_path);
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      KGraph g = load_validated(graph_path, out_path, seed, bound_text);
      Degree bound = bound_text.empty() ? Degree(std::vector<int>(g.k(), 2))
                                        : parse_bound(bound_text, g.k());
      VerifyReport rep = verify_chain_map_identities(g, bound, max_tuple_length);
      json j{{"command", "verify"}, {"graph", graph_path}};
      j.update(json::parse(verify_report_to_json(rep)));
      bool pass = rep.all_pass();
      if (!naturality_path.empty()) {
        auto base = std::filesystem::path(naturality_path).parent_path();
        LoadedFunctor f = parse_functor(read_file(naturality_path), [&](const std::string& rel) {
          return read_file((base / rel).string());
        });
        if (!f.domain.validate().passed || !f.codomain.validate().passed)
          throw SchemaError("naturality functor graphs failed validation");
        KGraphMorphism phi(f.domain, f.codomain, f.vertex_map, f.edge_map);
        Degree nat_bound = bound.k() == f.domain.k()
                               ? bound
                               : Degree(std::vector<int>(f.domain.k(), 2));
        VerifyReport nat = verify_naturality(phi, nat_bound, max_tuple_length);
        j["naturality"] = json::parse(verify_report_to_json(nat));
        pass = pass && nat.all_pass();
      }
      j["allPass"] = pass;
      emit(j.dump(2), out_path);
      return pass ? kExitOk : kExitCheckFailed;
    }

    if (cmd_translate->parsed()) {
      KGraph g = load_validated(graph_path, out_path, seed);
      CubicalBasis basis(g);
      ColorOrder order = color_order_text == "reversed" ? ColorOrder::Reversed
                                                        : ColorOrder::Forward;
      if (direction == "cub2cat") {
        if (cocycle_path.empty() || tuples_path.empty())
          throw SchemaError("cub2cat needs --cocycle and --tuples");
        CochainTable table = parse_cochain_table(g, basis, read_file(cocycle_path));
        std::vector<ComposableTuple> tuples = parse_tuple_list(g, read_file(tuples_path));
        std::string witness;
        bool cocycle = is_cocycle(g, basis, table, &witness);
        json values = json::array();
        for (const ComposableTuple& t : tuples) {
          if (t.length() != table.degree())
            throw SchemaError("tuple length does not match the table degree");
          json entries = json::array();
          for (const Morphism& m : t.entries()) entries.push_back(morphism_json(g, m));
          Int v = cub_to_cat(g, table, t, order);
          values.push_back(json{{"tuple", entries},
                                {"value", v.fits_slong_p() ? json(v.get_si()) : json(v.get_str())}});
        }
        json j{{"command", "translate"}, {"graph", graph_path},
               {"direction", "cub2cat"}, {"degree", table.degree()},
               {"coeff", coeff_name(table.coefficients())},
               {"colorOrder", color_order_text}, {"isCocycle", cocycle},
               {"values", values}};
        if (!cocycle) j["cocycleWitness"] = witness;
        emit(j.dump(2), out_path);
        return kExitOk;
      }
      if (direction == "cat2cub") {
        if (evaluator_spec.empty()) throw SchemaError("cat2cub needs --evaluator");
        Coefficients coeff = parse_coeff(coeff_text);
        CategoricalCochainEvaluator f = named_evaluator(g, evaluator_spec, coeff);
        CochainTable table = cat_to_cub(g, basis, f, f.degree);
        json j{{"command", "translate"}, {"graph", graph_path},
               {"direction", "cat2cub"}, {"evaluator", evaluator_spec},
               {"degree", f.degree},
               {"table", json::parse(cochain_table_to_json(g, table))}};
        emit(j.dump(2), out_path);
        return kExitOk;
      }
      throw SchemaError("direction must be cub2cat or cat2cub");
    }

    if (cmd_uct->parsed()) {
      KGraph g = load_validated(graph_path, out_path, seed);
      json results = json::array();
      bool all = true;
      auto run = [&](int n) {
        bool ok = uct_check(g, n, modulus);
        all = all && ok;
        results.push_back(json{{"n", n}, {"pass", ok}});
      };
      if (degree_opt)
        run(*degree_opt);
      else
        for (int n = 0; n <= g.k(); ++n) run(n);
      json j{{"command", "uct"}, {"graph", graph_path}, {"m", modulus},
             {"results", results}, {"allPass", all}};
      emit(j.dump(2), out_path);
      return all ? kExitOk : kExitCheckFailed;
    }
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
