#include "khom/json_io.hpp"

#include <json.hpp>

namespace khom {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("invalid JSON");
  return j;
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + name + "'");
  return *it;
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) throw SchemaError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

long int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + name + "' must be an integer");
  return v.get<long>();
}

Int int_value(const json& v, const char* what) {
  if (v.is_number_integer()) return Int(v.get<long>());
  if (v.is_string()) return Int(v.get<std::string>());  // big values round-trip as strings
  throw SchemaError(std::string(what) + " must be an integer");
}

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Coefficients parse_coefficients(const json& j) {
  std::string type = string_field(j, "type");
  if (type == "Z") return Coefficients::integers();
  if (type == "Zmod") {
    long m = int_field(j, "modulus");
    if (m < 2) throw SchemaError("modulus must be at least 2");
    return Coefficients::mod(m);
  }
  throw SchemaError("coeff type must be 'Z' or 'Zmod'");
}

json coefficients_to_json(const Coefficients& c) {
  if (!c.modular) return json{{"type", "Z"}};
  return json{{"type", "Zmod"}, {"modulus", c.modulus}};
}

// Accepts {"vertex": id}, {"edges": [id,...]}, or a bare edge-id array (the
// cube shorthand used in cochain tables).
Morphism morphism_from_json(const KGraph& g, const json& j) {
  const json* edges = nullptr;
  if (j.is_array()) {
    edges = &j;
  } else if (j.is_object()) {
    if (j.contains("vertex")) return g.identity(string_field(j, "vertex"));
    edges = &field(j, "edges");
  } else {
    throw SchemaError("morphism literal must be an object or an edge array");
  }
  if (!edges->is_array() || edges->empty())
    throw SchemaError("morphism edge word must be a nonempty array");
  std::vector<std::string> ids;
  for (const json& e : *edges) {
    if (!e.is_string()) throw SchemaError("edge ids must be strings");
    ids.push_back(e.get<std::string>());
  }
  return g.morphism_from_edges(ids);
}

json morphism_to_json_value(const KGraph& g, const Morphism& m) {
  if (m.is_identity()) return json{{"vertex", g.vertex_ids()[m.anchor()]}};
  json edges = json::array();
  for (int e : m.word()) edges.push_back(g.edges()[e].id);
  return json{{"edges", edges}};
}

}  // namespace

GraphData parse_graph_data(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.is_object()) throw SchemaError("graph document must be a JSON object");
  GraphData data;
  data.k = static_cast<int>(int_field(j, "k"));

  const json& vertices = field(j, "vertices");
  if (!vertices.is_array()) throw SchemaError("'vertices' must be an array");
  for (const json& v : vertices) {
    if (!v.is_string()) throw SchemaError("vertex ids must be strings");
    data.vertices.push_back(v.get<std::string>());
  }

  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw SchemaError("'edges' must be an array");
  for (const json& e : edges) {
    GraphData::EdgeSpec spec;
    spec.id = string_field(e, "id");
    spec.color = static_cast<int>(int_field(e, "color"));
    spec.range = string_field(e, "range");
    spec.source = string_field(e, "source");
    data.edges.push_back(std::move(spec));
  }

  const json& squares = field(j, "squares");
  if (!squares.is_array()) throw SchemaError("'squares' must be an array");
  for (const json& s : squares) {
    const json& lhs = field(s, "lhs");
    const json& rhs = field(s, "rhs");
    if (!lhs.is_array() || lhs.size() != 2 || !rhs.is_array() || rhs.size() != 2)
      throw SchemaError("square sides must be 2-edge words");
    GraphData::SquareSpec spec;
    for (int i = 0; i < 2; ++i) {
      if (!lhs[i].is_string() || !rhs[i].is_string())
        throw SchemaError("square words must hold edge ids");
      spec.lhs[i] = lhs[i].get<std::string>();
      spec.rhs[i] = rhs[i].get<std::string>();
    }
    data.squares.push_back(std::move(spec));
  }
  return data;
}

KGraph load_graph(const std::string& text) { return KGraph(parse_graph_data(text)); }

std::string graph_to_json(const KGraph& g) {
  json j;
  j["k"] = g.k();
  j["vertices"] = g.vertex_ids();
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back(json{{"id", e.id},
                         {"color", e.color},
                         {"range", g.vertex_ids()[e.range]},
                         {"source", g.vertex_ids()[e.source]}});
  j["edges"] = edges;
  json squares = json::array();
  for (const auto& sq : g.squares())
    squares.push_back(json{{"lhs", {g.edges()[sq[0]].id, g.edges()[sq[1]].id}},
                           {"rhs", {g.edges()[sq[2]].id, g.edges()[sq[3]].id}}});
  j["squares"] = squares;
  return j.dump(2);
}

Morphism parse_morphism(const KGraph& g, const std::string& text) {
  return morphism_from_json(g, parse_or_throw(text));
}

std::string morphism_to_json(const KGraph& g, const Morphism& m) {
  return morphism_to_json_value(g, m).dump();
}

CochainTable parse_cochain_table(const KGraph& g, const CubicalBasis& basis,
                                 const std::string& text) {
  json j = parse_or_throw(text);
  const int degree = static_cast<int>(int_field(j, "degree"));
  Coefficients coeff = parse_coefficients(field(j, "coeff"));
  CochainTable table(g, basis, degree, coeff);

  const json& values = field(j, "values");
  if (!values.is_array()) throw SchemaError("'values' must be an array");
  std::set<Morphism> seen;
  for (const json& entry : values) {
    Morphism cube = morphism_from_json(g, field(entry, "cube"));
    if (!seen.insert(cube).second)
      throw SchemaError("cochain table lists cube " + g.describe(cube) + " twice");
    try {
      table.set(cube, int_value(field(entry, "value"), "table value"));
    } catch (const DomainError& e) {
      throw SchemaError(std::string("cochain table: ") + e.what());
    }
  }
  if (seen.size() != basis.cubes(degree).size())
    throw SchemaError("cochain table must be total on Q_" + std::to_string(degree) + " (" +
                      std::to_string(seen.size()) + " of " +
                      std::to_string(basis.cubes(degree).size()) + " cubes)");
  return table;
}

std::string cochain_table_to_json(const KGraph& g, const CochainTable& table) {
  json j;
  j["degree"] = table.degree();
  j["coeff"] = coefficients_to_json(table.coefficients());
  json values = json::array();
  for (const auto& [cube, v] : table.values())
    values.push_back(json{{"cube", morphism_to_json_value(g, cube)}, {"value", int_to_json(v)}});
  j["values"] = values;
  return j.dump(2);
}

std::vector<ComposableTuple> parse_tuple_list(const KGraph& g, const std::string& text) {
  json j = parse_or_throw(text);
  const json& tuples = field(j, "tuples");
  if (!tuples.is_array()) throw SchemaError("'tuples' must be an array");
  std::vector<ComposableTuple> out;
  for (const json& t : tuples) {
    if (!t.is_array()) throw SchemaError("each tuple must be an array of morphisms");
    std::vector<Morphism> entries;
    for (const json& m : t) entries.push_back(morphism_from_json(g, m));
    try {
      out.push_back(ComposableTuple::of(g, std::move(entries)));
    } catch (const DomainError& e) {
      throw SchemaError(std::string("tuple list: ") + e.what());
    }
  }
  return out;
}

LoadedFunctor parse_functor(const std::string& text,
                            const std::function<std::string(const std::string&)>& reader) {
  json j = parse_or_throw(text);
  auto load_side = [&](const char* name) {
    const json& side = field(j, name);
    if (side.is_string()) return load_graph(reader(side.get<std::string>()));
    if (side.is_object()) return load_graph(side.dump());
    throw SchemaError(std::string("'") + name + "' must be a graph object or a path");
  };
  auto load_map = [&](const char* name) {
    const json& m = field(j, name);
    if (!m.is_object()) throw SchemaError(std::string("'") + name + "' must be an object");
    std::map<std::string, std::string> out;
    for (auto it = m.begin(); it != m.end(); ++it) {
      if (!it.value().is_string()) throw SchemaError("map values must be strings");
      out[it.key()] = it.value().get<std::string>();
    }
    return out;
  };
  return LoadedFunctor{load_side("domain"), load_side("codomain"), load_map("vertexMap"),
                       load_map("edgeMap")};
}

std::string validation_report_to_json(const ValidationReport& report) {
  json j;
  j["passed"] = report.passed;
  j["confluenceBound"] = report.confluence_bound.coords();
  j["wordsChecked"] = report.words_checked;
  json issues = json::array();
  for (const auto& issue : report.issues)
    issues.push_back(json{{"check", issue.check}, {"witness", issue.witness}});
  j["issues"] = issues;
  return j.dump(2);
}

std::string verify_report_to_json(const VerifyReport& report) {
  json j;
  j["bound"] = report.bound.coords();
  j["tupleLengthBound"] = report.tuple_length_bound;
  j["allPass"] = report.all_pass();
  json checks = json::array();
  for (const auto& c : report.checks) {
    json jc{{"check", c.check}, {"generatorsTested", c.generators_tested}, {"pass", c.pass}};
    if (!c.pass) jc["firstWitness"] = c.first_witness;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  return j.dump(2);
}

std::string abelian_group_to_json(const AbelianGroup& group) {
  json torsion = json::array();
  for (const Int& t : group.torsion) torsion.push_back(int_to_json(t));
  return json{{"rank", group.free_rank}, {"torsion", torsion}}.dump();
}

}  // namespace khom
