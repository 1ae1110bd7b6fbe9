#ifndef KHOM_JSON_IO_HPP
#define KHOM_JSON_IO_HPP

#include <functional>
#include <string>
#include <vector>

#include "khom/categorical.hpp"
#include "khom/chain_maps.hpp"
#include "khom/cocycle.hpp"
#include "khom/cubical.hpp"
#include "khom/kgraph.hpp"

namespace khom {

// All parsers throw SchemaError on malformed documents. The JSON shapes:
//
// graph      {"k":int, "vertices":[id...],
//             "edges":[{"id":s,"color":int,"range":s,"source":s}...],
//             "squares":[{"lhs":[id,id],"rhs":[id,id]}...]}
// morphism   {"vertex": id} | {"edges": [id, ...]}
// table      {"degree":n, "coeff":{"type":"Z"}|{"type":"Zmod","modulus":m},
//             "values":[{"cube": morphism, "value": int}...]}   (total on Q_n)
// tuples     {"tuples": [[morphism, ...], ...]}
// functor    {"domain": graph|path, "codomain": graph|path,
//             "vertexMap": {id: id}, "edgeMap": {id: id}}

GraphData parse_graph_data(const std::string& text);
KGraph load_graph(const std::string& text);  // parse + construct, unvalidated
std::string graph_to_json(const KGraph& g);

Morphism parse_morphism(const KGraph& g, const std::string& text);
std::string morphism_to_json(const KGraph& g, const Morphism& m);

CochainTable parse_cochain_table(const KGraph& g, const CubicalBasis& basis,
                                 const std::string& text);
std::string cochain_table_to_json(const KGraph& g, const CochainTable& table);

std::vector<ComposableTuple> parse_tuple_list(const KGraph& g, const std::string& text);

/// Loads a functor document; string-valued graph fields are resolved through
/// the reader callback (normally a file read relative to the document).
struct LoadedFunctor {
  KGraph domain;
  KGraph codomain;
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> edge_map;
};
LoadedFunctor parse_functor(const std::string& text,
                            const std::function<std::string(const std::string&)>& reader);

std::string validation_report_to_json(const ValidationReport& report);
std::string verify_report_to_json(const VerifyReport& report);
std::string abelian_group_to_json(const AbelianGroup& group);

}  // namespace khom

#endif
