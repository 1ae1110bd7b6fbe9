#include "khom/cocycle.hpp"

#include <random>
#include <sstream>

namespace khom {

CategoricalCochainEvaluator evaluator_from_table(std::string name, int degree,
                                                 Coefficients coeff,
                                                 std::map<ComposableTuple, Int> table) {
  CategoricalCochainEvaluator out;
  out.name = std::move(name);
  out.degree = degree;
  out.coeff = coeff;
  out.evaluate = [table = std::move(table), name = out.name](const ComposableTuple& t) {
    auto it = table.find(t);
    if (it == table.end())
      throw DomainError("evaluator '" + name + "': tuple outside the declared domain");
    return it->second;
  };
  return out;
}

namespace {

std::vector<long> parse_params(const std::string& spec, std::string& head) {
  auto colon = spec.find(':');
  head = spec.substr(0, colon);
  std::vector<long> params;
  if (colon == std::string::npos) return params;
  std::istringstream in(spec.substr(colon + 1));
  std::string item;
  while (std::getline(in, item, ',')) params.push_back(std::stol(item));
  return params;
}

}  // namespace

CategoricalCochainEvaluator named_evaluator(const KGraph& g, const std::string& spec,
                                            const Coefficients& coeff) {
  std::string head;
  std::vector<long> params = parse_params(spec, head);
  CategoricalCochainEvaluator out;
  out.name = spec;
  out.coeff = coeff;
  if (head == "zero") {
    if (params.size() != 1 || params[0] < 0)
      throw SchemaError("evaluator zero needs a degree parameter: zero:<n>");
    out.degree = static_cast<int>(params[0]);
    out.evaluate = [](const ComposableTuple&) { return Int(0); };
    return out;
  }
  if (head == "total-degree") {
    out.degree = 1;
    out.evaluate = [](const ComposableTuple& t) { return Int(t.entry(0).degree().total()); };
    return out;
  }
  if (head == "degree-sum") {
    if (params.size() != 1 || params[0] < 1 || params[0] > g.k())
      throw SchemaError("evaluator degree-sum needs a color: degree-sum:<i>");
    const int color = static_cast<int>(params[0]);
    out.degree = 1;
    out.evaluate = [color](const ComposableTuple& t) {
      return Int(t.entry(0).degree().at(color));
    };
    return out;
  }
  if (head == "bilinear") {
    if (params.size() != 2 || params[0] < 1 || params[0] > g.k() || params[1] < 1 ||
        params[1] > g.k())
      throw SchemaError("evaluator bilinear needs two colors: bilinear:<i>,<j>");
    const int ci = static_cast<int>(params[0]), cj = static_cast<int>(params[1]);
    out.degree = 2;
    // explicit return type: gmp expression templates must not outlive their operands
    out.evaluate = [ci, cj](const ComposableTuple& t) -> Int {
      return Int(t.entry(0).degree().at(ci)) * Int(t.entry(1).degree().at(cj));
    };
    return out;
  }
  throw SchemaError("unknown evaluator: " + spec);
}

CochainTable cat_to_cub(const KGraph& g, const CubicalBasis& basis,
                        const CategoricalCochainEvaluator& f, int n) {
  if (f.degree != n)
    throw DomainError("cat_to_cub: evaluator degree does not match the requested degree");
  CochainTable out(g, basis, n, f.coeff);
  for (const Morphism& eta : basis.cubes(n)) {
    Int acc = 0;
    if (n == 0) {
      acc = f.evaluate(ComposableTuple::at_vertex(eta.anchor()));
    } else {
      for (const SignedPermutation& sigma : symmetric_group(n)) {
        std::vector<Morphism> entries = permuted_factors(g, eta, sigma.image);
        acc += Int(sigma.sign) * f.evaluate(ComposableTuple::of(g, std::move(entries)));
      }
    }
    out.set(eta, acc);
  }
  return out;
}

Int cub_to_cat(const KGraph& g, const CochainTable& table, const ComposableTuple& t,
               ColorOrder order, const ModuleAction& action) {
  const int n = table.degree();
  if (t.length() != n)
    throw DomainError("cub_to_cat: tuple length must equal the table degree");
  if (n == 0) {
    Morphism v = g.identity(t.range_vertex(g));
    return table.coefficients().reduce(table.at(v));
  }
  Morphism lambda = t.entry(0);
  for (int i = 1; i < n; ++i) lambda = g.compose(lambda, t.entry(i));

  Int acc = 0;
  for (const ColorSet& K : color_subsets(g.k(), n)) {
    auto [b, c] = box_window(g, t.entries(), K, order);
    Degree ek = indicator_degree(g.k(), K);
    Degree lo = b + ek;
    if (!lo.le(c)) continue;
    for_each_lattice_point(lo, c, [&](const Degree& m) {
      Morphism cube = g.segment(lambda, m.minus(ek), m);
      Morphism trailing = g.segment(lambda, m, lambda.degree());
      acc += action(table.at(cube), trailing);
    });
  }
  return table.coefficients().reduce(acc);
}

CategoricalCochainEvaluator translated_evaluator(const KGraph& g, const CochainTable& table,
                                                 ColorOrder order) {
  CategoricalCochainEvaluator out;
  out.name = "cub-to-cat";
  out.degree = table.degree();
  out.coeff = table.coefficients();
  out.evaluate = [&g, table, order](const ComposableTuple& t) {
    return cub_to_cat(g, table, t, order);
  };
  return out;
}

bool round_trip(const KGraph& g, const CubicalBasis& basis, const CochainTable& table) {
  CochainTable back = cat_to_cub(g, basis, translated_evaluator(g, table), table.degree());
  return back == table;
}

bool is_cocycle(const KGraph& g, const CubicalBasis& basis, const CochainTable& table,
                std::string* witness) {
  if (table.degree() >= g.k()) return true;  // no cubes one degree up
  CochainTable d = coboundary(g, basis, table);
  for (const auto& [cube, v] : d.values()) {
    if (v != 0) {
      if (witness) *witness = g.describe(cube);
      return false;
    }
  }
  return true;
}

bool degree1_path_independence(const KGraph& g, const CubicalBasis& basis,
                               const CochainTable& table, const Morphism& lambda,
                               int trials, std::uint64_t seed) {
  if (table.degree() != 1) throw DomainError("path independence needs a degree-1 table");
  std::string witness;
  if (!is_cocycle(g, basis, table, &witness))
    throw DomainError("path independence needs a cocycle; coboundary is nonzero at " + witness);
  if (lambda.degree().is_zero()) return true;

  const Int expected = cub_to_cat(g, table, ComposableTuple::of(g, {lambda}));
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    Morphism rest = lambda;
    Int total = 0;
    while (!rest.degree().is_zero()) {
      ColorSet colors = color_type_of(rest.degree());
      std::uniform_int_distribution<std::size_t> pick(0, colors.size() - 1);
      Degree step = Degree::unit(g.k(), colors[pick(rng)]);
      Morphism edge = g.segment(rest, Degree::zero(g.k()), step);
      total += table.at(edge);
      rest = g.segment(rest, step, rest.degree());
    }
    if (table.coefficients().reduce(total) != expected) return false;
  }
  return true;
}

}  // namespace khom
