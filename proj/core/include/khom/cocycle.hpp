#ifndef KHOM_COCYCLE_HPP
#define KHOM_COCYCLE_HPP

#include <optional>
#include <string>

#include "khom/categorical.hpp"
#include "khom/chain_maps.hpp"
#include "khom/cubical.hpp"

namespace khom {

/// Categorical cochain as a total evaluation rule: either a closed form from
/// the named catalog or a finite table valid on a declared tuple set (table
/// mode errors on tuples outside its domain).
struct CategoricalCochainEvaluator {
  std::string name;
  int degree = 0;
  Coefficients coeff;
  TupleEvaluator evaluate;
};

CategoricalCochainEvaluator evaluator_from_table(std::string name, int degree,
                                                 Coefficients coeff,
                                                 std::map<ComposableTuple, Int> table);

/// Catalog of closed-form evaluators, selected by "name" or "name:params":
///   zero:<n>            the zero n-cochain
///   total-degree        1-cochain |d(lambda)|
///   degree-sum:<i>      1-cochain d_i(lambda)
///   bilinear:<i>,<j>    2-cochain d_i(lambda_0) * d_j(lambda_1)
CategoricalCochainEvaluator named_evaluator(const KGraph& g, const std::string& spec,
                                            const Coefficients& coeff);

/// Pullback of a categorical n-cochain along the triangulation: the total
/// cubical table eta -> sum_sigma sgn(sigma) f(eta_1^sigma, ..., eta_n^sigma).
CochainTable cat_to_cub(const KGraph& g, const CubicalBasis& basis,
                        const CategoricalCochainEvaluator& f, int n);

/// Pullback of a total cubical n-table along the cubulation, evaluated at a
/// composable n-tuple: the staircase sum
///   sum_K sum_m g(lambda(m - e_K, m)) acted on by lambda(m, d(lambda)).
/// The action hook implements nonconstant modules; the default ignores the
/// trailing factor.
Int cub_to_cat(const KGraph& g, const CochainTable& table, const ComposableTuple& t,
               ColorOrder order = ColorOrder::Forward,
               const ModuleAction& action = trivial_action());

/// Wraps a table as a categorical evaluator via cub_to_cat.
CategoricalCochainEvaluator translated_evaluator(const KGraph& g, const CochainTable& table,
                                                 ColorOrder order = ColorOrder::Forward);

/// Translating a total table to a categorical cochain and back is the
/// identity on tables; this checks it exactly.
bool round_trip(const KGraph& g, const CubicalBasis& basis, const CochainTable& table);

/// delta(table) = 0, with the first offending cube reported.
bool is_cocycle(const KGraph& g, const CubicalBasis& basis, const CochainTable& table,
                std::string* witness = nullptr);

/// For a 1-cocycle table: random edge factorizations of lambda all sum to the
/// translated value. Throws DomainError when the table is not a cocycle.
bool degree1_path_independence(const KGraph& g, const CubicalBasis& basis,
                               const CochainTable& table, const Morphism& lambda,
                               int trials, std::uint64_t seed);

}  // namespace khom

#endif
