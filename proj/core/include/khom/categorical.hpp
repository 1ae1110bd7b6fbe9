#ifndef KHOM_CATEGORICAL_HPP
#define KHOM_CATEGORICAL_HPP

#include <functional>
#include <optional>

#include "khom/cubical.hpp"
#include "khom/exact_linalg.hpp"
#include "khom/formal_sum.hpp"
#include "khom/kgraph.hpp"

namespace khom {

/// Composable tuple (lambda_0, ..., lambda_{n-1}) with s(lambda_i) =
/// r(lambda_{i+1}); a 0-tuple carries just its anchor vertex. Identities are
/// allowed as entries (the complex is not normalized).
class ComposableTuple {
 public:
  ComposableTuple() = default;
  static ComposableTuple at_vertex(int v);
  static ComposableTuple of(const KGraph& g, std::vector<Morphism> entries);

  int length() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Morphism>& entries() const { return entries_; }
  const Morphism& entry(int i) const { return entries_.at(i); }
  int range_vertex(const KGraph& g) const;
  int source_vertex(const KGraph& g) const;

  /// Returns the tuple with entry i and i+1 composed (0-based).
  ComposableTuple merged(const KGraph& g, int i) const;
  ComposableTuple dropped_first(const KGraph& g) const;
  ComposableTuple dropped_last(const KGraph& g) const;
  ComposableTuple appended(const KGraph& g, const Morphism& m) const;

  auto operator<=>(const ComposableTuple&) const = default;

 private:
  std::vector<Morphism> entries_;
  int anchor_ = -1;  // used only when entries_ is empty
};

using TupleChain = FormalSum<ComposableTuple>;

/// Bar-resolution boundary on generators with a module tail (tuples of
/// length n+1, n >= 1):
///   d^P(l_0,...,l_n) = (l_1,...,l_n) + sum_{i=1..n} (-1)^i (l_0,...,l_{i-1} l_i,...,l_n).
/// The i = n term composes into the tail. For length-1 tuples use
/// tuple_augmentation.
TupleChain tuple_boundary(const KGraph& g, const ComposableTuple& t);
TupleChain tuple_boundary(const KGraph& g, const TupleChain& chain);
Int tuple_augmentation(const TupleChain& chain);

/// Boundary of the constant-coefficient complex on plain n-tuples (no module
/// tail); the dropped ends keep track of their anchor vertices.
TupleChain constant_boundary(const KGraph& g, const ComposableTuple& t);
TupleChain constant_boundary(const KGraph& g, const TupleChain& chain);

/// Evaluator for categorical cochains; the optional action implements
/// nonconstant right modules when evaluating coboundaries.
using TupleEvaluator = std::function<Int(const ComposableTuple&)>;
using ModuleAction = std::function<Int(const Int&, const Morphism&)>;
ModuleAction trivial_action();

/// delta_n f evaluated at a tuple of length n+1.
Int tuple_coboundary(const KGraph& g, const TupleEvaluator& f, const ComposableTuple& t,
                     const ModuleAction& action = trivial_action());

/// Standard contracting homotopy of the bar resolution: appends the source
/// vertex identity with sign (-1)^(n+1); h_{-1}(1) at w is the 1-tuple (id_w).
TupleChain standard_homotopy(const KGraph& g, const ComposableTuple& t);
TupleChain standard_homotopy(const KGraph& g, const TupleChain& chain);
ComposableTuple standard_homotopy_base(const KGraph& g, int w);

struct InitialVertexData {
  std::optional<int> alpha;
  /// alpha_v for every vertex v, cached when alpha exists.
  std::map<int, Morphism> alpha_from;
  /// False when the probe bound was hit before a candidate could be ruled
  /// in or out.
  bool certified = true;
};

/// Searches for a vertex alpha with |v Lambda alpha| = 1 for every v,
/// enumerating morphisms up to the probe bound.
InitialVertexData initial_vertex(const KGraph& g, const Degree& probe_bound);

/// Contracting homotopy of the constant-coefficient complex for a graph with
/// an initial vertex; defined on plain tuples, appending alpha at the source.
TupleChain initial_homotopy(const KGraph& g, const InitialVertexData& iv,
                            const ComposableTuple& t);
TupleChain initial_homotopy(const KGraph& g, const InitialVertexData& iv,
                            const TupleChain& chain);

struct TupleEnumeration {
  std::vector<ComposableTuple> tuples;
  bool saturated = false;
};

/// All composable tuples of the given length with total degree <= bound.
TupleEnumeration tuples_up_to(const KGraph& g, int length, const Degree& bound);
/// All composable tuples of the given length over a full morphism list.
std::vector<ComposableTuple> composable_tuples(const KGraph& g,
                                               const std::vector<Morphism>& morphisms,
                                               int length);

struct CatHomologyOptions {
  Degree probe_bound;       // finiteness guard
  long size_guard = 50000;  // largest tuple basis allowed
};

/// Direct categorical homology of a finite category via the full
/// composable-tuple complex. Throws DomainError for infinite categories or
/// when the size guard is exceeded (the message reports the counts).
AbelianGroup cat_homology(const KGraph& g, int n, const Coefficients& coeff,
                          const CatHomologyOptions& options);

}  // namespace khom

#endif
