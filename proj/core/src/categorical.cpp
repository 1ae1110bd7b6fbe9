#include "khom/categorical.hpp"

#include <algorithm>

namespace khom {

// --- ComposableTuple ------------------------------------------------------------

ComposableTuple ComposableTuple::at_vertex(int v) {
  ComposableTuple t;
  t.anchor_ = v;
  return t;
}

ComposableTuple ComposableTuple::of(const KGraph& g, std::vector<Morphism> entries) {
  if (entries.empty()) throw DomainError("empty tuple needs an anchor; use at_vertex");
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    if (g.source(entries[i]) != entries[i + 1].anchor())
      throw DomainError("tuple is not composable at position " + std::to_string(i));
  ComposableTuple t;
  t.entries_ = std::move(entries);
  return t;
}

int ComposableTuple::range_vertex(const KGraph& g) const {
  (void)g;
  return entries_.empty() ? anchor_ : entries_.front().anchor();
}

int ComposableTuple::source_vertex(const KGraph& g) const {
  return entries_.empty() ? anchor_ : g.source(entries_.back());
}

ComposableTuple ComposableTuple::merged(const KGraph& g, int i) const {
  if (i < 0 || i + 1 >= length()) throw DomainError("merge index out of range");
  std::vector<Morphism> out;
  out.reserve(entries_.size() - 1);
  for (int j = 0; j < length(); ++j) {
    if (j == i) {
      out.push_back(g.compose(entries_[i], entries_[i + 1]));
      ++j;
    } else {
      out.push_back(entries_[j]);
    }
  }
  return of(g, std::move(out));
}

ComposableTuple ComposableTuple::dropped_first(const KGraph& g) const {
  if (entries_.empty()) throw DomainError("cannot drop from a 0-tuple");
  if (length() == 1) return at_vertex(g.source(entries_.front()));
  return of(g, std::vector<Morphism>(entries_.begin() + 1, entries_.end()));
}

ComposableTuple ComposableTuple::dropped_last(const KGraph& g) const {
  if (entries_.empty()) throw DomainError("cannot drop from a 0-tuple");
  if (length() == 1) return at_vertex(entries_.front().anchor());
  return of(g, std::vector<Morphism>(entries_.begin(), entries_.end() - 1));
}

ComposableTuple ComposableTuple::appended(const KGraph& g, const Morphism& m) const {
  if (source_vertex(g) != m.anchor())
    throw DomainError("appended entry is not composable");
  std::vector<Morphism> out = entries_;
  out.push_back(m);
  return of(g, std::move(out));
}

// --- boundaries -------------------------------------------------------------------

TupleChain tuple_boundary(const KGraph& g, const ComposableTuple& t) {
  const int len = t.length();
  if (len < 2)
    throw DomainError("tuple_boundary needs length >= 2; length-1 generators augment to 1");
  TupleChain out;
  out.add(t.dropped_first(g), 1);
  Int sign = 1;
  for (int i = 1; i < len; ++i) {
    sign = -sign;
    out.add(t.merged(g, i - 1), sign);
  }
  return out;
}

TupleChain tuple_boundary(const KGraph& g, const TupleChain& chain) {
  TupleChain out;
  for (const auto& [t, c] : chain.terms()) {
    TupleChain piece = tuple_boundary(g, t);
    piece *= c;
    out += piece;
  }
  return out;
}

Int tuple_augmentation(const TupleChain& chain) {
  Int total = 0;
  for (const auto& [t, c] : chain.terms()) total += c;
  return total;
}

TupleChain constant_boundary(const KGraph& g, const ComposableTuple& t) {
  const int len = t.length();
  if (len < 1) throw DomainError("constant_boundary needs length >= 1");
  TupleChain out;
  out.add(t.dropped_first(g), 1);
  Int sign = 1;
  for (int i = 1; i < len; ++i) {
    sign = -sign;
    out.add(t.merged(g, i - 1), sign);
  }
  out.add(t.dropped_last(g), (len % 2 == 0) ? 1 : -1);
  return out;
}

TupleChain constant_boundary(const KGraph& g, const TupleChain& chain) {
  TupleChain out;
  for (const auto& [t, c] : chain.terms()) {
    TupleChain piece = constant_boundary(g, t);
    piece *= c;
    out += piece;
  }
  return out;
}

// --- cochains -----------------------------------------------------------------------

ModuleAction trivial_action() {
  return [](const Int& v, const Morphism&) { return v; };
}

Int tuple_coboundary(const KGraph& g, const TupleEvaluator& f, const ComposableTuple& t,
                     const ModuleAction& action) {
  const int len = t.length();
  if (len < 1) throw DomainError("tuple_coboundary needs a tuple of length >= 1");
  Int acc = f(t.dropped_first(g));
  Int sign = 1;
  for (int i = 1; i < len; ++i) {
    sign = -sign;
    acc += sign * f(t.merged(g, i - 1));
  }
  sign = -sign;  // (-1)^(n+1) with n = len-1
  acc += sign * action(f(t.dropped_last(g)), t.entry(len - 1));
  return acc;
}

// --- homotopies -----------------------------------------------------------------------

TupleChain standard_homotopy(const KGraph& g, const ComposableTuple& t) {
  if (t.empty()) throw DomainError("standard homotopy acts on nonempty generators");
  const int w = t.source_vertex(g);
  // position n = length-1, sign (-1)^(n+1) = (-1)^length
  TupleChain out;
  out.add(t.appended(g, g.identity(w)), (t.length() % 2 == 0) ? 1 : -1);
  return out;
}

TupleChain standard_homotopy(const KGraph& g, const TupleChain& chain) {
  TupleChain out;
  for (const auto& [t, c] : chain.terms()) {
    TupleChain piece = standard_homotopy(g, t);
    piece *= c;
    out += piece;
  }
  return out;
}

ComposableTuple standard_homotopy_base(const KGraph& g, int w) {
  return ComposableTuple::of(g, {g.identity(w)});
}

InitialVertexData initial_vertex(const KGraph& g, const Degree& probe_bound) {
  EnumerationResult enumeration = g.morphisms_up_to(probe_bound);
  InitialVertexData out;
  // counts[alpha][v] = |v Lambda alpha| within the bound
  std::vector<std::vector<int>> counts(g.vertex_count(),
                                       std::vector<int>(g.vertex_count(), 0));
  std::map<std::pair<int, int>, Morphism> unique_arrow;
  for (const Morphism& m : enumeration.morphisms) {
    int v = m.anchor(), alpha = g.source(m);
    if (++counts[alpha][v] == 1) unique_arrow.insert({{alpha, v}, m});
  }
  for (int alpha = 0; alpha < g.vertex_count(); ++alpha) {
    bool candidate = true;
    for (int v = 0; v < g.vertex_count() && candidate; ++v)
      if (counts[alpha][v] != 1) candidate = false;
    if (!candidate) continue;
    if (enumeration.saturated) {
      // A larger morphism into alpha could exist past the bound.
      out.certified = false;
      continue;
    }
    out.alpha = alpha;
    for (int v = 0; v < g.vertex_count(); ++v)
      out.alpha_from.emplace(v, unique_arrow.at({alpha, v}));
    return out;
  }
  return out;
}

TupleChain initial_homotopy(const KGraph& g, const InitialVertexData& iv,
                            const ComposableTuple& t) {
  if (!iv.alpha) throw DomainError("initial homotopy requires an initial vertex");
  const int w = t.source_vertex(g);
  const Morphism& alpha_w = iv.alpha_from.at(w);
  TupleChain out;
  // position n = length, sign (-1)^(n+1)
  const int sign = (t.length() % 2 == 0) ? -1 : 1;
  if (t.empty())
    out.add(ComposableTuple::of(g, {alpha_w}), sign);
  else
    out.add(t.appended(g, alpha_w), sign);
  return out;
}

TupleChain initial_homotopy(const KGraph& g, const InitialVertexData& iv,
                            const TupleChain& chain) {
  TupleChain out;
  for (const auto& [t, c] : chain.terms()) {
    TupleChain piece = initial_homotopy(g, iv, t);
    piece *= c;
    out += piece;
  }
  return out;
}

// --- enumeration ------------------------------------------------------------------------

TupleEnumeration tuples_up_to(const KGraph& g, int length, const Degree& bound) {
  TupleEnumeration out;
  EnumerationResult base = g.morphisms_up_to(bound);
  out.saturated = base.saturated;
  if (length == 0) {
    for (int v = 0; v < g.vertex_count(); ++v)
      out.tuples.push_back(ComposableTuple::at_vertex(v));
    return out;
  }
  // group morphisms by range for fast chaining
  std::map<int, std::vector<const Morphism*>> by_range;
  for (const Morphism& m : base.morphisms) by_range[m.anchor()].push_back(&m);

  std::vector<Morphism> cur;
  std::function<void(int, const Degree&)> rec = [&](int src, const Degree& total) {
    if (static_cast<int>(cur.size()) == length) {
      out.tuples.push_back(ComposableTuple::of(g, cur));
      return;
    }
    auto it = by_range.find(src);
    if (it == by_range.end()) return;
    for (const Morphism* m : it->second) {
      Degree next = total + m->degree();
      if (!next.le(bound)) continue;
      cur.push_back(*m);
      rec(g.source(*m), next);
      cur.pop_back();
    }
  };
  for (int v = 0; v < g.vertex_count(); ++v) rec(v, Degree::zero(g.k()));
  std::sort(out.tuples.begin(), out.tuples.end());
  return out;
}

std::vector<ComposableTuple> composable_tuples(const KGraph& g,
                                               const std::vector<Morphism>& morphisms,
                                               int length) {
  std::vector<ComposableTuple> out;
  if (length == 0) {
    for (int v = 0; v < g.vertex_count(); ++v)
      out.push_back(ComposableTuple::at_vertex(v));
    return out;
  }
  std::map<int, std::vector<const Morphism*>> by_range;
  for (const Morphism& m : morphisms) by_range[m.anchor()].push_back(&m);
  std::vector<Morphism> cur;
  std::function<void(int)> rec = [&](int src) {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(ComposableTuple::of(g, cur));
      return;
    }
    auto it = by_range.find(src);
    if (it == by_range.end()) return;
    for (const Morphism* m : it->second) {
      cur.push_back(*m);
      rec(g.source(*m));
      cur.pop_back();
    }
  };
  for (int v = 0; v < g.vertex_count(); ++v) rec(v);
  std::sort(out.begin(), out.end());
  return out;
}

// --- categorical homology ---------------------------------------------------------------

AbelianGroup cat_homology(const KGraph& g, int n, const Coefficients& coeff,
                          const CatHomologyOptions& options) {
  if (n < 0) return AbelianGroup{};
  std::optional<Morphism> witness;
  if (!g.is_finite_category(options.probe_bound, &witness)) {
    std::string msg = "cat_homology: category is infinite within the probe bound";
    if (witness) msg += " (witness " + g.describe(*witness) + ")";
    throw DomainError(msg);
  }
  std::vector<Morphism> all = g.morphisms_up_to(options.probe_bound).morphisms;

  auto basis = [&](int len) { return composable_tuples(g, all, len); };
  std::vector<ComposableTuple> b_lo = n >= 1 ? basis(n - 1) : std::vector<ComposableTuple>{};
  std::vector<ComposableTuple> b_mid = basis(n);
  std::vector<ComposableTuple> b_hi = basis(n + 1);
  const long total = static_cast<long>(b_lo.size() + b_mid.size() + b_hi.size());
  if (total > options.size_guard)
    throw DomainError("cat_homology: size guard exceeded (" + std::to_string(b_lo.size()) +
                      " + " + std::to_string(b_mid.size()) + " + " +
                      std::to_string(b_hi.size()) + " tuples, guard " +
                      std::to_string(options.size_guard) + ")");

  std::map<ComposableTuple, int> lo_index, mid_index;
  for (int i = 0; i < static_cast<int>(b_lo.size()); ++i) lo_index.emplace(b_lo[i], i);
  for (int i = 0; i < static_cast<int>(b_mid.size()); ++i) mid_index.emplace(b_mid[i], i);

  auto matrix_of = [&](const std::vector<ComposableTuple>& from,
                       const std::map<ComposableTuple, int>& to_index, int to_count) {
    SparseIntMatrix m(to_count, static_cast<int>(from.size()));
    for (int c = 0; c < static_cast<int>(from.size()); ++c) {
      if (from[c].length() == 0) continue;  // boundary into degree -1 is the augmentation
      TupleChain chain = constant_boundary(g, from[c]);
      for (const auto& [t, v] : chain.terms()) m.add_to(to_index.at(t), c, v);
    }
    return m;
  };

  SparseIntMatrix a = n >= 1
                          ? matrix_of(b_mid, lo_index, static_cast<int>(b_lo.size()))
                          : SparseIntMatrix(0, static_cast<int>(b_mid.size()));
  SparseIntMatrix b = matrix_of(b_hi, mid_index, static_cast<int>(b_mid.size()));
  return coeff.modular ? homology_of_pair_mod(a, b, coeff.modulus) : homology_of_pair(a, b);
}

}  // namespace khom
