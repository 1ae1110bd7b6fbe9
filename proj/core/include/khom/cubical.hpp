#ifndef KHOM_CUBICAL_HPP
#define KHOM_CUBICAL_HPP

#include <map>
#include <utility>
#include <vector>

#include "khom/exact_linalg.hpp"
#include "khom/formal_sum.hpp"
#include "khom/kgraph.hpp"

namespace khom {

/// Constant coefficient ring: Z or Z/m.
struct Coefficients {
  bool modular = false;
  long modulus = 0;

  static Coefficients integers() { return {}; }
  static Coefficients mod(long m) {
    if (m < 2) throw DomainError("modulus must be at least 2");
    return {true, m};
  }
  Int reduce(const Int& v) const {
    if (!modular) return v;
    Int r = v % modulus;
    if (r < 0) r += modulus;
    return r;
  }
  bool operator==(const Coefficients&) const = default;
};

/// Indexed cube bases Q_0 .. Q_k of a validated graph, with stable positions:
/// cubes sorted by (color set, normal-form word) as produced by KGraph::cubes.
class CubicalBasis {
 public:
  explicit CubicalBasis(const KGraph& g);

  int dimension_bound() const { return static_cast<int>(per_degree_.size()) - 1; }
  int count(int n) const;
  const std::vector<Morphism>& cubes(int n) const;
  int index_of(int n, const Morphism& cube) const;  // throws DomainError if absent

 private:
  std::vector<std::vector<Morphism>> per_degree_;
  std::vector<std::map<Morphism, int>> index_;
  static const std::vector<Morphism> empty_;
};

/// Matrix of the cubical boundary d_n : ZQ_n -> ZQ_{n-1} in basis order.
/// With reduced set and n = 0 this is the 1 x |Q_0| augmentation row.
SparseIntMatrix boundary_matrix(const KGraph& g, const CubicalBasis& basis, int n, bool reduced);
SparseIntMatrix boundary_matrix(const KGraph& g, int n, bool reduced);

/// H_n^cub (or the reduced variant) with constant coefficients. Zero for
/// n < 0 and n > k without building matrices.
AbelianGroup cubical_homology(const KGraph& g, int n, const Coefficients& coeff, bool reduced);

/// H^n_cub with constant coefficients; the coboundary matrix is the
/// transpose of the boundary matrix one degree up.
AbelianGroup cubical_cohomology(const KGraph& g, int n, const Coefficients& coeff);

/// Total assignment of coefficient values to Q_n.
class CochainTable {
 public:
  CochainTable(const KGraph& g, const CubicalBasis& basis, int degree, Coefficients coeff);

  int degree() const { return degree_; }
  const Coefficients& coefficients() const { return coeff_; }
  const std::map<Morphism, Int>& values() const { return values_; }

  void set(const Morphism& cube, const Int& v);
  Int at(const Morphism& cube) const;  // throws DomainError when absent

  bool operator==(const CochainTable&) const = default;

 private:
  int degree_ = 0;
  Coefficients coeff_;
  std::map<Morphism, Int> values_;
};

/// Coboundary of a total table: (df)(c) = sum_i (-1)^i (f(F^0_i c) - f(F^1_i c)),
/// a total table on Q_{n+1}.
CochainTable coboundary(const KGraph& g, const CubicalBasis& basis, const CochainTable& f);

/// Generator (eta, mu) of the cube complex with composable tails:
/// eta a cube, mu any morphism with s(eta) = r(mu).
using CubeTail = std::pair<Morphism, Morphism>;
using CubeTailChain = FormalSum<CubeTail>;

/// Boundary of a single generator:
///   d(eta, mu) = sum_j (-1)^j ( (F^0_j eta, S_j(eta) mu) - (F^1_j eta, mu) ).
CubeTailChain boundary_with_tail(const KGraph& g, const Morphism& eta, const Morphism& mu);
CubeTailChain boundary_with_tail(const KGraph& g, const CubeTailChain& chain);

/// Augmentation of the tailed complex: every (v, mu) maps to 1.
Int augmentation(const CubeTailChain& chain);

/// Universal-coefficient cross-check: compares H^n(Z/m) against
/// Hom(H_n, Z/m) + Ext(H_{n-1}, Z/m) computed from integral homology.
bool uct_check(const KGraph& g, int n, long m);

}  // namespace khom

#endif
