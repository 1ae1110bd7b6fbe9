#include "khom/cubical.hpp"

namespace khom {

const std::vector<Morphism> CubicalBasis::empty_{};

CubicalBasis::CubicalBasis(const KGraph& g) {
  per_degree_.resize(g.k() + 1);
  index_.resize(g.k() + 1);
  for (int n = 0; n <= g.k(); ++n) {
    per_degree_[n] = g.cubes(n);
    for (int i = 0; i < static_cast<int>(per_degree_[n].size()); ++i)
      index_[n].emplace(per_degree_[n][i], i);
  }
}

int CubicalBasis::count(int n) const {
  if (n < 0 || n > dimension_bound()) return 0;
  return static_cast<int>(per_degree_[n].size());
}

const std::vector<Morphism>& CubicalBasis::cubes(int n) const {
  if (n < 0 || n > dimension_bound()) return empty_;
  return per_degree_[n];
}

int CubicalBasis::index_of(int n, const Morphism& cube) const {
  if (n < 0 || n > dimension_bound()) throw DomainError("cube degree out of range");
  auto it = index_[n].find(cube);
  if (it == index_[n].end()) throw DomainError("cube is not in the basis");
  return it->second;
}

SparseIntMatrix boundary_matrix(const KGraph& g, const CubicalBasis& basis, int n,
                                bool reduced) {
  const int cols = basis.count(n);
  const int rows = (n == 0) ? (reduced ? 1 : 0) : basis.count(n - 1);
  SparseIntMatrix m(rows, cols);
  if (n == 0) {
    if (reduced)
      for (int c = 0; c < cols; ++c) m.set(0, c, 1);
    return m;
  }
  if (n < 0 || n > g.k()) return m;
  for (int c = 0; c < cols; ++c) {
    const Morphism& cube = basis.cubes(n)[c];
    for (int j = 1; j <= n; ++j) {
      const int sign = (j % 2 == 0) ? 1 : -1;
      m.add_to(basis.index_of(n - 1, g.face(cube, j, 0)), c, sign);
      m.add_to(basis.index_of(n - 1, g.face(cube, j, 1)), c, -sign);
    }
  }
  return m;
}

SparseIntMatrix boundary_matrix(const KGraph& g, int n, bool reduced) {
  CubicalBasis basis(g);
  return boundary_matrix(g, basis, n, reduced);
}

AbelianGroup cubical_homology(const KGraph& g, int n, const Coefficients& coeff,
                              bool reduced) {
  if (n > g.k() || n < (reduced ? -1 : 0)) return AbelianGroup{};
  CubicalBasis basis(g);
  SparseIntMatrix a, b;
  if (reduced && n == -1) {
    a = SparseIntMatrix(0, 1);
    b = boundary_matrix(g, basis, 0, true);
  } else {
    a = boundary_matrix(g, basis, n, reduced);
    b = boundary_matrix(g, basis, n + 1, reduced);
  }
  return coeff.modular ? homology_of_pair_mod(a, b, coeff.modulus) : homology_of_pair(a, b);
}

AbelianGroup cubical_cohomology(const KGraph& g, int n, const Coefficients& coeff) {
  if (n < 0 || n > g.k()) return AbelianGroup{};
  CubicalBasis basis(g);
  SparseIntMatrix a = boundary_matrix(g, basis, n + 1, false).transpose();
  SparseIntMatrix b = boundary_matrix(g, basis, n, false).transpose();
  return coeff.modular ? homology_of_pair_mod(a, b, coeff.modulus) : homology_of_pair(a, b);
}

CochainTable::CochainTable(const KGraph& g, const CubicalBasis& basis, int degree,
                           Coefficients coeff)
    : degree_(degree), coeff_(coeff) {
  for (const Morphism& cube : basis.cubes(degree)) values_[cube] = 0;
  (void)g;
}

void CochainTable::set(const Morphism& cube, const Int& v) {
  auto it = values_.find(cube);
  if (it == values_.end()) throw DomainError("cochain table: cube not in Q_n");
  it->second = coeff_.reduce(v);
}

Int CochainTable::at(const Morphism& cube) const {
  auto it = values_.find(cube);
  if (it == values_.end()) throw DomainError("cochain table: cube not in Q_n");
  return it->second;
}

CochainTable coboundary(const KGraph& g, const CubicalBasis& basis, const CochainTable& f) {
  const int n = f.degree() + 1;
  CochainTable out(g, basis, n, f.coefficients());
  for (const Morphism& cube : basis.cubes(n)) {
    Int acc = 0;
    for (int i = 1; i <= n; ++i) {
      const int sign = (i % 2 == 0) ? 1 : -1;
      acc += sign * (f.at(g.face(cube, i, 0)) - f.at(g.face(cube, i, 1)));
    }
    out.set(cube, acc);
  }
  return out;
}

CubeTailChain boundary_with_tail(const KGraph& g, const Morphism& eta, const Morphism& mu) {
  if (g.source(eta) != mu.anchor())
    throw DomainError("boundary_with_tail: s(eta) != r(mu)");
  CubeTailChain out;
  const int n = eta.degree().total();
  for (int j = 1; j <= n; ++j) {
    const Int sign = (j % 2 == 0) ? 1 : -1;
    out.add({g.face(eta, j, 0), g.compose(g.face_companion_s(eta, j), mu)}, sign);
    out.add({g.face(eta, j, 1), mu}, -sign);
  }
  return out;
}

CubeTailChain boundary_with_tail(const KGraph& g, const CubeTailChain& chain) {
  CubeTailChain out;
  for (const auto& [gen, c] : chain.terms()) {
    CubeTailChain piece = boundary_with_tail(g, gen.first, gen.second);
    piece *= c;
    out += piece;
  }
  return out;
}

Int augmentation(const CubeTailChain& chain) {
  Int total = 0;
  for (const auto& [gen, c] : chain.terms()) total += c;
  return total;
}

bool uct_check(const KGraph& g, int n, long m) {
  AbelianGroup lhs = cubical_cohomology(g, n, Coefficients::mod(m));
  AbelianGroup hn = cubical_homology(g, n, Coefficients::integers(), false);
  AbelianGroup hn1 = cubical_homology(g, n - 1, Coefficients::integers(), false);
  AbelianGroup rhs = direct_sum(hom_into_cyclic(hn, m), ext_with_cyclic(hn1, m));
  return lhs == rhs;
}

}  // namespace khom
