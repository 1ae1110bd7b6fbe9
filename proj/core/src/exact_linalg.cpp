#include "khom/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace khom {

// --- SparseIntMatrix -----------------------------------------------------------

SparseIntMatrix::SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DomainError("matrix dimensions must be nonnegative");
}

SparseIntMatrix SparseIntMatrix::identity(int n) {
  SparseIntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void SparseIntMatrix::check_bounds(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw DomainError("matrix index out of bounds");
}

Int SparseIntMatrix::get(int r, int c) const {
  check_bounds(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Int(0) : it->second;
}

void SparseIntMatrix::set(int r, int c, const Int& v) {
  check_bounds(r, c);
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseIntMatrix::add_to(int r, int c, const Int& v) {
  check_bounds(r, c);
  if (v == 0) return;
  auto it = entries_.find({r, c});
  if (it == entries_.end()) {
    entries_.emplace(std::make_pair(r, c), v);
  } else {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
  return t;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& other) const {
  if (cols_ != other.rows_) throw DomainError("matrix product dimension mismatch");
  // rows of other, gathered once
  std::vector<std::vector<std::pair<int, Int>>> rows_of_b(other.rows_);
  for (const auto& [rc, v] : other.entries_) rows_of_b[rc.first].emplace_back(rc.second, v);
  SparseIntMatrix out(rows_, other.cols_);
  for (const auto& [rc, v] : entries_) {
    for (const auto& [c2, w] : rows_of_b[rc.second]) out.add_to(rc.first, c2, v * w);
  }
  return out;
}

SparseIntMatrix SparseIntMatrix::augment_columns(const SparseIntMatrix& other) const {
  if (rows_ != other.rows_) throw DomainError("column augmentation needs equal row counts");
  SparseIntMatrix out(rows_, cols_ + other.cols_);
  for (const auto& [rc, v] : entries_) out.set(rc.first, rc.second, v);
  for (const auto& [rc, v] : other.entries_) out.set(rc.first, rc.second + cols_, v);
  return out;
}

SparseIntMatrix SparseIntMatrix::columns(int first, int count) const {
  if (first < 0 || count < 0 || first + count > cols_)
    throw DomainError("column slice out of range");
  SparseIntMatrix out(rows_, count);
  for (const auto& [rc, v] : entries_)
    if (rc.second >= first && rc.second < first + count)
      out.set(rc.first, rc.second - first, v);
  return out;
}

SparseIntMatrix SparseIntMatrix::scaled(const Int& s) const {
  SparseIntMatrix out(rows_, cols_);
  if (s == 0) return out;
  for (const auto& [rc, v] : entries_) out.set(rc.first, rc.second, v * s);
  return out;
}

// --- Smith normal form -----------------------------------------------------------

namespace {

struct DenseMat {
  int rows, cols;
  std::vector<Int> a;
  DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

DenseMat to_dense(const SparseIntMatrix& m) {
  DenseMat d(m.rows(), m.cols());
  for (const auto& [rc, v] : m.entries()) d.at(rc.first, rc.second) = v;
  return d;
}

SparseIntMatrix to_sparse(const DenseMat& d) {
  SparseIntMatrix m(d.rows, d.cols);
  for (int r = 0; r < d.rows; ++r)
    for (int c = 0; c < d.cols; ++c)
      if (d.at(r, c) != 0) m.set(r, c, d.at(r, c));
  return m;
}

void swap_rows(DenseMat& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(DenseMat& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
void add_row(DenseMat& m, int dst, int src, const Int& q) {  // row dst += q * row src
  if (q == 0) return;
  for (int c = 0; c < m.cols; ++c) m.at(dst, c) += q * m.at(src, c);
}
void add_col(DenseMat& m, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < m.rows; ++r) m.at(r, dst) += q * m.at(r, src);
}
void negate_row(DenseMat& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// Smallest-magnitude nonzero entry of the trailing submatrix, lexicographic
// tie-break; returns false when the submatrix is zero.
bool find_pivot(const DenseMat& d, int t, int& pr, int& pc) {
  bool found = false;
  Int best;
  for (int r = t; r < d.rows; ++r) {
    for (int c = t; c < d.cols; ++c) {
      const Int& v = d.at(r, c);
      if (v == 0) continue;
      Int av = abs(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pr = r;
        pc = c;
      }
    }
  }
  return found;
}

}  // namespace

SnfResult snf(const SparseIntMatrix& a) {
  const int rows = a.rows(), cols = a.cols();
  DenseMat d = to_dense(a);
  DenseMat u = to_dense(SparseIntMatrix::identity(rows));
  DenseMat v = to_dense(SparseIntMatrix::identity(cols));

  const int nmin = std::min(rows, cols);
  int t = 0;
  for (; t < nmin; ++t) {
    int pr = 0, pc = 0;
    if (!find_pivot(d, t, pr, pc)) break;
    swap_rows(d, t, pr);
    swap_rows(u, t, pr);
    swap_cols(d, t, pc);
    swap_cols(v, t, pc);

    while (true) {
      bool dirty = false;
      for (int r = t + 1; r < rows; ++r) {
        if (d.at(r, t) == 0) continue;
        Int q = d.at(r, t) / d.at(t, t);
        add_row(d, r, t, -q);
        add_row(u, r, t, -q);
        if (d.at(r, t) != 0) dirty = true;
      }
      for (int c = t + 1; c < cols; ++c) {
        if (d.at(t, c) == 0) continue;
        Int q = d.at(t, c) / d.at(t, t);
        add_col(d, c, t, -q);
        add_col(v, c, t, -q);
        if (d.at(t, c) != 0) dirty = true;
      }
      if (dirty) {
        int r2 = 0, c2 = 0;
        find_pivot(d, t, r2, c2);
        swap_rows(d, t, r2);
        swap_rows(u, t, r2);
        swap_cols(d, t, c2);
        swap_cols(v, t, c2);
        continue;
      }
      // Row and column are clean; enforce divisibility into the remainder.
      bool divides_all = true;
      int br = -1, bc = -1;
      for (int r = t + 1; r < rows && divides_all; ++r) {
        for (int c = t + 1; c < cols; ++c) {
          if (d.at(r, c) % d.at(t, t) != 0) {
            divides_all = false;
            br = r;
            bc = c;
            break;
          }
        }
      }
      if (divides_all) break;
      add_row(d, t, br, 1);
      add_row(u, t, br, 1);
      (void)bc;
    }
    if (d.at(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }

  SnfResult res;
  res.U = to_sparse(u);
  res.D = to_sparse(d);
  res.V = to_sparse(v);
  res.rank = 0;
  for (int i = 0; i < nmin; ++i) {
    res.diagonal.push_back(d.at(i, i));
    if (d.at(i, i) != 0) ++res.rank;
  }
  return res;
}

SparseIntMatrix kernel_basis(const SparseIntMatrix& a) {
  if (a.cols() == 0) return SparseIntMatrix(0, 0);
  SnfResult s = snf(a);
  // Columns of V past the rank map to zero columns of D, so A * (those
  // columns) = 0; they form a primitive basis of the kernel lattice.
  return s.V.columns(s.rank, a.cols() - s.rank);
}

SparseIntMatrix solve_exact(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("solve: row count mismatch");
  SnfResult s = snf(a);
  SparseIntMatrix y = s.U.multiply(b);  // D * (V^-1 X) = U B
  SparseIntMatrix z(a.cols(), b.cols());
  for (const auto& [rc, val] : y.entries()) {
    const int r = rc.first;
    if (r >= s.rank) throw DomainError("solve: system has no solution");
    const Int& dr = s.diagonal[r];
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), val.get_mpz_t(), dr.get_mpz_t());
    if (rem != 0) throw DomainError("solve: no integral solution");
    z.set(r, rc.second, q);
  }
  return s.V.multiply(z);
}

// --- abelian groups -------------------------------------------------------------

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

namespace {

AbelianGroup group_from_relation_matrix(int generators, const SparseIntMatrix& relations) {
  SnfResult s = snf(relations);
  AbelianGroup g;
  g.free_rank = generators - s.rank;
  for (const Int& d : s.diagonal)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

void check_composition_zero(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  SparseIntMatrix ab = a.multiply(b);
  if (!ab.is_zero()) {
    int col = ab.entries().begin()->first.second;
    throw DomainError("boundary composition is nonzero at column " + std::to_string(col));
  }
}

}  // namespace

AbelianGroup homology_of_pair(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("homology pair dimension mismatch");
  check_composition_zero(a, b);
  SparseIntMatrix kernel = kernel_basis(a);
  const int t = kernel.cols();
  if (t == 0) return AbelianGroup{};
  // Express im(B) in the kernel basis; exactness holds because the kernel
  // lattice is pure in Z^n.
  SparseIntMatrix c = solve_exact(kernel, b);
  return group_from_relation_matrix(t, c);
}

AbelianGroup homology_of_pair_mod(const SparseIntMatrix& a, const SparseIntMatrix& b, long m) {
  if (m < 2) throw DomainError("modulus must be at least 2");
  if (a.cols() != b.rows()) throw DomainError("homology pair dimension mismatch");
  {
    SparseIntMatrix ab = a.multiply(b);
    for (const auto& [rc, v] : ab.entries())
      if (v % m != 0)
        throw DomainError("mod-" + std::to_string(m) +
                          " boundary composition is nonzero at column " +
                          std::to_string(rc.second));
  }
  const int n = a.cols();
  // Lattice L = { x : A x = 0 mod m }, as the x-part of ker [A | m I].
  SparseIntMatrix stacked = a.augment_columns(SparseIntMatrix::identity(a.rows()).scaled(m));
  SparseIntMatrix big_kernel = kernel_basis(stacked);
  SparseIntMatrix l_basis(n, big_kernel.cols());
  for (const auto& [rc, v] : big_kernel.entries())
    if (rc.first < n) l_basis.set(rc.first, rc.second, v);
  // Relations: columns of B together with m Z^n.
  SparseIntMatrix relations = b.augment_columns(SparseIntMatrix::identity(n).scaled(m));
  SparseIntMatrix c = solve_exact(l_basis, relations);
  AbelianGroup g = group_from_relation_matrix(l_basis.cols(), c);
  // the quotient is annihilated by m, so every invariant factor divides m
  if (g.free_rank != 0)
    throw std::logic_error("mod-m homology produced a free part");
  for (const Int& d : g.torsion)
    if (m % d != 0) throw std::logic_error("mod-m invariant factor does not divide m");
  return g;
}

AbelianGroup abelian_from_cyclic_orders(const std::vector<Int>& orders) {
  AbelianGroup g;
  std::map<Int, std::vector<int>> prime_exponents;  // prime -> exponents, one per factor
  for (const Int& order : orders) {
    if (order == 0) {
      ++g.free_rank;
      continue;
    }
    if (order < 0) throw DomainError("cyclic order must be nonnegative");
    Int rest = order;
    for (Int p = 2; p * p <= rest; ++p) {
      if (rest % p != 0) continue;
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      prime_exponents[p].push_back(e);
    }
    if (rest > 1) prime_exponents[rest].push_back(1);
  }
  std::size_t count = 0;
  for (auto& [p, exps] : prime_exponents) {
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    count = std::max(count, exps.size());
  }
  std::vector<Int> invariant(count, 1);
  for (const auto& [p, exps] : prime_exponents) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      Int pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(exps[i]));
      // largest prime powers go into the last invariant factor
      invariant[count - 1 - i] *= pe;
    }
  }
  for (const Int& d : invariant)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Int> orders;
  orders.insert(orders.end(), a.torsion.begin(), a.torsion.end());
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  AbelianGroup g = abelian_from_cyclic_orders(orders);
  g.free_rank += a.free_rank + b.free_rank;
  return g;
}

AbelianGroup hom_into_cyclic(const AbelianGroup& h, long m) {
  // Hom(Z, Z/m) = Z/m; Hom(Z/d, Z/m) = Z/gcd(d, m).
  std::vector<Int> orders(static_cast<std::size_t>(h.free_rank), Int(m));
  for (const Int& d : h.torsion) {
    Int g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), Int(m).get_mpz_t());
    orders.push_back(g);
  }
  return abelian_from_cyclic_orders(orders);
}

AbelianGroup ext_with_cyclic(const AbelianGroup& h, long m) {
  // Ext(Z, Z/m) = 0; Ext(Z/d, Z/m) = Z/gcd(d, m).
  std::vector<Int> orders;
  for (const Int& d : h.torsion) {
    Int g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), Int(m).get_mpz_t());
    orders.push_back(g);
  }
  return abelian_from_cyclic_orders(orders);
}

}  // namespace khom
