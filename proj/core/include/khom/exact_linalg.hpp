#ifndef KHOM_EXACT_LINALG_HPP
#define KHOM_EXACT_LINALG_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khom/errors.hpp"

namespace khom {

using Int = mpz_class;

/// Sparse matrix over Z with arbitrary-precision entries. No zero entry is
/// ever stored; indices are 0-based.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols);
  static SparseIntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int get(int r, int c) const;
  void set(int r, int c, const Int& v);
  void add_to(int r, int c, const Int& v);
  const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  SparseIntMatrix transpose() const;
  SparseIntMatrix multiply(const SparseIntMatrix& other) const;
  /// [this | other], matching row counts.
  SparseIntMatrix augment_columns(const SparseIntMatrix& other) const;
  SparseIntMatrix columns(int first, int count) const;
  SparseIntMatrix scaled(const Int& s) const;

  bool operator==(const SparseIntMatrix&) const = default;

 private:
  void check_bounds(int r, int c) const;
  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Int> entries_;
};

/// Smith normal form D = U * A * V with unimodular U, V and a divisibility
/// chain d_1 | d_2 | ... >= 0 on the diagonal of D.
struct SnfResult {
  SparseIntMatrix U, D, V;
  int rank = 0;
  std::vector<Int> diagonal;  // the first min(rows, cols) diagonal entries
};

/// Finitely generated abelian group in canonical form: free rank plus
/// invariant factors > 1, each dividing the next.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
  std::string to_string() const;
};

/// Deterministic exact Smith normal form. Pivoting picks the
/// smallest-magnitude nonzero entry with lexicographic tie-break.
SnfResult snf(const SparseIntMatrix& a);

/// Basis of the integer kernel lattice of A, as matrix columns. The basis is
/// primitive: it spans ker(A) as a direct summand of Z^cols.
SparseIntMatrix kernel_basis(const SparseIntMatrix& a);

/// Solves A * X = B exactly over Z; throws DomainError when no integral
/// solution exists.
SparseIntMatrix solve_exact(const SparseIntMatrix& a, const SparseIntMatrix& b);

/// Homology ker(A)/im(B) of a pair with A*B = 0 (checked; the witness column
/// of B is reported on failure).
AbelianGroup homology_of_pair(const SparseIntMatrix& a, const SparseIntMatrix& b);

/// Homology of the mod-m reduction of the pair, computed by stacking m*I
/// blocks so that only integer SNF is needed. The result is a direct sum of
/// cyclic groups Z/d with d | m (free rank 0).
AbelianGroup homology_of_pair_mod(const SparseIntMatrix& a, const SparseIntMatrix& b, long m);

/// Canonical form of a direct sum of cyclic groups of the given orders
/// (order 0 meaning Z), as free rank + invariant factors.
AbelianGroup abelian_from_cyclic_orders(const std::vector<Int>& orders);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// Hom(H, Z/m) and Ext(H, Z/m) for finitely generated H.
AbelianGroup hom_into_cyclic(const AbelianGroup& h, long m);
AbelianGroup ext_with_cyclic(const AbelianGroup& h, long m);

}  // namespace khom

#endif
