#ifndef KHOM_CHAIN_MAPS_HPP
#define KHOM_CHAIN_MAPS_HPP

#include <string>
#include <vector>

#include "khom/categorical.hpp"
#include "khom/cubical.hpp"
#include "khom/kgraph.hpp"

namespace khom {

/// Enumeration of the symmetric group with signs; permutations are 1-based
/// image vectors.
struct SignedPermutation {
  std::vector<int> image;
  int sign = 1;
};
std::vector<SignedPermutation> symmetric_group(int n);
SignedPermutation adjacent_transposition(int n, int j);  // (j, j+1)
SignedPermutation tail_cycle(int n, int j);              // (j, j+1, ..., n)
int permutation_sign(const std::vector<int>& image);

/// Which end of the color axis the staircase construction walks from.
/// Reversed mirrors the colors (used for comparisons against conventions
/// that order the generators the other way).
enum class ColorOrder { Forward, Reversed };

// --- triangulation: cubes to composable tuples -------------------------------

/// The sigma-factorization of a cube: entry i carries the sigma(i)-th color
/// of eta.
std::vector<Morphism> permuted_factors(const KGraph& g, const Morphism& eta,
                                       const std::vector<int>& image);

/// Triangulation of a tailed cube: the signed sum over all color orderings
///   sum_sigma sgn(sigma) (eta_1^sigma, ..., eta_n^sigma, mu).
TupleChain triangulate(const KGraph& g, const Morphism& eta, const Morphism& mu);
TupleChain triangulate(const KGraph& g, const CubeTailChain& chain);

// --- rectangular chains --------------------------------------------------------

/// Subdivision of the hyper-rectangle [0, d(lambda)] into unit K-cubes:
/// sum over lattice m of lambda(m, m + e_K). Empty when some K-coordinate of
/// d(lambda) vanishes (the degenerate case).
FormalSum<Morphism> rectangular_chain(const KGraph& g, const Morphism& lambda,
                                      const ColorSet& K);

/// Tailed variant in the cube-with-tail complex: each unit cube carries the
/// remaining path composed into mu.
CubeTailChain rectangular_chain_tailed(const KGraph& g, const Morphism& eta,
                                       const Morphism& mu, const ColorSet& K);

struct RectangularFaces {
  Morphism front;       // lambda(0, d - d_c e_c)
  Morphism front_tail;  // S: lambda(d - d_c e_c, d)
  Morphism back;        // lambda(d_c e_c, d)
  Morphism back_head;   // R: lambda(0, d_c e_c)
};
/// Whole-axis faces of a hyper-rectangle along the j-th color of K
/// (1-based); lambda = front * front_tail = back_head * back.
RectangularFaces rect_faces(const KGraph& g, const Morphism& lambda, const ColorSet& K, int j);

/// Same face operators on a tailed generator.
CubeTail pair_face(const KGraph& g, const CubeTail& gen, const ColorSet& K, int j, int l);
CubeTail pair_companion_s(const KGraph& g, const CubeTail& gen, const ColorSet& K, int j);
CubeTail pair_companion_r(const KGraph& g, const CubeTail& gen, const ColorSet& K, int j);

/// Boundary of untailed cube chains, for rectangular-boundary checks.
FormalSum<Morphism> cube_boundary(const KGraph& g, const FormalSum<Morphism>& chain);

// --- cubulation: composable tuples to cubes -------------------------------------

/// The staircase window of a tuple: entry i contributes its colors >= K_(i)
/// (Forward) to the window [b, c].
std::pair<Degree, Degree> box_window(const KGraph& g, const std::vector<Morphism>& entries,
                                     const ColorSet& K, ColorOrder order = ColorOrder::Forward);

/// The K-indexed hyper-rectangle of a generating tuple of length n+1, as a
/// tailed morphism pair (lambda(b,c), lambda(c, d)).
CubeTail box_hat(const KGraph& g, const ComposableTuple& t, const ColorSet& K,
                 ColorOrder order = ColorOrder::Forward);

/// Cubulation of one tuple: sum over K of the subdivided box rectangles.
CubeTailChain cubulate(const KGraph& g, const ComposableTuple& t,
                       ColorOrder order = ColorOrder::Forward);
CubeTailChain cubulate(const KGraph& g, const ComposableTuple& t, const ColorSet& K,
                       ColorOrder order);
CubeTailChain cubulate(const KGraph& g, const TupleChain& chain,
                       ColorOrder order = ColorOrder::Forward);

// --- the shared face rectangles ---------------------------------------------------

/// Staircase level: the number of colors of J that are <= q.
int xi_level(const ColorSet& J, int q);

/// The auxiliary rectangle indexing the faces shared by the two boundary
/// expansions of the box map; J has size n-1, q ranges over 0..k.
CubeTail xi_hat(const KGraph& g, const ComposableTuple& t, const ColorSet& J, int q);
CubeTailChain xi(const KGraph& g, const ComposableTuple& t, const ColorSet& J, int q);

// --- verification ------------------------------------------------------------------

struct CheckReport {
  std::string check;
  long generators_tested = 0;
  bool pass = true;
  std::string first_witness;
};

struct VerifyReport {
  Degree bound;
  int tuple_length_bound = 0;
  std::vector<CheckReport> checks;
  bool all_pass() const;
};

/// Exhaustively checks, within the degree/length bounds: both chain-map
/// identities, the round trip on cubes, the face-rectangle equations, the
/// rectangle-addition rule, and the rectangular boundary expansion.
VerifyReport verify_chain_map_identities(const KGraph& g, const Degree& bound,
                                         int max_tuple_length = -1);

/// Naturality of both maps under a k-graph morphism: applying the functor
/// entrywise commutes with triangulation and cubulation.
VerifyReport verify_naturality(const KGraphMorphism& phi, const Degree& bound,
                               int max_tuple_length = -1);

}  // namespace khom

#endif
