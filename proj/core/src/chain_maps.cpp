#include "khom/chain_maps.hpp"

#include <algorithm>

namespace khom {

// --- permutations ------------------------------------------------------------

int permutation_sign(const std::vector<int>& image) {
  int inversions = 0;
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i + 1; j < image.size(); ++j)
      if (image[i] > image[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<SignedPermutation> symmetric_group(int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i + 1;
  std::vector<SignedPermutation> out;
  do {
    out.push_back({image, permutation_sign(image)});
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

SignedPermutation adjacent_transposition(int n, int j) {
  if (j < 1 || j >= n) throw DomainError("transposition index out of range");
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i + 1;
  std::swap(image[j - 1], image[j]);
  return {image, -1};
}

SignedPermutation tail_cycle(int n, int j) {
  if (j < 1 || j > n) throw DomainError("cycle index out of range");
  std::vector<int> image(n);
  for (int i = 1; i <= n; ++i) {
    if (i < j)
      image[i - 1] = i;
    else if (i < n)
      image[i - 1] = i + 1;
    else
      image[i - 1] = j;
  }
  return {image, permutation_sign(image)};
}

// --- triangulation -------------------------------------------------------------

std::vector<Morphism> permuted_factors(const KGraph& g, const Morphism& eta,
                                       const std::vector<int>& image) {
  ColorSet C = g.color_type(eta);
  const int n = static_cast<int>(C.size());
  if (static_cast<int>(image.size()) != n)
    throw DomainError("permutation size does not match the cube dimension");
  std::vector<Morphism> factors;
  factors.reserve(n);
  Degree pre = Degree::zero(g.k());
  for (int i = 0; i < n; ++i) {
    Degree step = Degree::unit(g.k(), C[image[i] - 1]);
    Degree next = pre + step;
    factors.push_back(g.segment(eta, pre, next));
    pre = next;
  }
  return factors;
}

TupleChain triangulate(const KGraph& g, const Morphism& eta, const Morphism& mu) {
  if (g.source(eta) != mu.anchor()) throw DomainError("triangulate: s(eta) != r(mu)");
  const int n = eta.degree().total();
  if (static_cast<int>(g.color_type(eta).size()) != n)
    throw DomainError("triangulate: morphism is not a cube");
  TupleChain out;
  if (n == 0) {
    out.add(ComposableTuple::of(g, {mu}), 1);
    return out;
  }
  for (const SignedPermutation& sigma : symmetric_group(n)) {
    std::vector<Morphism> entries = permuted_factors(g, eta, sigma.image);
    entries.push_back(mu);
    out.add(ComposableTuple::of(g, std::move(entries)), sigma.sign);
  }
  return out;
}

TupleChain triangulate(const KGraph& g, const CubeTailChain& chain) {
  TupleChain out;
  for (const auto& [gen, c] : chain.terms()) {
    TupleChain piece = triangulate(g, gen.first, gen.second);
    piece *= c;
    out += piece;
  }
  return out;
}

// --- rectangular chains -----------------------------------------------------------

FormalSum<Morphism> rectangular_chain(const KGraph& g, const Morphism& lambda,
                                      const ColorSet& K) {
  FormalSum<Morphism> out;
  Degree ek = indicator_degree(g.k(), K);
  if (!ek.le(lambda.degree())) return out;  // degenerate
  Degree hi = lambda.degree().minus(ek);
  for_each_lattice_point(Degree::zero(g.k()), hi, [&](const Degree& m) {
    out.add(g.segment(lambda, m, m + ek), 1);
  });
  return out;
}

CubeTailChain rectangular_chain_tailed(const KGraph& g, const Morphism& eta,
                                       const Morphism& mu, const ColorSet& K) {
  CubeTailChain out;
  Degree ek = indicator_degree(g.k(), K);
  if (!ek.le(eta.degree())) return out;
  Degree hi = eta.degree().minus(ek);
  for_each_lattice_point(Degree::zero(g.k()), hi, [&](const Degree& m) {
    Morphism cube = g.segment(eta, m, m + ek);
    Morphism rest = g.segment(eta, m + ek, eta.degree());
    out.add({std::move(cube), g.compose(rest, mu)}, 1);
  });
  return out;
}

RectangularFaces rect_faces(const KGraph& g, const Morphism& lambda, const ColorSet& K,
                            int j) {
  if (j < 1 || j > static_cast<int>(K.size()))
    throw DomainError("rect_faces: index out of range");
  const int color = K[j - 1];
  Degree slab = Degree::zero(g.k());
  // the whole thickness of lambda in the chosen color
  for (int t = 0; t < lambda.degree().at(color); ++t)
    slab += Degree::unit(g.k(), color);
  const Degree& d = lambda.degree();
  RectangularFaces out;
  out.front = g.segment(lambda, Degree::zero(g.k()), d.minus(slab));
  out.front_tail = g.segment(lambda, d.minus(slab), d);
  out.back = g.segment(lambda, slab, d);
  out.back_head = g.segment(lambda, Degree::zero(g.k()), slab);
  return out;
}

namespace {

Degree color_slab(const KGraph& g, const Degree& d, int color) {
  std::vector<int> v(g.k(), 0);
  v[color - 1] = d.at(color);
  return Degree(std::move(v));
}

}  // namespace

CubeTail pair_face(const KGraph& g, const CubeTail& gen, const ColorSet& K, int j, int l) {
  if (j < 1 || j > static_cast<int>(K.size()))
    throw DomainError("pair_face: index out of range");
  const auto& [eta, mu] = gen;
  Degree slab = color_slab(g, eta.degree(), K[j - 1]);
  const Degree& d = eta.degree();
  if (l == 0) {
    Morphism head = g.segment(eta, Degree::zero(g.k()), d.minus(slab));
    Morphism rest = g.segment(eta, d.minus(slab), d);
    return {std::move(head), g.compose(rest, mu)};
  }
  if (l == 1) return {g.segment(eta, slab, d), mu};
  throw DomainError("pair_face: l must be 0 or 1");
}

CubeTail pair_companion_s(const KGraph& g, const CubeTail& gen, const ColorSet& K, int j) {
  const auto& [eta, mu] = gen;
  Degree slab = color_slab(g, eta.degree(), K[j - 1]);
  return {g.segment(eta, eta.degree().minus(slab), eta.degree()), mu};
}

CubeTail pair_companion_r(const KGraph& g, const CubeTail& gen, const ColorSet& K, int j) {
  const auto& [eta, mu] = gen;
  Degree slab = color_slab(g, eta.degree(), K[j - 1]);
  Morphism head = g.segment(eta, Degree::zero(g.k()), slab);
  Morphism rest = g.segment(eta, slab, eta.degree());
  return {std::move(head), g.compose(rest, mu)};
}

FormalSum<Morphism> cube_boundary(const KGraph& g, const FormalSum<Morphism>& chain) {
  FormalSum<Morphism> out;
  for (const auto& [cube, c] : chain.terms()) {
    const int n = cube.degree().total();
    for (int j = 1; j <= n; ++j) {
      const Int sign = (j % 2 == 0) ? c : -c;
      out.add(g.face(cube, j, 0), sign);
      out.add(g.face(cube, j, 1), -sign);
    }
  }
  return out;
}

// --- cubulation ----------------------------------------------------------------------

std::pair<Degree, Degree> box_window(const KGraph& g, const std::vector<Morphism>& entries,
                                     const ColorSet& K, ColorOrder order) {
  const int n = static_cast<int>(K.size());
  if (static_cast<int>(entries.size()) != n)
    throw DomainError("box_window: need exactly |K| leading entries");
  std::vector<int> b(g.k(), 0), c(g.k(), 0);
  for (int i = 1; i <= n; ++i) {
    const Degree& d = entries[i - 1].degree();
    if (order == ColorOrder::Forward) {
      const int kc = K[i - 1];  // i-th smallest
      for (int j = kc; j <= g.k(); ++j) {
        if (j > kc) b[j - 1] += d.at(j);
        c[j - 1] += d.at(j);
      }
    } else {
      const int kc = K[n - i];  // i-th largest
      for (int j = 1; j <= kc; ++j) {
        if (j < kc) b[j - 1] += d.at(j);
        c[j - 1] += d.at(j);
      }
    }
  }
  return {Degree(std::move(b)), Degree(std::move(c))};
}

CubeTail box_hat(const KGraph& g, const ComposableTuple& t, const ColorSet& K,
                 ColorOrder order) {
  const int n = static_cast<int>(K.size());
  if (t.length() != n + 1) throw DomainError("box_hat: tuple length must be |K| + 1");
  std::vector<Morphism> leading(t.entries().begin(), t.entries().end() - 1);
  auto [b, c] = box_window(g, leading, K, order);
  Morphism lambda = t.entry(0);
  for (int i = 1; i < t.length(); ++i) lambda = g.compose(lambda, t.entry(i));
  return {g.segment(lambda, b, c), g.segment(lambda, c, lambda.degree())};
}

CubeTailChain cubulate(const KGraph& g, const ComposableTuple& t, const ColorSet& K,
                       ColorOrder order) {
  CubeTail hat = box_hat(g, t, K, order);
  return rectangular_chain_tailed(g, hat.first, hat.second, K);
}

CubeTailChain cubulate(const KGraph& g, const ComposableTuple& t, ColorOrder order) {
  const int n = t.length() - 1;
  if (n < 0) throw DomainError("cubulate: tuple must have length >= 1");
  CubeTailChain out;
  for (const ColorSet& K : color_subsets(g.k(), n)) out += cubulate(g, t, K, order);
  return out;
}

CubeTailChain cubulate(const KGraph& g, const TupleChain& chain, ColorOrder order) {
  CubeTailChain out;
  for (const auto& [t, c] : chain.terms()) {
    CubeTailChain piece = cubulate(g, t, order);
    piece *= c;
    out += piece;
  }
  return out;
}

// --- shared face rectangles -------------------------------------------------------------

int xi_level(const ColorSet& J, int q) {
  int m = 0;
  for (int color : J)
    if (color <= q) ++m;
  return m;
}

CubeTail xi_hat(const KGraph& g, const ComposableTuple& t, const ColorSet& J, int q) {
  const int n = t.length() - 1;
  if (static_cast<int>(J.size()) != n - 1)
    throw DomainError("xi_hat: J must have size (tuple length - 2)");
  if (q < 0 || q > g.k()) throw DomainError("xi_hat: q out of range");
  const int m = xi_level(J, q);

  std::vector<int> br(g.k(), 0), bs(g.k(), 0);
  auto add_tail_of = [&](const Degree& d, int from_color, bool include_from,
                         std::vector<int>& acc) {
    for (int j = from_color + (include_from ? 0 : 1); j <= g.k(); ++j) acc[j - 1] += d.at(j);
  };
  for (int i = 1; i <= m; ++i) {
    const Degree& d = t.entry(i - 1).degree();
    add_tail_of(d, J[i - 1], false, br);
    add_tail_of(d, J[i - 1], true, bs);
  }
  {
    const Degree& d = t.entry(m).degree();
    add_tail_of(d, q, false, br);
    add_tail_of(d, q, false, bs);
  }
  for (int i = m + 1; i <= n - 1; ++i) {
    const Degree& d = t.entry(i).degree();
    add_tail_of(d, J[i - 1], false, br);
    add_tail_of(d, J[i - 1], true, bs);
  }

  Morphism lambda = t.entry(0);
  for (int i = 1; i < t.length(); ++i) lambda = g.compose(lambda, t.entry(i));
  Degree range_mark(br), source_mark(bs);
  return {g.segment(lambda, range_mark, source_mark),
          g.segment(lambda, source_mark, lambda.degree())};
}

CubeTailChain xi(const KGraph& g, const ComposableTuple& t, const ColorSet& J, int q) {
  CubeTail hat = xi_hat(g, t, J, q);
  return rectangular_chain_tailed(g, hat.first, hat.second, J);
}

// --- verification --------------------------------------------------------------------------

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

std::string describe_pair(const KGraph& g, const CubeTail& p) {
  return "(" + g.describe(p.first) + ", " + g.describe(p.second) + ")";
}

std::string describe_tuple(const KGraph& g, const ComposableTuple& t) {
  if (t.empty()) return "(" + g.vertex_ids()[t.range_vertex(g)] + ")";
  std::string s = "(";
  for (int i = 0; i < t.length(); ++i) {
    if (i) s += ", ";
    s += g.describe(t.entry(i));
  }
  return s + ")";
}

std::vector<Morphism> all_cubes(const KGraph& g) {
  std::vector<Morphism> out;
  for (int n = 0; n <= g.k(); ++n) {
    auto qn = g.cubes(n);
    out.insert(out.end(), qn.begin(), qn.end());
  }
  return out;
}

}  // namespace

VerifyReport verify_chain_map_identities(const KGraph& g, const Degree& bound,
                                         int max_tuple_length) {
  if (!g.validated()) throw DomainError("verify: graph has not been validated");
  if (max_tuple_length < 0) max_tuple_length = g.k() + 1;
  VerifyReport report;
  report.bound = bound;
  report.tuple_length_bound = max_tuple_length;

  std::vector<Morphism> cubes = all_cubes(g);
  std::vector<std::vector<ComposableTuple>> tuples_by_length(max_tuple_length + 1);
  for (int len = 1; len <= max_tuple_length; ++len)
    tuples_by_length[len] = tuples_up_to(g, len, bound).tuples;

  // (i) triangulation is a chain map: del^P . triangulate = triangulate . del
  {
    CheckReport check;
    check.check = "triangulation-chain-map";
    for (const Morphism& eta : cubes) {
      if (eta.degree().total() == 0) continue;
      ++check.generators_tested;
      Morphism id = g.identity(g.source(eta));
      TupleChain lhs = triangulate(g, boundary_with_tail(g, eta, id));
      TupleChain rhs = tuple_boundary(g, triangulate(g, eta, id));
      if (!(lhs == rhs)) {
        check.pass = false;
        check.first_witness = g.describe(eta);
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }

  // (ii) cubulation is a chain map: del . cubulate = cubulate . del^P
  {
    CheckReport check;
    check.check = "cubulation-chain-map";
    for (int len = 2; len <= max_tuple_length && check.pass; ++len) {
      for (const ComposableTuple& t : tuples_by_length[len]) {
        ++check.generators_tested;
        CubeTailChain lhs = boundary_with_tail(g, cubulate(g, t));
        CubeTailChain rhs = cubulate(g, tuple_boundary(g, t));
        if (!(lhs == rhs)) {
          check.pass = false;
          check.first_witness = describe_tuple(g, t);
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  // (iii) cubulate . triangulate = id on every tailed cube
  {
    CheckReport check;
    check.check = "round-trip-identity";
    for (const Morphism& eta : cubes) {
      ++check.generators_tested;
      Morphism id = g.identity(g.source(eta));
      CubeTailChain image = cubulate(g, triangulate(g, eta, id));
      CubeTailChain expected;
      expected.add({eta, id}, 1);
      if (!(image == expected)) {
        check.pass = false;
        check.first_witness = g.describe(eta);
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }

  // (iv) face rectangles: every face of a box is a shared rectangle, and the
  // end cases q = 0, k reproduce the boxes of the two outer boundary terms.
  {
    CheckReport check;
    check.check = "face-rectangles";
    for (int len = 2; len <= max_tuple_length && check.pass; ++len) {
      const int n = len - 1;
      if (n > g.k()) break;
      auto subsets = color_subsets(g.k(), n);
      auto smaller = color_subsets(g.k(), n - 1);
      for (const ComposableTuple& t : tuples_by_length[len]) {
        bool ok = true;
        for (const ColorSet& K : subsets) {
          CubeTail box = box_hat(g, t, K);
          for (int l = 1; l <= n && ok; ++l) {
            ColorSet J;
            for (int c : K)
              if (c != K[l - 1]) J.push_back(c);
            for (int eps = 0; eps <= 1 && ok; ++eps) {
              CubeTail lhs = pair_face(g, box, K, l, eps);
              CubeTail rhs = xi_hat(g, t, J, K[l - 1] - eps);
              ok = lhs == rhs;
            }
          }
          if (!ok) break;
        }
        for (const ColorSet& J : smaller) {
          if (!ok) break;
          ok = xi_hat(g, t, J, 0) == box_hat(g, t.dropped_first(g), J);
          if (!ok) break;
          ComposableTuple merged_last = t.merged(g, t.length() - 2);
          ok = xi_hat(g, t, J, g.k()) == box_hat(g, merged_last, J);
        }
        ++check.generators_tested;
        if (!ok) {
          check.pass = false;
          check.first_witness = describe_tuple(g, t);
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  // (v) rectangle addition: merging an inner pair matches the two adjacent
  // shared rectangles.
  {
    CheckReport check;
    check.check = "rectangle-addition";
    for (int len = 3; len <= max_tuple_length && check.pass; ++len) {
      const int n = len - 1;
      if (n - 1 > g.k()) break;
      auto smaller = color_subsets(g.k(), n - 1);
      for (const ComposableTuple& t : tuples_by_length[len]) {
        bool ok = true;
        for (const ColorSet& J : smaller) {
          for (int l = 1; l <= n - 1 && ok; ++l) {
            CubeTailChain lhs = cubulate(g, t.merged(g, l - 1), J, ColorOrder::Forward);
            CubeTailChain rhs = xi(g, t, J, J[l - 1] - 1) + xi(g, t, J, J[l - 1]);
            ok = lhs == rhs;
          }
          if (!ok) break;
        }
        ++check.generators_tested;
        if (!ok) {
          check.pass = false;
          check.first_witness = describe_tuple(g, t);
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  // (vi) rectangular boundary expansion, including the degenerate case.
  {
    CheckReport check;
    check.check = "rectangular-boundary";
    std::vector<Morphism> morphisms = g.morphisms_up_to(bound).morphisms;
    for (const Morphism& lambda : morphisms) {
      if (!check.pass) break;
      ColorSet c_type = g.color_type(lambda);
      for (int n = static_cast<int>(c_type.size()); n <= g.k() && check.pass; ++n) {
        for (const ColorSet& K : color_subsets(g.k(), n)) {
          if (!std::includes(K.begin(), K.end(), c_type.begin(), c_type.end())) continue;
          ++check.generators_tested;
          FormalSum<Morphism> rect = rectangular_chain(g, lambda, K);
          if (static_cast<int>(c_type.size()) < n && !rect.is_zero()) {
            check.pass = false;
            check.first_witness = g.describe(lambda) + " (degenerate)";
            break;
          }
          FormalSum<Morphism> lhs = cube_boundary(g, rect);
          FormalSum<Morphism> rhs;
          for (int j = 1; j <= n; ++j) {
            RectangularFaces faces = rect_faces(g, lambda, K, j);
            ColorSet J;
            for (int c : K)
              if (c != K[j - 1]) J.push_back(c);
            const Int sign = (j % 2 == 0) ? 1 : -1;
            FormalSum<Morphism> front = rectangular_chain(g, faces.front, J);
            front *= sign;
            FormalSum<Morphism> back = rectangular_chain(g, faces.back, J);
            back *= -sign;
            rhs += front;
            rhs += back;
          }
          if (!(lhs == rhs)) {
            check.pass = false;
            check.first_witness = g.describe(lambda);
            break;
          }
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  return report;
}

VerifyReport verify_naturality(const KGraphMorphism& phi, const Degree& bound,
                               int max_tuple_length) {
  const KGraph& dom = phi.domain();
  const KGraph& cod = phi.codomain();
  if (!dom.validated() || !cod.validated())
    throw DomainError("verify_naturality: graphs must be validated");
  if (max_tuple_length < 0) max_tuple_length = dom.k() + 1;
  VerifyReport report;
  report.bound = bound;
  report.tuple_length_bound = max_tuple_length;

  auto map_tuple = [&](const ComposableTuple& t) {
    if (t.empty())
      return ComposableTuple::at_vertex(phi.apply_vertex(t.range_vertex(dom)));
    std::vector<Morphism> entries;
    entries.reserve(t.length());
    for (const Morphism& m : t.entries()) entries.push_back(phi.apply(m));
    return ComposableTuple::of(cod, std::move(entries));
  };
  auto map_tuple_chain = [&](const TupleChain& chain) {
    TupleChain out;
    for (const auto& [t, c] : chain.terms()) out.add(map_tuple(t), c);
    return out;
  };
  auto map_pair_chain = [&](const CubeTailChain& chain) {
    CubeTailChain out;
    for (const auto& [p, c] : chain.terms())
      out.add({phi.apply(p.first), phi.apply(p.second)}, c);
    return out;
  };

  std::vector<Morphism> tails = dom.morphisms_up_to(bound).morphisms;
  std::map<int, std::vector<const Morphism*>> tails_by_range;
  for (const Morphism& m : tails) tails_by_range[m.anchor()].push_back(&m);

  {
    CheckReport check;
    check.check = "triangulation-naturality";
    for (const Morphism& eta : all_cubes(dom)) {
      if (!check.pass) break;
      auto it = tails_by_range.find(dom.source(eta));
      if (it == tails_by_range.end()) continue;
      for (const Morphism* mu : it->second) {
        ++check.generators_tested;
        TupleChain lhs = map_tuple_chain(triangulate(dom, eta, *mu));
        TupleChain rhs = triangulate(cod, phi.apply(eta), phi.apply(*mu));
        if (!(lhs == rhs)) {
          check.pass = false;
          check.first_witness = describe_pair(dom, {eta, *mu});
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    CheckReport check;
    check.check = "cubulation-naturality";
    for (int len = 1; len <= max_tuple_length && check.pass; ++len) {
      for (const ComposableTuple& t : tuples_up_to(dom, len, bound).tuples) {
        ++check.generators_tested;
        CubeTailChain lhs = map_pair_chain(cubulate(dom, t));
        CubeTailChain rhs = cubulate(cod, map_tuple(t));
        if (!(lhs == rhs)) {
          check.pass = false;
          check.first_witness = describe_tuple(dom, t);
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  return report;
}

}  // namespace khom
