#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "khom/chain_maps.hpp"
#include "khom/kgraph.hpp"

using namespace khom;

namespace {

Degree deg(std::vector<int> v) { return Degree(std::move(v)); }

CubeTailChain singleton_pair(const Morphism& eta, const Morphism& mu, Int c = 1) {
  CubeTailChain out;
  out.add({eta, mu}, c);
  return out;
}

// Complete and involutive square table whose third-color swaps do not
// satisfy hexagon coherence: passing g past e applies (g1 g2), passing it
// past f applies (g2 g3), and the two do not commute.
KGraph twisted_three_graph() {
  GraphData data;
  data.k = 3;
  data.vertices = {"v"};
  data.edges = {{"e", 1, "v", "v"},
                {"f", 2, "v", "v"},
                {"g1", 3, "v", "v"},
                {"g2", 3, "v", "v"},
                {"g3", 3, "v", "v"}};
  data.squares = {{{"e", "f"}, {"f", "e"}},    {{"e", "g1"}, {"g2", "e"}},
                  {{"e", "g2"}, {"g1", "e"}},  {{"e", "g3"}, {"g3", "e"}},
                  {{"f", "g1"}, {"g1", "f"}},  {{"f", "g2"}, {"g3", "f"}},
                  {{"f", "g3"}, {"g2", "f"}}};
  return KGraph(data);
}

}  // namespace

TEST_CASE("symmetric group enumeration") {
  CHECK(symmetric_group(1).size() == 1);
  CHECK(symmetric_group(3).size() == 6);
  CHECK(symmetric_group(4).size() == 24);
  // sign is multiplicative under composition
  auto s3 = symmetric_group(3);
  for (const auto& a : s3) {
    for (const auto& b : s3) {
      std::vector<int> ab(3);
      for (int i = 0; i < 3; ++i) ab[i] = a.image[b.image[i] - 1];
      CHECK(permutation_sign(ab) == a.sign * b.sign);
    }
  }
  CHECK(adjacent_transposition(3, 1).sign == -1);
  // the cycle (j, j+1, ..., n) has sign (-1)^(n-j)
  for (int n = 2; n <= 4; ++n)
    for (int j = 1; j <= n; ++j) CHECK(tail_cycle(n, j).sign == ((n - j) % 2 ? -1 : 1));
}

TEST_CASE("triangulation of the basic generators") {
  KGraph g = torus2();
  Morphism e = g.morphism_from_edges({"e"});
  Morphism f = g.morphism_from_edges({"f"});
  Morphism ef = g.morphism_from_edges({"e", "f"});
  Morphism id = g.identity("v");

  TupleChain edge_case = triangulate(g, e, id);
  TupleChain expected_edge;
  expected_edge.add(ComposableTuple::of(g, {e, id}), 1);
  CHECK(edge_case == expected_edge);

  TupleChain square_case = triangulate(g, ef, id);
  TupleChain expected_square;
  expected_square.add(ComposableTuple::of(g, {e, f, id}), 1);
  expected_square.add(ComposableTuple::of(g, {f, e, id}), -1);
  CHECK(square_case == expected_square);

  TupleChain vertex_case = triangulate(g, g.identity("v"), id);
  TupleChain expected_vertex;
  expected_vertex.add(ComposableTuple::of(g, {id}), 1);
  CHECK(vertex_case == expected_vertex);
}

TEST_CASE("cubulation of the basic generators") {
  KGraph g = torus2();
  Morphism e = g.morphism_from_edges({"e"});
  Morphism f = g.morphism_from_edges({"f"});
  Morphism ef = g.morphism_from_edges({"e", "f"});
  Morphism id = g.identity("v");

  // length-1 tuples: (r(lambda), lambda)
  CHECK(cubulate(g, ComposableTuple::of(g, {ef})) == singleton_pair(g.identity("v"), ef));

  // the 2-tuple (ef, id) splits into a staircase over K = {1} and {2}
  CubeTailChain expected;
  expected.add({e, id}, 1);
  expected.add({f, e}, 1);
  CHECK(cubulate(g, ComposableTuple::of(g, {ef, id})) == expected);

  // tuples longer than k+1 cubulate to zero
  ComposableTuple too_long = ComposableTuple::of(g, {e, f, id, id});
  CHECK(cubulate(g, too_long).is_zero());
}

TEST_CASE("rectangular chains subdivide hyper-rectangles") {
  KGraph g = omega(2, deg({2, 1}));
  // the full corner-to-corner morphism of degree (2,1)
  Morphism lambda = g.morphisms_of_degree(deg({2, 1})).at(0);
  FormalSum<Morphism> rect = rectangular_chain(g, lambda, {1, 2});
  CHECK(rect.size() == 2);
  for (const auto& [cube, c] : rect.terms()) {
    CHECK(c == 1);
    CHECK(cube.degree() == deg({1, 1}));
  }
  // a single cube of shape K is its own chain
  Morphism unit = g.cubes(2).at(0);
  FormalSum<Morphism> single = rectangular_chain(g, unit, {1, 2});
  CHECK(single.size() == 1);
  CHECK(single.coefficient(unit) == 1);
  // degenerate shape
  Morphism edge = g.cubes(1).at(0);
  CHECK(rectangular_chain(g, edge, {1, 2}).is_zero());
}

TEST_CASE("rectangular faces agree with cube faces on unit cubes") {
  KGraph g = torus2();
  Morphism ef = g.morphism_from_edges({"e", "f"});
  for (int j = 1; j <= 2; ++j) {
    RectangularFaces rf = rect_faces(g, ef, {1, 2}, j);
    CHECK(rf.front == g.face(ef, j, 0));
    CHECK(rf.back == g.face(ef, j, 1));
    CHECK(rf.front_tail == g.face_companion_s(ef, j));
    CHECK(rf.back_head == g.face_companion_r(ef, j));
  }
}

TEST_CASE("rectangular faces against the segment definition") {
  KGraph g = omega(2, deg({2, 1}));
  Morphism lambda = g.morphisms_of_degree(deg({2, 1})).at(0);
  const Degree& d = lambda.degree();
  RectangularFaces rf = rect_faces(g, lambda, {1, 2}, 1);
  CHECK(rf.front == g.segment(lambda, Degree::zero(2), deg({0, 1})));  // d - 2 e_1
  CHECK(rf.front_tail == g.segment(lambda, deg({0, 1}), d));
  CHECK(rf.back == g.segment(lambda, deg({2, 0}), d));
  CHECK(rf.back_head == g.segment(lambda, Degree::zero(2), deg({2, 0})));
  CHECK(g.compose(rf.front, rf.front_tail) == lambda);
  CHECK(g.compose(rf.back_head, rf.back) == lambda);
}

TEST_CASE("rectangles glue along common faces") {
  KGraph g = omega(2, deg({2, 2}));
  const ColorSet K{1, 2};
  std::vector<Morphism> rectangles;
  for (const Morphism& m : g.morphisms_up_to(deg({2, 2})).morphisms)
    if (g.color_type(m) == K) rectangles.push_back(m);
  long glued = 0;
  for (const Morphism& a : rectangles) {
    for (const Morphism& b : rectangles) {
      for (int j = 1; j <= 2; ++j) {
        RectangularFaces fa = rect_faces(g, a, K, j);
        RectangularFaces fb = rect_faces(g, b, K, j);
        if (!(fa.back == fb.front)) continue;
        if (a.degree().at(K[j - 1]) != b.degree().at(K[j - 1])) continue;
        Morphism left = g.compose(a, fb.front_tail);
        Morphism right = g.compose(fa.back_head, b);
        CHECK(left == right);
        FormalSum<Morphism> sum = rectangular_chain(g, a, K);
        sum += rectangular_chain(g, b, K);
        CHECK(sum == rectangular_chain(g, left, K));
        ++glued;
      }
    }
  }
  CHECK(glued > 0);
}

TEST_CASE("staircase level bookkeeping") {
  // k = 3, J = {1,3}
  CHECK(xi_level({1, 3}, 0) == 0);
  CHECK(xi_level({1, 3}, 1) == 1);
  CHECK(xi_level({1, 3}, 2) == 1);
  CHECK(xi_level({1, 3}, 3) == 2);
}

TEST_CASE("end cases of the shared rectangles reproduce boxes") {
  KGraph g = omega(3, deg({1, 1, 1}));
  for (const ComposableTuple& t : tuples_up_to(g, 3, deg({1, 1, 1})).tuples) {
    for (const ColorSet& J : color_subsets(3, 1)) {
      CHECK(xi_hat(g, t, J, 0) == box_hat(g, t.dropped_first(g), J));
      CHECK(xi_hat(g, t, J, 3) == box_hat(g, t.merged(g, t.length() - 2), J));
    }
  }
}

TEST_CASE("identity suite passes on the torus") {
  KGraph g = torus2();
  VerifyReport rep = verify_chain_map_identities(g, deg({2, 2}));
  CHECK(rep.all_pass());
  for (const auto& check : rep.checks) {
    CAPTURE(check.check);
    CHECK(check.generators_tested > 0);
  }
}

TEST_CASE("identity suite passes on omega(3,(1,1,1)) including 3-tuples") {
  KGraph g = omega(3, deg({1, 1, 1}));
  VerifyReport rep = verify_chain_map_identities(g, deg({1, 1, 1}));
  CHECK(rep.all_pass());
  // tuples of length 4 were really exercised
  for (const auto& check : rep.checks)
    if (check.check == "cubulation-chain-map") CHECK(check.generators_tested > 200);
}

TEST_CASE("round trip holds on every cube of every builder graph") {
  for (KGraph g : {torus2(), fig8(), single_loop(), omega(2, deg({2, 2}))}) {
    for (int n = 0; n <= g.k(); ++n) {
      for (const Morphism& eta : g.cubes(n)) {
        Morphism id = g.identity(g.source(eta));
        CHECK(cubulate(g, triangulate(g, eta, id)) == singleton_pair(eta, id));
      }
    }
  }
}

TEST_CASE("the twisted square table breaks the chain-map identities") {
  KGraph g = twisted_three_graph();
  ValidationReport rep = g.validate(deg({1, 1, 1}));
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.issues.empty());
  CHECK(rep.issues[0].check == "V3");

  g.assume_validated();
  VerifyReport vr = verify_chain_map_identities(g, deg({1, 1, 1}));
  CHECK_FALSE(vr.all_pass());
  for (const auto& check : vr.checks) {
    if (check.check == "cubulation-chain-map") {
      CHECK_FALSE(check.pass);
      CHECK_FALSE(check.first_witness.empty());
    }
    if (check.check == "triangulation-chain-map") CHECK_FALSE(check.pass);
  }
}

TEST_CASE("naturality under the fig8 collapse") {
  KGraph dom = fig8();
  KGraph cod = single_loop();
  KGraphMorphism phi(dom, cod, {{"v", "v"}}, {{"a", "e"}, {"b", "e"}});
  VerifyReport rep = verify_naturality(phi, deg({2}));
  CHECK(rep.all_pass());
  for (const auto& check : rep.checks) CHECK(check.generators_tested > 0);
}

TEST_CASE("naturality under the identity functor") {
  KGraph g = torus2();
  KGraphMorphism ident(g, g, {{"v", "v"}}, {{"e", "e"}, {"f", "f"}});
  CHECK(verify_naturality(ident, deg({2, 2})).all_pass());
}

TEST_CASE("naturality under the grid collapse onto the torus") {
  KGraph dom = omega(2, deg({1, 1}));
  KGraph cod = torus2();
  std::map<std::string, std::string> vmap, emap;
  for (const auto& v : dom.vertex_ids()) vmap[v] = "v";
  for (const Edge& e : dom.edges()) emap[e.id] = e.color == 1 ? "e" : "f";
  KGraphMorphism phi(dom, cod, vmap, emap);
  CHECK(verify_naturality(phi, deg({1, 1})).all_pass());
}

TEST_CASE("identity suite passes on the rank-3 torus") {
  // one vertex, one edge per color, all squares commuting; infinite category
  // with nontrivial rectangles in every color pair
  GraphData data;
  data.k = 3;
  data.vertices = {"v"};
  data.edges = {{"e", 1, "v", "v"}, {"f", 2, "v", "v"}, {"g", 3, "v", "v"}};
  data.squares = {{{"e", "f"}, {"f", "e"}},
                  {{"e", "g"}, {"g", "e"}},
                  {{"f", "g"}, {"g", "f"}}};
  KGraph g(data);
  REQUIRE(g.validate().passed);
  VerifyReport rep = verify_chain_map_identities(g, deg({1, 1, 2}));
  CHECK(rep.all_pass());
  for (const auto& check : rep.checks) {
    CAPTURE(check.check);
    CHECK(check.generators_tested > 0);
  }
}

TEST_CASE("identity suite passes on the two-vertex cylinder") {
  // an interval in color 1, a loop at each end in color 2
  GraphData data;
  data.k = 2;
  data.vertices = {"u", "w"};
  data.edges = {{"a", 1, "u", "w"}, {"e0", 2, "u", "u"}, {"e1", 2, "w", "w"}};
  data.squares = {{{"a", "e1"}, {"e0", "a"}}};
  KGraph g(data);
  REQUIRE(g.validate().passed);
  CHECK(verify_chain_map_identities(g, deg({2, 2})).all_pass());
}

TEST_CASE("identity suite passes at rank 4") {
  KGraph g = omega(4, deg({1, 1, 1, 1}));
  VerifyReport rep = verify_chain_map_identities(g, deg({1, 1, 1, 1}));
  CHECK(rep.all_pass());
  for (const auto& check : rep.checks)
    if (check.check == "cubulation-chain-map") CHECK(check.generators_tested > 4000);
}

TEST_CASE("degenerate rectangles vanish") {
  KGraph g = omega(2, deg({2, 2}));
  for (const Morphism& m : g.morphisms_up_to(deg({2, 2})).morphisms) {
    ColorSet c = g.color_type(m);
    for (int n = static_cast<int>(c.size()) + 1; n <= g.k(); ++n) {
      for (const ColorSet& K : color_subsets(g.k(), n)) {
        if (!std::includes(K.begin(), K.end(), c.begin(), c.end())) continue;
        CHECK(rectangular_chain(g, m, K).is_zero());
      }
    }
  }
}
