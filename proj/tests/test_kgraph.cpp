#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "khom/json_io.hpp"
#include "khom/kgraph.hpp"

using namespace khom;

namespace {

const char* kTorusDoc = R"({
  "k": 2,
  "vertices": ["v"],
  "edges": [
    {"id": "e", "color": 1, "range": "v", "source": "v"},
    {"id": "f", "color": 2, "range": "v", "source": "v"}
  ],
  "squares": [{"lhs": ["e", "f"], "rhs": ["f", "e"]}]
})";

Degree deg(std::vector<int> v) { return Degree(std::move(v)); }

struct NamedGraph {
  std::string name;
  KGraph graph;
  Degree bound;
};

std::vector<NamedGraph> property_graphs() {
  std::vector<NamedGraph> out;
  out.push_back({"torus2", torus2(), deg({2, 2})});
  out.push_back({"omega(2,(1,1))", omega(2, deg({1, 1})), deg({2, 2})});
  out.push_back({"omega(2,(2,2))", omega(2, deg({2, 2})), deg({2, 2})});
  out.push_back({"fig8", fig8(), deg({2})});
  out.push_back({"omega(3,(1,1,1))", omega(3, deg({1, 1, 1})), deg({1, 1, 1})});
  return out;
}

}  // namespace

TEST_CASE("loading a single-vertex one-loop document") {
  KGraph g = load_graph(R"({"k":1,"vertices":["v"],
    "edges":[{"id":"e","color":1,"range":"v","source":"v"}],"squares":[]})");
  CHECK(g.k() == 1);
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 1);
  CHECK(g.validate().passed);
}

TEST_CASE("loading the torus document") {
  KGraph g = load_graph(kTorusDoc);
  CHECK(g.k() == 2);
  CHECK(g.validate().passed);
}

TEST_CASE("schema violations are rejected at load") {
  // color out of range
  CHECK_THROWS_AS(load_graph(R"({"k":2,"vertices":["v"],
    "edges":[{"id":"e","color":3,"range":"v","source":"v"}],"squares":[]})"),
                  SchemaError);
  // dangling vertex reference
  CHECK_THROWS_AS(load_graph(R"({"k":1,"vertices":["v"],
    "edges":[{"id":"e","color":1,"range":"v","source":"w"}],"squares":[]})"),
                  SchemaError);
  // duplicate ids
  CHECK_THROWS_AS(load_graph(R"({"k":1,"vertices":["v","v"],"edges":[],"squares":[]})"),
                  SchemaError);
  CHECK_THROWS_AS(load_graph(R"({"k":1,"vertices":["v"],
    "edges":[{"id":"e","color":1,"range":"v","source":"v"},
             {"id":"e","color":1,"range":"v","source":"v"}],"squares":[]})"),
                  SchemaError);
  // duplicate square side
  CHECK_THROWS_AS(load_graph(R"({"k":2,"vertices":["v"],
    "edges":[{"id":"e","color":1,"range":"v","source":"v"},
             {"id":"f","color":2,"range":"v","source":"v"},
             {"id":"f2","color":2,"range":"v","source":"v"}],
    "squares":[{"lhs":["e","f"],"rhs":["f","e"]},
               {"lhs":["e","f"],"rhs":["f2","e"]}]})"),
                  SchemaError);
  // not valid JSON at all
  CHECK_THROWS_AS(load_graph("{"), SchemaError);
}

TEST_CASE("validation reports a missing square with a witness") {
  KGraph g = load_graph(R"({
    "k": 2, "vertices": ["v"],
    "edges": [{"id":"e","color":1,"range":"v","source":"v"},
              {"id":"f","color":2,"range":"v","source":"v"}],
    "squares": []})");
  ValidationReport rep = g.validate();
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.issues.empty());
  CHECK(rep.issues[0].check == "V1");
  CHECK(rep.issues[0].witness == "[e,f]");
  CHECK_FALSE(g.validated());
}

TEST_CASE("omega(3,(1,1,1)) validates including hexagon coherence") {
  KGraph g = omega(3, deg({1, 1, 1}));
  CHECK(g.validated());
  // the unique (1,1,1)-cube at the origin has one representative word per
  // color order, and every representative normalizes to the same word
  Morphism cube = g.morphisms_of_degree(deg({1, 1, 1})).at(0);
  auto words = g.representative_words(cube);
  CHECK(words.size() == 6);
  for (const auto& w : words)
    CHECK(g.normalize_word(w, NormalizationStrategy::LeftmostInversion) == cube.word());
}

TEST_CASE("compose: identity law and degree additivity") {
  KGraph g = torus2();
  Morphism e = g.morphism_from_edges({"e"});
  Morphism id = g.identity("v");
  CHECK(g.compose(id, e) == e);
  CHECK(g.compose(e, id) == e);
  Morphism ef = g.compose(e, g.morphism_from_edges({"f"}));
  CHECK(ef.degree() == deg({1, 1}));
}

TEST_CASE("compose in the poset graph") {
  KGraph g = omega(2, deg({1, 1}));
  // (0, e1) then (e1, e1+e2)
  Morphism first = g.morphism_from_edges({"e1_0_0"});
  Morphism second = g.morphism_from_edges({"e2_1_0"});
  Morphism expected = g.morphism_from_edges({"e1_0_0", "e2_1_0"});
  CHECK(g.compose(first, second) == expected);
  CHECK_THROWS_AS(g.compose(second, first), DomainError);
}

TEST_CASE("torus words normalize through the single square") {
  KGraph g = torus2();
  CHECK(g.morphism_from_edges({"f", "e"}) == g.morphism_from_edges({"e", "f"}));
}

TEST_CASE("segments in omega(1,2)") {
  KGraph g = omega(1, deg({2}));
  Morphism whole = g.morphism_from_edges({"e1_0", "e1_1"});  // (0,2)
  Morphism tail = g.segment(whole, deg({1}), deg({2}));
  CHECK(tail == g.morphism_from_edges({"e1_1"}));
  CHECK(g.segment(whole, deg({0}), deg({2})) == whole);
  CHECK(g.segment(whole, deg({0}), deg({0})) == g.identity("v0"));
  CHECK(g.segment(whole, deg({2}), deg({2})) == g.identity("v2"));
}

TEST_CASE("segments on the torus 2-cube") {
  KGraph g = torus2();
  Morphism ef = g.morphism_from_edges({"e", "f"});
  CHECK(g.segment(ef, deg({0, 1}), deg({1, 1})) == g.morphism_from_edges({"e"}));
  CHECK(g.segment(ef, deg({0, 0}), deg({0, 1})) == g.morphism_from_edges({"f"}));
  CHECK(g.segment(ef, deg({0, 0}), deg({1, 1})) == ef);
  CHECK_THROWS_AS(g.segment(ef, deg({1, 0}), deg({0, 1})), DomainError);
  CHECK_THROWS_AS(g.segment(ef, deg({0, 0}), deg({2, 1})), DomainError);
}

TEST_CASE("unique factorization: split-and-compose over all bounded morphisms") {
  for (const auto& [name, g, bound] : property_graphs()) {
    CAPTURE(name);
    for (const Morphism& lambda : g.morphisms_up_to(bound).morphisms) {
      for_each_lattice_point(Degree::zero(g.k()), lambda.degree(), [&](const Degree& m) {
        Morphism head = g.segment(lambda, Degree::zero(g.k()), m);
        Morphism tail = g.segment(lambda, m, lambda.degree());
        CHECK(g.compose(head, tail) == lambda);
        CHECK(head.degree() == m);
      });
    }
  }
}

TEST_CASE("unique factorization: every representative word yields the same prefix") {
  for (const auto& [name, g, bound] : property_graphs()) {
    CAPTURE(name);
    for (const Morphism& lambda : g.morphisms_up_to(bound).morphisms) {
      if (lambda.degree().total() > 3) continue;  // keep the orbit walk small
      auto words = g.representative_words(lambda);
      for_each_lattice_point(Degree::zero(g.k()), lambda.degree(), [&](const Degree& m) {
        if (m.is_zero()) return;
        Morphism expected = g.segment(lambda, Degree::zero(g.k()), m);
        const int len = m.total();
        for (const auto& w : words) {
          std::vector<int> prefix(w.begin(), w.begin() + len);
          // only prefixes realizing the degree vector m are factorizations
          std::vector<int> counts(g.k(), 0);
          for (int e : prefix) ++counts[g.edges()[e].color - 1];
          if (Degree(counts) != m) continue;
          CHECK(g.morphism_from_edge_indices(prefix) == expected);
        }
      });
    }
  }
}

TEST_CASE("color type") {
  KGraph g = omega(3, deg({1, 1, 1}));
  CHECK(g.color_type(g.identity("v0_0_0")).empty());
  Morphism e2 = g.morphism_from_edges({"e2_0_0_0"});
  CHECK(g.color_type(e2) == ColorSet{2});
  KGraph t = torus2();
  CHECK(t.color_type(t.morphism_from_edges({"e", "f"})) == ColorSet{1, 2});
}

TEST_CASE("morphism enumeration counts") {
  KGraph t = torus2();
  CHECK(t.morphisms_of_degree(deg({1, 1})).size() == 1);
  KGraph f8 = fig8();
  CHECK(f8.morphisms_of_degree(deg({2})).size() == 4);
  KGraph o = omega(2, deg({1, 1}));
  CHECK(o.morphisms_of_degree(deg({1, 1})).size() == 1);
}

TEST_CASE("enumeration is independent of the color order") {
  for (const auto& [name, g, bound] : property_graphs()) {
    CAPTURE(name);
    std::vector<int> reversed(g.k());
    for (int i = 0; i < g.k(); ++i) reversed[i] = g.k() - i;
    for_each_lattice_point(Degree::zero(g.k()), bound, [&](const Degree& n) {
      auto forward = g.morphisms_of_degree(n);
      auto backward = g.morphisms_of_degree(n, reversed);
      std::sort(forward.begin(), forward.end());
      std::sort(backward.begin(), backward.end());
      CHECK(forward == backward);
    });
  }
}

TEST_CASE("cube enumeration") {
  KGraph t = torus2();
  CHECK(t.cubes(0).size() == 1);
  CHECK(t.cubes(1).size() == 2);
  CHECK(t.cubes(2).size() == 1);
  CHECK(t.cubes(3).empty());
  CHECK(t.cubes(-1).empty());
  KGraph f8 = fig8();
  CHECK(f8.cubes(1).size() == 2);
  CHECK(f8.cubes(2).empty());
  KGraph o = omega(2, deg({2, 2}));
  CHECK(o.cubes(2).size() == 4);
}

TEST_CASE("faces of a torus 2-cube") {
  KGraph g = torus2();
  Morphism ef = g.morphism_from_edges({"e", "f"});
  Morphism e = g.morphism_from_edges({"e"});
  Morphism f = g.morphism_from_edges({"f"});
  CHECK(g.face(ef, 1, 0) == f);
  CHECK(g.face(ef, 1, 1) == f);
  CHECK(g.face(ef, 2, 0) == e);
  CHECK(g.face(ef, 2, 1) == e);
  // lambda = F^0_j S_j = R_j F^1_j with unit companion degrees
  for (int j = 1; j <= 2; ++j) {
    Morphism s = g.face_companion_s(ef, j);
    Morphism r = g.face_companion_r(ef, j);
    CHECK(s.degree().total() == 1);
    CHECK(r.degree().total() == 1);
    CHECK(g.compose(g.face(ef, j, 0), s) == ef);
    CHECK(g.compose(r, g.face(ef, j, 1)) == ef);
  }
}

TEST_CASE("faces of an edge are its endpoints") {
  KGraph g = omega(1, deg({2}));
  Morphism e = g.morphism_from_edges({"e1_0"});
  CHECK(g.face(e, 1, 0) == g.identity("v0"));
  CHECK(g.face(e, 1, 1) == g.identity("v1"));
  CHECK_THROWS_AS(g.face(e, 2, 0), DomainError);
}

TEST_CASE("face of the omega(2,(1,1)) square") {
  KGraph g = omega(2, deg({1, 1}));
  Morphism cube = g.morphisms_of_degree(deg({1, 1})).at(0);
  CHECK(g.face(cube, 1, 0) == g.morphism_from_edges({"e2_0_0"}));
}

TEST_CASE("builder counts") {
  KGraph o12 = omega(1, deg({2}));
  CHECK(o12.vertex_count() == 3);
  CHECK(o12.edge_count() == 2);
  auto all = o12.morphisms_up_to(deg({2}));
  CHECK_FALSE(all.saturated);
  CHECK(all.morphisms.size() == 6);

  KGraph o11 = omega(2, deg({1, 1}));
  CHECK(o11.vertex_count() == 4);
  CHECK(o11.morphisms_up_to(deg({1, 1})).morphisms.size() == 9);

  CHECK(torus2().validated());
  CHECK(fig8().validated());
  CHECK(single_loop().validated());
}

TEST_CASE("finiteness probe") {
  CHECK(omega(2, deg({2, 2})).is_finite_category(deg({3, 3})));
  std::optional<Morphism> witness;
  CHECK_FALSE(fig8().is_finite_category(deg({5}), &witness));
  REQUIRE(witness.has_value());
  CHECK(witness->degree() == deg({6}));
  CHECK_FALSE(single_loop().is_finite_category(deg({1})));
}

TEST_CASE("graph functor collapses fig8 onto the single loop") {
  KGraph dom = fig8();
  KGraph cod = single_loop();
  KGraphMorphism phi(dom, cod, {{"v", "v"}}, {{"a", "e"}, {"b", "e"}});
  Morphism ab = dom.morphism_from_edges({"a", "b"});
  CHECK(phi.apply(ab) == cod.morphism_from_edges({"e", "e"}));
  CHECK(phi.apply(dom.identity("v")) == cod.identity("v"));
  // functor law on all bounded composable pairs
  auto morphisms = dom.morphisms_up_to(deg({2})).morphisms;
  for (const Morphism& a : morphisms)
    for (const Morphism& b : morphisms) {
      if (dom.source(a) != b.anchor()) continue;
      CHECK(phi.apply(dom.compose(a, b)) == cod.compose(phi.apply(a), phi.apply(b)));
    }
}

TEST_CASE("identity functor acts as the identity") {
  KGraph g = torus2();
  KGraphMorphism ident(g, g, {{"v", "v"}}, {{"e", "e"}, {"f", "f"}});
  for (const Morphism& m : g.morphisms_up_to(deg({2, 2})).morphisms)
    CHECK(ident.apply(m) == m);
}

TEST_CASE("functor construction rejects bad data") {
  KGraph dom = fig8();
  KGraph cod = single_loop();
  // missing edge entry
  CHECK_THROWS_AS(KGraphMorphism(dom, cod, {{"v", "v"}}, {{"a", "e"}}), SchemaError);
  // color mismatch
  KGraph t = torus2();
  CHECK_THROWS_AS(KGraphMorphism(t, t, {{"v", "v"}}, {{"e", "f"}, {"f", "e"}}), SchemaError);
}

TEST_CASE("normalization strategies agree on random composable words") {
  std::mt19937_64 rng(2024);
  for (const auto& [name, g, bound] : property_graphs()) {
    CAPTURE(name);
    auto morphisms = g.morphisms_up_to(bound).morphisms;
    std::uniform_int_distribution<std::size_t> pick(0, morphisms.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      const Morphism& m = morphisms[pick(rng)];
      if (m.is_identity()) continue;
      auto words = g.representative_words(m);
      for (const auto& w : words) {
        auto l = g.normalize_word(w, NormalizationStrategy::LeftmostInversion);
        auto r = g.normalize_word(w, NormalizationStrategy::RightmostInversion);
        auto s = g.normalize_word(w, NormalizationStrategy::SeededRandom, trial);
        CHECK(l == r);
        CHECK(l == s);
        CHECK(l == m.word());
      }
    }
  }
}

TEST_CASE("graph JSON round-trips through the loader") {
  KGraph g = omega(2, deg({1, 1}));
  KGraph h = load_graph(graph_to_json(g));
  CHECK(h.validate().passed);
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.edge_count() == g.edge_count());
  CHECK(h.squares().size() == g.squares().size());
}

TEST_CASE("morphism literals") {
  KGraph g = torus2();
  CHECK(parse_morphism(g, R"({"vertex":"v"})") == g.identity("v"));
  CHECK(parse_morphism(g, R"({"edges":["f","e"]})") == g.morphism_from_edges({"e", "f"}));
  CHECK_THROWS_AS(parse_morphism(g, R"({"edges":[]})"), SchemaError);
  Morphism ef = g.morphism_from_edges({"e", "f"});
  CHECK(parse_morphism(g, morphism_to_json(g, ef)) == ef);
}
