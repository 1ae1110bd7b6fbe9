#include "khom/kgraph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

namespace khom {

// --- Degree ------------------------------------------------------------------

Degree::Degree(std::vector<int> coords) : coords_(std::move(coords)) {
  for (int c : coords_)
    if (c < 0) throw DomainError("degree coordinates must be nonnegative");
}

Degree Degree::zero(int k) { return Degree(std::vector<int>(k, 0)); }

Degree Degree::unit(int k, int color) {
  if (color < 1 || color > k) throw DomainError("color out of range");
  std::vector<int> v(k, 0);
  v[color - 1] = 1;
  return Degree(std::move(v));
}

int Degree::at(int color) const {
  if (color < 1 || color > k()) throw DomainError("color out of range");
  return coords_[color - 1];
}

int Degree::total() const {
  int t = 0;
  for (int c : coords_) t += c;
  return t;
}

bool Degree::is_zero() const { return total() == 0; }

bool Degree::le(const Degree& other) const {
  if (k() != other.k()) throw DomainError("degree rank mismatch");
  for (int i = 0; i < k(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

Degree& Degree::operator+=(const Degree& o) {
  if (k() != o.k()) throw DomainError("degree rank mismatch");
  for (int i = 0; i < k(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Degree Degree::minus(const Degree& o) const {
  if (!o.le(*this)) throw DomainError("degree difference would be negative");
  std::vector<int> v(coords_);
  for (int i = 0; i < k(); ++i) v[i] -= o.coords_[i];
  return Degree(std::move(v));
}

ColorSet color_type_of(const Degree& d) {
  ColorSet out;
  for (int i = 1; i <= d.k(); ++i)
    if (d.at(i) > 0) out.push_back(i);
  return out;
}

Degree indicator_degree(int k, const ColorSet& K) {
  std::vector<int> v(k, 0);
  for (int c : K) {
    if (c < 1 || c > k) throw DomainError("color out of range");
    v[c - 1] = 1;
  }
  return Degree(std::move(v));
}

std::vector<ColorSet> color_subsets(int k, int n) {
  std::vector<ColorSet> out;
  if (n < 0 || n > k) return out;
  ColorSet cur;
  // lexicographic DFS
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int c = next; c <= k - (n - static_cast<int>(cur.size())) + 1; ++c) {
      cur.push_back(c);
      rec(c + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

void for_each_lattice_point(const Degree& lo, const Degree& hi,
                            const std::function<void(const Degree&)>& fn) {
  if (lo.k() != hi.k()) throw DomainError("degree rank mismatch");
  if (!lo.le(hi)) return;
  std::vector<int> cur = lo.coords();
  const int k = lo.k();
  while (true) {
    fn(Degree(cur));
    int i = k - 1;
    while (i >= 0) {
      if (cur[i] < hi.coords()[i]) {
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = lo.coords()[j];
        break;
      }
      --i;
    }
    if (i < 0) break;
  }
}

// --- KGraph construction -------------------------------------------------------

KGraph::KGraph(const GraphData& data) {
  if (data.k < 1) throw SchemaError("k must be at least 1");
  k_ = data.k;

  for (const auto& v : data.vertices) {
    if (v.empty()) throw SchemaError("vertex id must be nonempty");
    if (!vertex_index_.emplace(v, static_cast<int>(vertex_ids_.size())).second)
      throw SchemaError("duplicate vertex id: " + v);
    vertex_ids_.push_back(v);
  }

  for (const auto& e : data.edges) {
    if (e.id.empty()) throw SchemaError("edge id must be nonempty");
    if (e.color < 1 || e.color > k_)
      throw SchemaError("edge " + e.id + ": color " + std::to_string(e.color) +
                        " out of range 1.." + std::to_string(k_));
    auto rv = vertex_index_.find(e.range);
    auto sv = vertex_index_.find(e.source);
    if (rv == vertex_index_.end())
      throw SchemaError("edge " + e.id + ": unknown range vertex " + e.range);
    if (sv == vertex_index_.end())
      throw SchemaError("edge " + e.id + ": unknown source vertex " + e.source);
    if (!edge_index_.emplace(e.id, static_cast<int>(edges_.size())).second)
      throw SchemaError("duplicate edge id: " + e.id);
    edges_.push_back(Edge{e.id, e.color, rv->second, sv->second});
  }

  edges_by_range_.assign(vertex_ids_.size(), {});
  for (int i = 0; i < edge_count(); ++i) edges_by_range_[edges_[i].range].push_back(i);
  for (auto& lst : edges_by_range_) {
    std::sort(lst.begin(), lst.end(), [&](int a, int b) {
      if (edges_[a].color != edges_[b].color) return edges_[a].color < edges_[b].color;
      return edges_[a].id < edges_[b].id;
    });
  }

  auto resolve_side = [&](const std::array<std::string, 2>& side) -> std::pair<int, int> {
    auto a = edge_index_.find(side[0]);
    auto b = edge_index_.find(side[1]);
    if (a == edge_index_.end() || b == edge_index_.end())
      throw SchemaError("square references unknown edge");
    return {a->second, b->second};
  };

  for (const auto& sq : data.squares) {
    auto [a, b] = resolve_side(sq.lhs);
    auto [c, d] = resolve_side(sq.rhs);
    const Edge &ea = edges_[a], &eb = edges_[b], &ec = edges_[c], &ed = edges_[d];
    if (ea.color == eb.color)
      throw SchemaError("square side [" + ea.id + "," + eb.id + "] has equal colors");
    if (ec.color != eb.color || ed.color != ea.color)
      throw SchemaError("square rhs colors must mirror lhs colors");
    if (ea.source != eb.range)
      throw SchemaError("square lhs [" + ea.id + "," + eb.id + "] is not composable");
    if (ec.source != ed.range)
      throw SchemaError("square rhs [" + ec.id + "," + ed.id + "] is not composable");
    if (ea.range != ec.range || eb.source != ed.source)
      throw SchemaError("square sides have mismatched endpoints");
    if (!square_map_.emplace(pair_key(a, b), std::make_pair(c, d)).second)
      throw SchemaError("duplicate square side [" + ea.id + "," + eb.id + "]");
    if (!square_map_.emplace(pair_key(c, d), std::make_pair(a, b)).second)
      throw SchemaError("duplicate square side [" + ec.id + "," + ed.id + "]");
    squares_.push_back({a, b, c, d});
  }
}

int KGraph::vertex_index(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw SchemaError("unknown vertex id: " + id);
  return it->second;
}

int KGraph::edge_index(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw SchemaError("unknown edge id: " + id);
  return it->second;
}

// --- word machinery -----------------------------------------------------------

const std::pair<int, int>* KGraph::swapped(int a, int b) const {
  auto it = square_map_.find(pair_key(a, b));
  return it == square_map_.end() ? nullptr : &it->second;
}

std::pair<int, int> KGraph::swapped_or_throw(int a, int b) const {
  const auto* p = swapped(a, b);
  if (!p)
    throw DomainError("no square for word [" + edges_[a].id + "," + edges_[b].id + "]");
  return *p;
}

Degree KGraph::word_degree(const std::vector<int>& word) const {
  std::vector<int> v(k_, 0);
  for (int e : word) ++v[edges_[e].color - 1];
  return Degree(std::move(v));
}

std::vector<int> KGraph::normalize_word(std::vector<int> word, NormalizationStrategy strategy,
                                        std::uint64_t seed) const {
  auto color = [&](int e) { return edges_[e].color; };
  auto do_swap = [&](std::vector<int>& w, int i) {
    auto [y2, x2] = swapped_or_throw(w[i], w[i + 1]);
    w[i] = y2;
    w[i + 1] = x2;
  };
  switch (strategy) {
    case NormalizationStrategy::LeftmostInversion: {
      for (std::size_t i = 1; i < word.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && color(word[j - 1]) > color(word[j])) {
          do_swap(word, static_cast<int>(j - 1));
          --j;
        }
      }
      return word;
    }
    case NormalizationStrategy::RightmostInversion: {
      while (true) {
        int pos = -1;
        for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i) {
          if (color(word[i]) > color(word[i + 1])) {
            pos = i;
            break;
          }
        }
        if (pos < 0) return word;
        do_swap(word, pos);
      }
    }
    case NormalizationStrategy::SeededRandom: {
      std::mt19937_64 rng(seed);
      while (true) {
        std::vector<int> inversions;
        for (int i = 0; i + 1 < static_cast<int>(word.size()); ++i)
          if (color(word[i]) > color(word[i + 1])) inversions.push_back(i);
        if (inversions.empty()) return word;
        std::uniform_int_distribution<std::size_t> pick(0, inversions.size() - 1);
        do_swap(word, inversions[pick(rng)]);
      }
    }
  }
  return word;
}

Morphism KGraph::make(int anchor, std::vector<int> word) const {
  if (anchor < 0 || anchor >= vertex_count()) throw DomainError("anchor vertex out of range");
  if (!word.empty()) {
    if (edges_[word.front()].range != anchor)
      throw DomainError("word range does not match anchor");
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (edges_[word[i]].source != edges_[word[i + 1]].range)
        throw DomainError("word is not composable at position " + std::to_string(i));
  }
  Degree d = word_degree(word);
  word = normalize_word(std::move(word), NormalizationStrategy::LeftmostInversion);
  return Morphism(anchor, std::move(word), std::move(d));
}

Morphism KGraph::identity(int vertex) const {
  if (vertex < 0 || vertex >= vertex_count()) throw DomainError("vertex index out of range");
  return Morphism(vertex, {}, Degree::zero(k_));
}

Morphism KGraph::identity(const std::string& vertex_id) const {
  return identity(vertex_index(vertex_id));
}

Morphism KGraph::morphism_from_edges(const std::vector<std::string>& edge_ids) const {
  std::vector<int> word;
  word.reserve(edge_ids.size());
  for (const auto& id : edge_ids) word.push_back(edge_index(id));
  return morphism_from_edge_indices(word);
}

Morphism KGraph::morphism_from_edge_indices(const std::vector<int>& word) const {
  if (word.empty()) throw DomainError("empty word has no anchor; use identity(v)");
  for (int e : word)
    if (e < 0 || e >= edge_count()) throw DomainError("edge index out of range");
  return make(edges_[word.front()].range, word);
}

int KGraph::source(const Morphism& lambda) const {
  return lambda.word().empty() ? lambda.anchor() : edges_[lambda.word().back()].source;
}

Morphism KGraph::compose(const Morphism& lambda, const Morphism& mu) const {
  if (source(lambda) != mu.anchor())
    throw DomainError("compose: s(lambda) != r(mu)");
  std::vector<int> word = lambda.word();
  word.insert(word.end(), mu.word().begin(), mu.word().end());
  return make(lambda.anchor(), std::move(word));
}

std::pair<Morphism, Morphism> KGraph::split(const Morphism& lambda, const Degree& m) const {
  std::vector<int> rest = lambda.word();
  std::vector<int> prefix;
  for (int c = 1; c <= k_; ++c) {
    for (int t = 0; t < m.at(c); ++t) {
      std::size_t p = 0;
      while (p < rest.size() && edges_[rest[p]].color != c) ++p;
      if (p == rest.size()) throw DomainError("split: not enough edges of color " + std::to_string(c));
      for (std::size_t i = p; i > 0; --i) {
        auto [y2, x2] = swapped_or_throw(rest[i - 1], rest[i]);
        rest[i - 1] = y2;
        rest[i] = x2;
      }
      prefix.push_back(rest.front());
      rest.erase(rest.begin());
    }
  }
  int prefix_anchor = lambda.anchor();
  int rest_anchor = prefix.empty() ? prefix_anchor : edges_[prefix.back()].source;
  Morphism head(prefix_anchor, std::move(prefix), m);
  Morphism tail(rest_anchor, std::move(rest), lambda.degree().minus(m));
  return {std::move(head), std::move(tail)};
}

Morphism KGraph::segment(const Morphism& lambda, const Degree& lo, const Degree& hi) const {
  if (!lo.le(hi) || !hi.le(lambda.degree()))
    throw DomainError("segment: need 0 <= lo <= hi <= d(lambda)");
  auto [head, rest] = split(lambda, lo);
  (void)head;
  auto [mid, tail] = split(rest, hi.minus(lo));
  (void)tail;
  return mid;
}

ColorSet KGraph::color_type(const Morphism& lambda) const {
  return color_type_of(lambda.degree());
}

Morphism KGraph::face(const Morphism& cube, int j, int l) const {
  ColorSet C = color_type_of(cube.degree());
  const int n = static_cast<int>(C.size());
  if (cube.degree().total() != n) throw DomainError("face: morphism is not a cube");
  if (j < 1 || j > n) throw DomainError("face: index out of range");
  if (l != 0 && l != 1) throw DomainError("face: l must be 0 or 1");
  Degree ec = Degree::unit(k_, C[j - 1]);
  if (l == 0) return segment(cube, Degree::zero(k_), cube.degree().minus(ec));
  return segment(cube, ec, cube.degree());
}

Morphism KGraph::face_companion_s(const Morphism& cube, int j) const {
  ColorSet C = color_type_of(cube.degree());
  if (j < 1 || j > static_cast<int>(C.size())) throw DomainError("face companion: index out of range");
  Degree ec = Degree::unit(k_, C[j - 1]);
  return segment(cube, cube.degree().minus(ec), cube.degree());
}

Morphism KGraph::face_companion_r(const Morphism& cube, int j) const {
  ColorSet C = color_type_of(cube.degree());
  if (j < 1 || j > static_cast<int>(C.size())) throw DomainError("face companion: index out of range");
  Degree ec = Degree::unit(k_, C[j - 1]);
  return segment(cube, Degree::zero(k_), ec);
}

// --- enumeration ----------------------------------------------------------------

void KGraph::check_validated(const char* op) const {
  if (!validated_) throw DomainError(std::string(op) + ": graph has not been validated");
}

std::vector<Morphism> KGraph::morphisms_of_degree(const Degree& n) const {
  std::vector<int> order(k_);
  for (int i = 0; i < k_; ++i) order[i] = i + 1;
  return morphisms_of_degree(n, order);
}

std::vector<Morphism> KGraph::morphisms_of_degree(const Degree& n,
                                                  const std::vector<int>& color_order) const {
  check_validated("morphisms_of_degree");
  if (n.k() != k_) throw DomainError("degree rank mismatch");
  if (static_cast<int>(color_order.size()) != k_)
    throw DomainError("color order must list every color once");

  std::vector<int> vertex_order(vertex_count());
  for (int i = 0; i < vertex_count(); ++i) vertex_order[i] = i;
  std::sort(vertex_order.begin(), vertex_order.end(),
            [&](int a, int b) { return vertex_ids_[a] < vertex_ids_[b]; });

  std::vector<Morphism> out;
  std::vector<int> word;
  std::function<void(int, int, int, int)> dfs = [&](int anchor, int block, int used, int cur) {
    if (block == k_) {
      out.push_back(make(anchor, word));
      return;
    }
    const int c = color_order[block];
    if (used == n.at(c)) {
      dfs(anchor, block + 1, 0, cur);
      return;
    }
    for (int e : edges_by_range_[cur]) {
      if (edges_[e].color != c) continue;
      word.push_back(e);
      dfs(anchor, block, used + 1, edges_[e].source);
      word.pop_back();
    }
  };
  for (int v : vertex_order) dfs(v, 0, 0, v);
  return out;
}

std::vector<Morphism> KGraph::cubes(int n) const {
  check_validated("cubes");
  std::vector<Morphism> out;
  if (n < 0 || n > k_) return out;
  if (n == 0) {
    std::vector<int> vertex_order(vertex_count());
    for (int i = 0; i < vertex_count(); ++i) vertex_order[i] = i;
    std::sort(vertex_order.begin(), vertex_order.end(),
              [&](int a, int b) { return vertex_ids_[a] < vertex_ids_[b]; });
    for (int v : vertex_order) out.push_back(identity(v));
    return out;
  }
  auto word_lex_less = [&](const Morphism& a, const Morphism& b) {
    const auto &wa = a.word(), &wb = b.word();
    for (std::size_t i = 0; i < std::min(wa.size(), wb.size()); ++i) {
      const Edge &ea = edges_[wa[i]], &eb = edges_[wb[i]];
      if (ea.color != eb.color) return ea.color < eb.color;
      if (ea.id != eb.id) return ea.id < eb.id;
    }
    return wa.size() < wb.size();
  };
  for (const ColorSet& K : color_subsets(k_, n)) {
    auto block = morphisms_of_degree(indicator_degree(k_, K));
    std::sort(block.begin(), block.end(), word_lex_less);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

EnumerationResult KGraph::morphisms_up_to(const Degree& bound) const {
  check_validated("morphisms_up_to");
  if (bound.k() != k_) throw DomainError("degree rank mismatch");
  EnumerationResult res;
  std::set<Morphism> seen;
  std::deque<Morphism> queue;
  for (int v = 0; v < vertex_count(); ++v) {
    Morphism id = identity(v);
    seen.insert(id);
    queue.push_back(id);
  }
  while (!queue.empty()) {
    Morphism cur = queue.front();
    queue.pop_front();
    const int src = source(cur);
    for (int e : edges_by_range_[src]) {
      std::vector<int> word = cur.word();
      word.push_back(e);
      Degree d = cur.degree() + Degree::unit(k_, edges_[e].color);
      if (!d.le(bound)) {
        if (!res.saturated) {
          res.saturated = true;
          res.witness = make(cur.anchor(), word);
        }
        continue;
      }
      Morphism next = make(cur.anchor(), std::move(word));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  res.morphisms.assign(seen.begin(), seen.end());
  return res;
}

bool KGraph::is_finite_category(const Degree& probe_bound,
                                std::optional<Morphism>* witness) const {
  EnumerationResult res = morphisms_up_to(probe_bound);
  if (witness) *witness = res.witness;
  return !res.saturated;
}

// --- validation -----------------------------------------------------------------

std::string KGraph::word_string(const std::vector<int>& word) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ',';
    os << edges_[word[i]].id;
  }
  os << ']';
  return os.str();
}

std::string KGraph::describe(const Morphism& lambda) const {
  if (lambda.is_identity()) return "id(" + vertex_ids_[lambda.anchor()] + ")";
  return word_string(lambda.word());
}

std::set<std::vector<int>> KGraph::representative_words(const Morphism& lambda) const {
  std::set<std::vector<int>> seen{lambda.word()};
  std::deque<std::vector<int>> queue{lambda.word()};
  while (!queue.empty()) {
    std::vector<int> w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (edges_[w[i]].color == edges_[w[i + 1]].color) continue;
      auto [y2, x2] = swapped_or_throw(w[i], w[i + 1]);
      std::vector<int> nw = w;
      nw[i] = y2;
      nw[i + 1] = x2;
      if (seen.insert(nw).second) queue.push_back(nw);
    }
  }
  return seen;
}

ValidationReport KGraph::validate() {
  return validate(Degree(std::vector<int>(k_, 2)));
}

ValidationReport KGraph::validate(const Degree& bound, std::uint64_t seed) {
  if (bound.k() != k_) throw DomainError("validation bound rank mismatch");
  ValidationReport rep;
  rep.confluence_bound = bound;

  // V1: every composable distinct-color 2-edge word is covered by a square.
  for (int x = 0; x < edge_count(); ++x) {
    for (int y : edges_by_range_[edges_[x].source]) {
      if (edges_[y].color == edges_[x].color) continue;
      if (!square_map_.count(pair_key(x, y)))
        rep.issues.push_back({"V1", word_string({x, y})});
    }
  }

  // V2: the swap map is an involutive bijection with coherent endpoints.
  {
    std::vector<std::pair<int, int>> keys;
    keys.reserve(square_map_.size());
    for (const auto& [key, val] : square_map_)
      keys.emplace_back(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu));
    std::sort(keys.begin(), keys.end());
    for (auto [a, b] : keys) {
      auto [c, d] = square_map_.at(pair_key(a, b));
      auto back = square_map_.find(pair_key(c, d));
      bool ok = back != square_map_.end() && back->second == std::make_pair(a, b);
      ok = ok && edges_[c].color == edges_[b].color && edges_[d].color == edges_[a].color;
      ok = ok && edges_[c].range == edges_[a].range && edges_[d].source == edges_[b].source;
      ok = ok && edges_[c].source == edges_[d].range;
      if (!ok) rep.issues.push_back({"V2", word_string({a, b})});
    }
  }

  bool structure_ok = rep.issues.empty();

  // V3: hexagon coherence. The two swap orders that fully reverse a
  // pairwise-distinct-color 3-word must agree. Vacuous for k <= 2.
  if (structure_ok && k_ >= 3) {
    auto apply_swap = [&](std::vector<int> w, int i) {
      auto [y2, x2] = swapped_or_throw(w[i], w[i + 1]);
      w[i] = y2;
      w[i + 1] = x2;
      return w;
    };
    for (int x = 0; x < edge_count() && structure_ok; ++x) {
      for (int y : edges_by_range_[edges_[x].source]) {
        if (edges_[y].color == edges_[x].color) continue;
        for (int z : edges_by_range_[edges_[y].source]) {
          if (edges_[z].color == edges_[x].color || edges_[z].color == edges_[y].color) continue;
          std::vector<int> w{x, y, z};
          auto route_a = apply_swap(apply_swap(apply_swap(w, 0), 1), 0);
          auto route_b = apply_swap(apply_swap(apply_swap(w, 1), 0), 1);
          if (route_a != route_b) rep.issues.push_back({"V3", word_string(w)});
        }
      }
    }
    structure_ok = rep.issues.empty();
  }

  // V4: confluence probe. Every composable word within the bound must
  // normalize to the same word under different swap orders.
  if (structure_ok) {
    std::vector<std::vector<int>> words;
    std::vector<int> cur;
    std::function<void(int, const Degree&)> grow = [&](int src, const Degree& d) {
      if (!cur.empty()) words.push_back(cur);
      for (int e : edges_by_range_[src]) {
        Degree nd = d + Degree::unit(k_, edges_[e].color);
        if (!nd.le(bound)) continue;
        cur.push_back(e);
        grow(edges_[e].source, nd);
        cur.pop_back();
      }
    };
    for (int v = 0; v < vertex_count(); ++v) grow(v, Degree::zero(k_));

    for (const auto& w : words) {
      ++rep.words_checked;
      auto left = normalize_word(w, NormalizationStrategy::LeftmostInversion);
      auto right = normalize_word(w, NormalizationStrategy::RightmostInversion);
      auto rnd1 = normalize_word(w, NormalizationStrategy::SeededRandom, seed);
      auto rnd2 = normalize_word(w, NormalizationStrategy::SeededRandom, seed + 1);
      if (left != right || left != rnd1 || left != rnd2) {
        rep.issues.push_back({"V4", word_string(w)});
        break;
      }
    }
  }

  rep.passed = rep.issues.empty();
  validated_ = rep.passed;
  return rep;
}

// --- k-graph morphisms ------------------------------------------------------------

KGraphMorphism::KGraphMorphism(const KGraph& domain, const KGraph& codomain,
                               const std::map<std::string, std::string>& vertex_map,
                               const std::map<std::string, std::string>& edge_map)
    : domain_(&domain), codomain_(&codomain) {
  if (domain.k() != codomain.k())
    throw SchemaError("k-graph morphism requires equal rank");
  vertex_map_.assign(domain.vertex_count(), -1);
  for (const auto& [from, to] : vertex_map)
    vertex_map_[domain.vertex_index(from)] = codomain.vertex_index(to);
  for (int v = 0; v < domain.vertex_count(); ++v)
    if (vertex_map_[v] < 0)
      throw SchemaError("vertex map misses " + domain.vertex_ids()[v]);

  edge_map_.assign(domain.edge_count(), -1);
  for (const auto& [from, to] : edge_map)
    edge_map_[domain.edge_index(from)] = codomain.edge_index(to);
  for (int e = 0; e < domain.edge_count(); ++e) {
    if (edge_map_[e] < 0) throw SchemaError("edge map misses " + domain.edges()[e].id);
    const Edge& de = domain.edges()[e];
    const Edge& ce = codomain.edges()[edge_map_[e]];
    if (de.color != ce.color)
      throw SchemaError("edge map does not preserve color at " + de.id);
    if (vertex_map_[de.range] != ce.range || vertex_map_[de.source] != ce.source)
      throw SchemaError("edge map is not endpoint-compatible at " + de.id);
  }

  // Every domain square must map to a valid relation in the codomain.
  for (const auto& [key, val] : domain.square_map_) {
    int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffffu);
    Morphism lhs = codomain.morphism_from_edge_indices({edge_map_[a], edge_map_[b]});
    Morphism rhs = codomain.morphism_from_edge_indices({edge_map_[val.first], edge_map_[val.second]});
    if (!(lhs == rhs))
      throw SchemaError("square [" + domain.edges()[a].id + "," + domain.edges()[b].id +
                        "] does not map to a relation");
  }
}

Morphism KGraphMorphism::apply(const Morphism& lambda) const {
  if (lambda.anchor() < 0 || lambda.anchor() >= domain_->vertex_count())
    throw DomainError("morphism is not in the domain graph");
  if (lambda.is_identity()) return codomain_->identity(vertex_map_[lambda.anchor()]);
  std::vector<int> word;
  word.reserve(lambda.word().size());
  for (int e : lambda.word()) {
    if (e < 0 || e >= domain_->edge_count())
      throw DomainError("morphism is not in the domain graph");
    word.push_back(edge_map_[e]);
  }
  return codomain_->make(vertex_map_[lambda.anchor()], std::move(word));
}

// --- builders ----------------------------------------------------------------------

namespace {

std::string joined(const std::vector<int>& coords, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << sep;
    os << coords[i];
  }
  return os.str();
}

void require_valid(KGraph& g, const char* name) {
  ValidationReport rep = g.validate();
  if (!rep.passed) throw std::logic_error(std::string("builder produced invalid graph: ") + name);
}

}  // namespace

KGraph omega(int k, const Degree& m) {
  if (m.k() != k) throw DomainError("omega: degree rank mismatch");
  GraphData data;
  data.k = k;

  std::vector<std::vector<int>> points;
  for_each_lattice_point(Degree::zero(k), m,
                         [&](const Degree& p) { points.push_back(p.coords()); });
  auto vid = [&](const std::vector<int>& p) { return "v" + joined(p, '_'); };
  auto eid = [&](int color, const std::vector<int>& p) {
    return "e" + std::to_string(color) + "_" + joined(p, '_');
  };
  for (const auto& p : points) data.vertices.push_back(vid(p));

  for (const auto& p : points) {
    for (int c = 1; c <= k; ++c) {
      if (p[c - 1] >= m.at(c)) continue;
      std::vector<int> q = p;
      ++q[c - 1];
      data.edges.push_back({eid(c, p), c, vid(p), vid(q)});
    }
  }
  for (const auto& p : points) {
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        if (p[i - 1] >= m.at(i) || p[j - 1] >= m.at(j)) continue;
        std::vector<int> pi = p, pj = p;
        ++pi[i - 1];
        ++pj[j - 1];
        data.squares.push_back({{eid(i, p), eid(j, pi)}, {eid(j, p), eid(i, pj)}});
      }
    }
  }
  KGraph g(data);
  require_valid(g, "omega");
  return g;
}

KGraph torus2() {
  GraphData data;
  data.k = 2;
  data.vertices = {"v"};
  data.edges = {{"e", 1, "v", "v"}, {"f", 2, "v", "v"}};
  data.squares = {{{"e", "f"}, {"f", "e"}}};
  KGraph g(data);
  require_valid(g, "torus2");
  return g;
}

KGraph fig8() {
  GraphData data;
  data.k = 1;
  data.vertices = {"v"};
  data.edges = {{"a", 1, "v", "v"}, {"b", 1, "v", "v"}};
  KGraph g(data);
  require_valid(g, "fig8");
  return g;
}

KGraph single_loop() {
  GraphData data;
  data.k = 1;
  data.vertices = {"v"};
  data.edges = {{"e", 1, "v", "v"}};
  KGraph g(data);
  require_valid(g, "single_loop");
  return g;
}

}  // namespace khom
