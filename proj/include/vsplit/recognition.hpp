#ifndef VSPLIT_RECOGNITION_HPP
#define VSPLIT_RECOGNITION_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "vsplit/graph.hpp"

namespace vsplit {

// ---------------------------------------------------------------------------
// Forbidden patterns
// ---------------------------------------------------------------------------

enum class Pattern { claw, net, tent, t2, c4, c5, long_cycle };

inline std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::claw: return "claw";
    case Pattern::net: return "net";
    case Pattern::tent: return "tent";
    case Pattern::t2: return "T2";
    case Pattern::c4: return "C4";
    case Pattern::c5: return "C5";
    case Pattern::long_cycle: return "Ck";
  }
  return "?";
}

inline Pattern parse_pattern(std::string_view tag) {
  if (tag == "claw") return Pattern::claw;
  if (tag == "net") return Pattern::net;
  if (tag == "tent") return Pattern::tent;
  if (tag == "T2" || tag == "t2") return Pattern::t2;
  if (tag == "C4" || tag == "c4") return Pattern::c4;
  if (tag == "C5" || tag == "c5") return Pattern::c5;
  if (tag == "Ck" || tag == "ck" || tag == "long-cycle") return Pattern::long_cycle;
  throw std::invalid_argument("unknown pattern tag: " + std::string(tag));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

/// Center 0; arm j occupies ids 1 + j*d .. (j+1)*d, nearest the center first.
inline Graph spider_graph(int arms, int length) {
  if (arms < 0 || length < 1) throw std::invalid_argument("bad (t,d)-star parameters");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int j = 0; j < arms; ++j) {
    const int base = 1 + j * length;
    e.emplace_back(0, base);
    for (int i = 0; i + 1 < length; ++i) e.emplace_back(base + i, base + i + 1);
  }
  return Graph::from_edges(1 + arms * length, e);
}

/// Pattern graphs. Vertex 0..2 of net and tent form the triangle.
inline Graph pattern_graph(Pattern p) {
  switch (p) {
    case Pattern::claw: return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    case Pattern::net:
      return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    case Pattern::tent:
      return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}});
    case Pattern::t2: return spider_graph(3, 2);
    case Pattern::c4: return cycle_graph(4);
    case Pattern::c5: return cycle_graph(5);
    case Pattern::long_cycle: break;
  }
  throw std::invalid_argument("pattern has no fixed graph");
}

namespace detail {

/// Backtracking induced-subgraph matcher. Pattern vertices are matched in
/// index order and candidates are tried in ascending id, so the first map
/// reported is the lexicographically least one.
class InducedMatcher {
 public:
  InducedMatcher(const Graph& host, const Graph& pattern) : g_(host), p_(pattern) {
    const int k = p_.order();
    anchor_.assign(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < k; ++i)
      for (Vertex j : p_.neighbors(i))
        if (j < i) {
          anchor_[i] = j;
          break;
        }
    map_.assign(static_cast<std::size_t>(k), -1);
    used_.assign(static_cast<std::size_t>(g_.order()), 0);
  }

  /// Calls `visit(map)` per occurrence until it returns false.
  void run(const std::function<bool(const VertexList&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    if (p_.order() == 0 || p_.order() > g_.order()) return;
    extend(0);
  }

 private:
  void extend(int i) {
    if (stop_) return;
    if (i == p_.order()) {
      if (!(*visit_)(map_)) stop_ = true;
      return;
    }
    auto try_vertex = [&](Vertex x) {
      if (used_[x] || g_.degree(x) < p_.degree(i)) return;
      for (int j = 0; j < i; ++j)
        if (g_.adjacent(x, map_[j]) != p_.adjacent(i, j)) return;
      map_[i] = x;
      used_[x] = 1;
      extend(i + 1);
      used_[x] = 0;
      map_[i] = -1;
    };
    if (anchor_[i] >= 0) {
      for (Vertex x : g_.neighbors(map_[anchor_[i]])) {
        try_vertex(x);
        if (stop_) return;
      }
    } else {
      for (Vertex x = 0; x < g_.order(); ++x) {
        try_vertex(x);
        if (stop_) return;
      }
    }
  }

  const Graph& g_;
  const Graph& p_;
  std::vector<int> anchor_;
  VertexList map_;
  std::vector<char> used_;
  const std::function<bool(const VertexList&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace detail

/// Lexicographically least induced occurrence of `pattern` in `g`.
inline std::optional<VertexList> find_induced_graph(const Graph& g, const Graph& pattern) {
  std::optional<VertexList> found;
  detail::InducedMatcher m(g, pattern);
  m.run([&](const VertexList& map) {
    found = map;
    return false;
  });
  return found;
}

/// Visits induced occurrences (as vertex maps) until `visit` returns false.
inline void for_each_induced(const Graph& g, const Graph& pattern,
                             const std::function<bool(const VertexList&)>& visit) {
  detail::InducedMatcher m(g, pattern);
  m.run(visit);
}

/// Checks that `map` embeds `pattern` into `g` as an induced subgraph.
inline bool is_induced_occurrence(const Graph& g, const Graph& pattern, const VertexList& map) {
  if (static_cast<int>(map.size()) != pattern.order()) return false;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] < 0 || map[i] >= g.order()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (map[i] == map[j]) return false;
      if (g.adjacent(map[i], map[j]) != pattern.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)))
        return false;
    }
  }
  return true;
}

/// Checks that `cycle` (in cyclic order) is an induced cycle of `g`.
inline bool is_induced_cycle(const Graph& g, const VertexList& cycle) {
  if (cycle.size() < 3) return false;
  return is_induced_occurrence(g, cycle_graph(static_cast<int>(cycle.size())), cycle);
}

/// Shortest induced cycle of length >= 4 passing through `v`, in cyclic
/// order starting at `v`. Ties go to the lexicographically least sequence.
inline std::optional<VertexList> shortest_induced_cycle_through(const Graph& g, Vertex v) {
  const int n = g.order();
  auto nv = g.neighbors(v);
  std::optional<VertexList> best;
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < nv.size(); ++i) {
    for (std::size_t j = i + 1; j < nv.size(); ++j) {
      const Vertex a = nv[i], b = nv[j];
      if (g.adjacent(a, b)) continue;
      std::fill(blocked.begin(), blocked.end(), 0);
      blocked[v] = 1;
      for (Vertex w : nv)
        if (w != a && w != b) blocked[w] = 1;
      std::fill(dist.begin(), dist.end(), -1);
      std::queue<Vertex> q;
      dist[a] = 0;
      q.push(a);
      while (!q.empty() && dist[b] < 0) {
        Vertex x = q.front();
        q.pop();
        for (Vertex y : g.neighbors(x)) {
          if (blocked[y] || dist[y] >= 0) continue;
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        }
      }
      if (dist[b] < 0) continue;
      const std::size_t len = static_cast<std::size_t>(dist[b]) + 2;
      if (best && best->size() < len) continue;
      VertexList cyc{v};
      VertexList tail;
      for (Vertex x = b; x != a; x = parent[x]) tail.push_back(x);
      tail.push_back(a);
      std::reverse(tail.begin(), tail.end());
      cyc.insert(cyc.end(), tail.begin(), tail.end());
      if (!best || cyc.size() < best->size() || cyc < *best) best = std::move(cyc);
    }
  }
  return best;
}

/// Shortest induced cycle of length >= 4 anywhere in `g`.
inline std::optional<VertexList> shortest_induced_cycle(const Graph& g) {
  std::optional<VertexList> best;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto c = shortest_induced_cycle_through(g, v);
    if (c && (!best || c->size() < best->size())) best = std::move(c);
    if (best && best->size() == 4) break;
  }
  return best;
}

/// A shortest cycle of any length (so it is induced), or nothing for forests.
inline std::optional<VertexList> shortest_cycle(const Graph& g) {
  if (auto t = find_triangle(g)) return VertexList{(*t)[0], (*t)[1], (*t)[2]};
  return shortest_induced_cycle(g);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

enum class GraphClass { chordal, interval, unit_interval, caterpillar_forest, union_of_paths, forest, tree };

inline std::string_view class_name(GraphClass c) {
  switch (c) {
    case GraphClass::chordal: return "chordal";
    case GraphClass::interval: return "interval";
    case GraphClass::unit_interval: return "unit-interval";
    case GraphClass::caterpillar_forest: return "caterpillar-forest";
    case GraphClass::union_of_paths: return "union-of-paths";
    case GraphClass::forest: return "forest";
    case GraphClass::tree: return "tree";
  }
  return "?";
}

inline GraphClass parse_class(std::string_view tag) {
  for (GraphClass c : {GraphClass::chordal, GraphClass::interval, GraphClass::unit_interval,
                       GraphClass::caterpillar_forest, GraphClass::union_of_paths, GraphClass::forest,
                       GraphClass::tree})
    if (class_name(c) == tag) return c;
  throw std::invalid_argument("unknown class tag: " + std::string(tag));
}

struct Certificate {
  enum class Kind { none, elimination_order, spines, paths };
  Kind kind = Kind::none;
  /// One list for an elimination order; one list per component otherwise.
  std::vector<VertexList> lists;
};

struct Witness {
  enum class Kind { none, induced_cycle, pattern, asteroidal_triple, degree, disconnected };
  Kind kind = Kind::none;
  Pattern pattern = Pattern::claw;
  VertexList vertices;
  /// For asteroidal triples: the three connecting paths (pairs 01, 02, 12).
  std::vector<VertexList> paths;
};

struct RecognitionReport {
  GraphClass target = GraphClass::chordal;
  bool verdict = false;
  Certificate certificate;
  Witness witness;
};

// ---------------------------------------------------------------------------
// Chordal graphs
// ---------------------------------------------------------------------------

/// Maximum cardinality search; returns the visiting order.
inline VertexList maximum_cardinality_search(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> bucket(static_cast<std::size_t>(n) + 1);
  for (Vertex v = n - 1; v >= 0; --v) bucket[0].push_back(v);
  VertexList order;
  order.reserve(static_cast<std::size_t>(n));
  int top = 0;
  while (static_cast<int>(order.size()) < n) {
    while (top > 0 && bucket[top].empty()) --top;
    Vertex v = bucket[top].back();
    bucket[top].pop_back();
    if (done[v] || weight[v] != top) continue;
    done[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (done[w]) continue;
      ++weight[w];
      bucket[weight[w]].push_back(w);
      top = std::max(top, weight[w]);
    }
  }
  return order;
}

/// First vertex whose later neighbors (in `elim`) are not a clique, or -1.
inline Vertex first_non_simplicial(const Graph& g, const VertexList& elim) {
  const int n = g.order();
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) pos[elim[i]] = i;
  for (int i = 0; i < n; ++i) {
    Vertex v = elim[i];
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > i && (parent < 0 || pos[w] < pos[parent])) parent = w;
    if (parent < 0) continue;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > i && w != parent && !g.adjacent(parent, w)) return v;
  }
  return -1;
}

/// True iff every vertex is simplicial among the vertices after it.
inline bool is_perfect_elimination_order(const Graph& g, const VertexList& elim) {
  if (static_cast<int>(elim.size()) != g.order()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : elim) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  return first_non_simplicial(g, elim) < 0;
}

inline RecognitionReport is_chordal(const Graph& g) {
  RecognitionReport r;
  r.target = GraphClass::chordal;
  VertexList elim = maximum_cardinality_search(g);
  std::reverse(elim.begin(), elim.end());
  const Vertex bad = first_non_simplicial(g, elim);
  if (bad < 0) {
    r.verdict = true;
    r.certificate.kind = Certificate::Kind::elimination_order;
    r.certificate.lists.push_back(std::move(elim));
    return r;
  }
  r.verdict = false;
  auto cyc = shortest_induced_cycle_through(g, bad);
  if (!cyc) cyc = shortest_induced_cycle(g);
  r.witness.kind = Witness::Kind::induced_cycle;
  r.witness.vertices = *cyc;
  return r;
}

/// Fast membership test without certificates.
inline bool chordal(const Graph& g) {
  VertexList elim = maximum_cardinality_search(g);
  std::reverse(elim.begin(), elim.end());
  return first_non_simplicial(g, elim) < 0;
}

// ---------------------------------------------------------------------------
// Interval graphs: chordal and free of asteroidal triples
// ---------------------------------------------------------------------------

/// For every vertex z, the component label of each vertex in g - N[z]
/// (-1 for vertices of N[z]).
inline std::vector<std::vector<int>> avoidance_components(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> comp(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  std::vector<char> blocked(static_cast<std::size_t>(n));
  std::vector<Vertex> stack;
  for (Vertex z = 0; z < n; ++z) {
    std::fill(blocked.begin(), blocked.end(), 0);
    blocked[z] = 1;
    for (Vertex w : g.neighbors(z)) blocked[w] = 1;
    auto& c = comp[z];
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (blocked[s] || c[s] >= 0) continue;
      c[s] = next;
      stack.push_back(s);
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
          if (!blocked[y] && c[y] < 0) {
            c[y] = next;
            stack.push_back(y);
          }
      }
      ++next;
    }
  }
  return comp;
}

/// Shortest a-b path in g - N[z] (assumes one exists).
inline VertexList path_avoiding(const Graph& g, Vertex a, Vertex b, Vertex z) {
  const int n = g.order();
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  blocked[z] = 1;
  for (Vertex w : g.neighbors(z)) blocked[w] = 1;
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<Vertex> q;
  q.push(a);
  seen[a] = 1;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    if (x == b) break;
    for (Vertex y : g.neighbors(x))
      if (!blocked[y] && !seen[y]) {
        seen[y] = 1;
        parent[y] = x;
        q.push(y);
      }
  }
  if (!seen[b]) return {};
  VertexList path;
  for (Vertex x = b; x != a; x = parent[x]) path.push_back(x);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Visits asteroidal triples (a < b < c) in lexicographic order until
/// `visit` returns false.
inline void for_each_asteroidal_triple(const Graph& g,
                                       const std::function<bool(Vertex, Vertex, Vertex)>& visit,
                                       const std::vector<std::vector<int>>* precomputed = nullptr) {
  std::vector<std::vector<int>> local;
  if (!precomputed) local = avoidance_components(g);
  const auto& comp = precomputed ? *precomputed : local;
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
        if (comp[a][b] >= 0 && comp[a][b] == comp[a][c] && comp[b][a] >= 0 && comp[b][a] == comp[b][c] &&
            comp[c][a] >= 0 && comp[c][a] == comp[c][b]) {
          if (!visit(a, b, c)) return;
        }
      }
    }
}

inline std::optional<std::array<Vertex, 3>> find_asteroidal_triple(const Graph& g) {
  std::optional<std::array<Vertex, 3>> found;
  for_each_asteroidal_triple(g, [&](Vertex a, Vertex b, Vertex c) {
    found = std::array<Vertex, 3>{a, b, c};
    return false;
  });
  return found;
}

inline Witness asteroidal_witness(const Graph& g, Vertex a, Vertex b, Vertex c) {
  Witness w;
  w.kind = Witness::Kind::asteroidal_triple;
  w.vertices = {a, b, c};
  w.paths = {path_avoiding(g, a, b, c), path_avoiding(g, a, c, b), path_avoiding(g, b, c, a)};
  return w;
}

inline bool is_asteroidal_witness(const Graph& g, const Witness& w) {
  if (w.kind != Witness::Kind::asteroidal_triple || w.vertices.size() != 3 || w.paths.size() != 3) return false;
  const Vertex t[3] = {w.vertices[0], w.vertices[1], w.vertices[2]};
  const int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (t[i] == t[j] || g.adjacent(t[i], t[j])) return false;
  for (int k = 0; k < 3; ++k) {
    const auto& p = w.paths[k];
    const Vertex s = t[pairs[k][0]], e = t[pairs[k][1]], z = t[pairs[k][2]];
    if (p.empty() || p.front() != s || p.back() != e) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == z || g.adjacent(p[i], z)) return false;
      if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
    }
  }
  return true;
}

inline RecognitionReport is_interval(const Graph& g) {
  RecognitionReport r = is_chordal(g);
  r.target = GraphClass::interval;
  if (!r.verdict) return r;
  if (auto at = find_asteroidal_triple(g)) {
    r.verdict = false;
    r.certificate = {};
    r.witness = asteroidal_witness(g, (*at)[0], (*at)[1], (*at)[2]);
  }
  return r;
}

inline bool interval(const Graph& g) { return chordal(g) && !find_asteroidal_triple(g); }

// ---------------------------------------------------------------------------
// Unit interval graphs: chordal, claw-, net- and tent-free
// ---------------------------------------------------------------------------

inline RecognitionReport is_unit_interval(const Graph& g) {
  RecognitionReport r = is_chordal(g);
  r.target = GraphClass::unit_interval;
  if (!r.verdict) return r;
  for (Pattern p : {Pattern::claw, Pattern::net, Pattern::tent}) {
    if (auto occ = find_induced_graph(g, pattern_graph(p))) {
      r.verdict = false;
      r.certificate = {};
      r.witness.kind = Witness::Kind::pattern;
      r.witness.pattern = p;
      r.witness.vertices = *occ;
      return r;
    }
  }
  return r;
}

inline bool unit_interval(const Graph& g) {
  if (!chordal(g)) return false;
  for (Pattern p : {Pattern::claw, Pattern::net, Pattern::tent})
    if (find_induced_graph(g, pattern_graph(p))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Forests, caterpillars and unions of paths
// ---------------------------------------------------------------------------

inline bool is_acyclic(const Graph& g) { return cyclomatic_number(g) == 0; }

/// Spine of a tree component: its non-leaf vertices in path order, or empty
/// when they do not induce a path. A single vertex is its own spine; K2 has
/// an empty spine.
inline std::optional<VertexList> tree_spine(const Graph& g, const VertexList& comp) {
  if (comp.size() == 1) return VertexList{comp[0]};
  VertexList inner;
  for (Vertex v : comp)
    if (g.degree(v) >= 2) inner.push_back(v);
  if (inner.empty()) return VertexList{};
  auto inner_deg = [&](Vertex v) {
    int d = 0;
    for (Vertex w : g.neighbors(v))
      if (g.degree(w) >= 2) ++d;
    return d;
  };
  Vertex start = -1;
  for (Vertex v : inner) {
    const int d = inner_deg(v);
    if (d > 2) return std::nullopt;
    if (d <= 1 && start < 0) start = v;
  }
  if (start < 0) return std::nullopt;
  VertexList spine{start};
  Vertex prev = -1, cur = start;
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur))
      if (w != prev && g.degree(w) >= 2) next = w;
    if (next < 0) break;
    spine.push_back(next);
    prev = cur;
    cur = next;
  }
  if (spine.size() != inner.size()) return std::nullopt;
  return spine;
}

inline RecognitionReport forest_report(const Graph& g, GraphClass target) {
  RecognitionReport r;
  r.target = target;
  if (auto cyc = shortest_cycle(g)) {
    r.witness.kind = Witness::Kind::induced_cycle;
    r.witness.vertices = *cyc;
    return r;
  }
  r.verdict = true;
  return r;
}

inline RecognitionReport is_forest(const Graph& g) { return forest_report(g, GraphClass::forest); }

inline RecognitionReport is_tree(const Graph& g) {
  RecognitionReport r = forest_report(g, GraphClass::tree);
  if (!r.verdict) return r;
  auto cd = components(g);
  if (cd.count() > 1) {
    r.verdict = false;
    r.witness.kind = Witness::Kind::disconnected;
    r.witness.vertices = {cd.members[0][0], cd.members[1][0]};
  }
  return r;
}

inline RecognitionReport is_caterpillar_forest(const Graph& g) {
  RecognitionReport r = forest_report(g, GraphClass::caterpillar_forest);
  if (!r.verdict) return r;
  auto cd = components(g);
  Certificate cert;
  cert.kind = Certificate::Kind::spines;
  for (const auto& comp : cd.members) {
    auto spine = tree_spine(g, comp);
    if (!spine) {
      r.verdict = false;
      r.witness.kind = Witness::Kind::pattern;
      r.witness.pattern = Pattern::t2;
      r.witness.vertices = *find_induced_graph(induced_subgraph(g, comp), pattern_graph(Pattern::t2));
      for (auto& v : r.witness.vertices) v = comp[v];
      return r;
    }
    cert.lists.push_back(std::move(*spine));
  }
  r.certificate = std::move(cert);
  return r;
}

inline RecognitionReport is_union_of_paths(const Graph& g) {
  RecognitionReport r;
  r.target = GraphClass::union_of_paths;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) {
      r.witness.kind = Witness::Kind::degree;
      r.witness.vertices = {v};
      return r;
    }
  auto cd = components(g);
  Certificate cert;
  cert.kind = Certificate::Kind::paths;
  for (std::size_t c = 0; c < cd.members.size(); ++c) {
    const auto& comp = cd.members[c];
    if (cd.edge_count[c] >= comp.size()) {
      r.witness.kind = Witness::Kind::induced_cycle;
      // max degree 2 and connected with |E| >= |V|: the component is a cycle.
      VertexList cyc{comp[0]};
      Vertex prev = -1, cur = comp[0];
      while (true) {
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur))
          if (w != prev) {
            next = w;
            break;
          }
        if (next == comp[0]) break;
        cyc.push_back(next);
        prev = cur;
        cur = next;
      }
      r.witness.vertices = std::move(cyc);
      return r;
    }
    Vertex start = comp[0];
    for (Vertex v : comp)
      if (g.degree(v) <= 1) {
        start = v;
        break;
      }
    VertexList path{start};
    Vertex prev = -1, cur = start;
    while (true) {
      Vertex next = -1;
      for (Vertex w : g.neighbors(cur))
        if (w != prev) next = w;
      if (next < 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    cert.lists.push_back(std::move(path));
  }
  r.verdict = true;
  r.certificate = std::move(cert);
  return r;
}

inline bool union_of_paths(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return is_acyclic(g);
}

inline bool caterpillar_forest(const Graph& g) {
  if (!is_acyclic(g)) return false;
  for (const auto& comp : components(g).members)
    if (!tree_spine(g, comp)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

inline RecognitionReport recognize(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::chordal: return is_chordal(g);
    case GraphClass::interval: return is_interval(g);
    case GraphClass::unit_interval: return is_unit_interval(g);
    case GraphClass::caterpillar_forest: return is_caterpillar_forest(g);
    case GraphClass::union_of_paths: return is_union_of_paths(g);
    case GraphClass::forest: return is_forest(g);
    case GraphClass::tree: return is_tree(g);
  }
  throw std::invalid_argument("unknown class");
}

/// Membership only; cheaper than recognize() for the search loops.
inline bool in_class(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::chordal: return chordal(g);
    case GraphClass::interval: return interval(g);
    case GraphClass::unit_interval: return unit_interval(g);
    case GraphClass::caterpillar_forest: return caterpillar_forest(g);
    case GraphClass::union_of_paths: return union_of_paths(g);
    case GraphClass::forest: return is_acyclic(g);
    case GraphClass::tree: return is_acyclic(g) && is_connected(g);
  }
  return false;
}

/// find_induced over pattern tags. For Ck (k >= 4) the shortest induced
/// long cycle is returned as its lexicographically least map.
inline std::optional<VertexList> find_induced(const Graph& g, Pattern p) {
  if (p == Pattern::long_cycle) {
    auto c = shortest_induced_cycle(g);
    if (!c) return std::nullopt;
    return find_induced_graph(g, cycle_graph(static_cast<int>(c->size())));
  }
  return find_induced_graph(g, pattern_graph(p));
}

/// Re-checks a report against `g`: certificates and witnesses must verify.
inline bool report_verifies(const Graph& g, const RecognitionReport& r) {
  if (r.verdict) {
    switch (r.certificate.kind) {
      case Certificate::Kind::elimination_order:
        return r.certificate.lists.size() == 1 && is_perfect_elimination_order(g, r.certificate.lists[0]) &&
               in_class(g, r.target);
      case Certificate::Kind::spines: {
        if (!is_acyclic(g)) return false;
        auto cd = components(g);
        if (r.certificate.lists.size() != static_cast<std::size_t>(cd.count())) return false;
        for (std::size_t c = 0; c < r.certificate.lists.size(); ++c) {
          const auto& spine = r.certificate.lists[c];
          for (std::size_t i = 1; i < spine.size(); ++i)
            if (!g.adjacent(spine[i - 1], spine[i])) return false;
          // every vertex of the component lies on or next to the spine
          for (Vertex v : cd.members[c]) {
            if (spine.empty() || std::find(spine.begin(), spine.end(), v) != spine.end()) continue;
            bool dominated = false;
            for (Vertex s : spine) dominated = dominated || g.adjacent(s, v);
            if (!dominated) return false;
          }
        }
        return true;
      }
      case Certificate::Kind::paths: {
        std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
        std::size_t edges = 0;
        for (const auto& p : r.certificate.lists) {
          for (std::size_t i = 0; i < p.size(); ++i) {
            if (seen[p[i]]) return false;
            seen[p[i]] = 1;
            if (i > 0) {
              if (!g.adjacent(p[i - 1], p[i])) return false;
              ++edges;
            }
          }
        }
        return edges == g.size() &&
               std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
      }
      case Certificate::Kind::none: return in_class(g, r.target);
    }
    return false;
  }
  switch (r.witness.kind) {
    case Witness::Kind::induced_cycle: {
      const auto& c = r.witness.vertices;
      if (!is_induced_cycle(g, c)) return false;
      const bool forest_like = r.target == GraphClass::forest || r.target == GraphClass::tree ||
                               r.target == GraphClass::caterpillar_forest ||
                               r.target == GraphClass::union_of_paths;
      return forest_like || c.size() >= 4;
    }
    case Witness::Kind::pattern:
      return is_induced_occurrence(g, pattern_graph(r.witness.pattern), r.witness.vertices);
    case Witness::Kind::asteroidal_triple: return is_asteroidal_witness(g, r.witness);
    case Witness::Kind::degree:
      return r.witness.vertices.size() == 1 && g.degree(r.witness.vertices[0]) > 2;
    case Witness::Kind::disconnected:
      return r.witness.vertices.size() == 2 &&
             components(g).component_of[r.witness.vertices[0]] != components(g).component_of[r.witness.vertices[1]];
    case Witness::Kind::none: return false;
  }
  return false;
}

}  // namespace vsplit

#endif  // VSPLIT_RECOGNITION_HPP
