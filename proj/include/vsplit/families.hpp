#ifndef VSPLIT_FAMILIES_HPP
#define VSPLIT_FAMILIES_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vsplit/graph.hpp"
#include "vsplit/recognition.hpp"
#include "vsplit/solvers.hpp"
#include "vsplit/splitting.hpp"

namespace vsplit {

// ---------------------------------------------------------------------------
// Named graphs
// ---------------------------------------------------------------------------

/// v = 0, a_i = i, b_i = k + i, c_i = 2k + i (i = 1..k). The a's, b's and
/// c's form cliques; v sees every a and c, and a-b, b-c are complete.
inline Graph fig4_gk(int k) {
  if (k < 1) throw std::invalid_argument("fig4_gk needs k >= 1");
  std::vector<std::pair<Vertex, Vertex>> e;
  auto a = [&](int i) { return i; };
  auto b = [&](int i) { return k + i; };
  auto c = [&](int i) { return 2 * k + i; };
  for (int i = 1; i <= k; ++i) {
    e.emplace_back(0, a(i));
    e.emplace_back(0, c(i));
    for (int j = 1; j <= k; ++j) {
      e.emplace_back(a(i), b(j));
      e.emplace_back(b(i), c(j));
      if (i < j) {
        e.emplace_back(a(i), a(j));
        e.emplace_back(b(i), b(j));
        e.emplace_back(c(i), c(j));
      }
    }
  }
  std::vector<std::string> labels{"v"};
  for (char side : {'a', 'b', 'c'})
    for (int i = 1; i <= k; ++i) labels.push_back(std::string(1, side) + std::to_string(i));
  return Graph::from_edges(3 * k + 1, e).with_labels(std::move(labels));
}

/// A star K_{1,k} with every edge replaced by a 4-cycle: center 0, cycle
/// i is 0 - 3i+1 - 3i+2 - 3i+3 - 0.
inline Graph star_of_c4(int k) {
  if (k < 1) throw std::invalid_argument("star_of_c4 needs k >= 1");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < k; ++i) {
    const int x = 3 * i;
    e.insert(e.end(), {{0, x + 1}, {x + 1, x + 2}, {x + 2, x + 3}, {x + 3, 0}});
  }
  return Graph::from_edges(3 * k + 1, e);
}

/// Nine vertices, α = 2: cliques {0,1,2,3} and {4,5,6}, plus 7 and 8.
inline Graph fig6_graph() {
  return Graph::from_edges(9, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6},
                               {3, 4}, {3, 5}, {3, 6}, {2, 5}, {2, 6}, {1, 6}, {7, 0}, {7, 1}, {7, 3},
                               {7, 4}, {7, 6}, {7, 8}, {8, 0}, {8, 1}, {8, 2}, {8, 4}, {8, 5}});
}

/// The six-vertex cubic graph: hexagon 0..5 with chords 0-2, 3-5, 1-4.
inline Graph fig2_cubic() {
  return Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {3, 5}, {1, 4}});
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Graph prism_graph() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph cube_graph() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (!(v & bit)) e.emplace_back(v, v | bit);
  return Graph::from_edges(8, e);
}

/// Connected cubic graph without a Hamiltonian path: vertex 0 is joined by
/// bridges to three blobs, each a K4 with one edge subdivided (the
/// subdivision vertex takes the bridge). Three leaf blocks rule out a path.
inline Graph no_hampath_cubic() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int blob = 0; blob < 3; ++blob) {
    const int s = 1 + 5 * blob, a = s + 1, b = s + 2, c = s + 3, d = s + 4;
    e.insert(e.end(), {{0, s}, {s, a}, {s, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, d}});
  }
  return Graph::from_edges(16, e);
}

inline const std::vector<std::string>& cubic_sample_names() {
  static const std::vector<std::string> names{"k4", "prism", "cube", "fig2", "no-hampath"};
  return names;
}

inline Graph cubic_sample(const std::string& name) {
  if (name == "k4") return complete_graph(4);
  if (name == "prism") return prism_graph();
  if (name == "cube") return cube_graph();
  if (name == "fig2") return fig2_cubic();
  if (name == "no-hampath") return no_hampath_cubic();
  throw std::invalid_argument("unknown cubic sample: " + name);
}

/// Family generator by tag. Parameters: fig4-gk k, star-of-c4 k,
/// t-d-star t d, cycle n, path n, complete n, cubic name.
inline Graph gen_family(const std::string& tag, const std::vector<std::string>& params = {}) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument(tag + " takes " + std::to_string(count) + " parameter(s)");
  };
  auto num = [&](std::size_t i) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(params[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != params[i].size() || params[i].empty())
      throw std::invalid_argument("bad numeric parameter: " + params[i]);
    return v;
  };
  if (tag == "fig4-gk") return need(1), fig4_gk(num(0));
  if (tag == "star-of-c4") return need(1), star_of_c4(num(0));
  if (tag == "fig6") return need(0), fig6_graph();
  if (tag == "claw") return need(0), pattern_graph(Pattern::claw);
  if (tag == "net") return need(0), pattern_graph(Pattern::net);
  if (tag == "tent") return need(0), pattern_graph(Pattern::tent);
  if (tag == "t2") return need(0), pattern_graph(Pattern::t2);
  if (tag == "t-d-star") return need(2), spider_graph(num(0), num(1));
  if (tag == "cycle") return need(1), cycle_graph(num(0));
  if (tag == "path") return need(1), path_graph(num(0));
  if (tag == "complete") {
    need(1);
    if (num(0) < 1) throw std::invalid_argument("complete needs n >= 1");
    return complete_graph(num(0));
  }
  if (tag == "cubic") return need(1), cubic_sample(params[0]);
  throw std::invalid_argument("unknown family: " + tag);
}

inline const std::vector<std::string>& family_tags() {
  static const std::vector<std::string> tags{"fig4-gk", "star-of-c4", "fig6",  "claw",     "net",
                                             "tent",    "t2",         "t-d-star", "cycle", "path",
                                             "complete", "cubic"};
  return tags;
}

// ---------------------------------------------------------------------------
// Hamiltonian path -> exclusive splitting into interval graphs
// ---------------------------------------------------------------------------

struct ReductionInstance {
  Graph source;
  Graph subdivided;           // u_i = i, u_ij = n + index of edge ij in source.edges()
  std::vector<Edge> edges;    // source edges, sorted
  int budget = 0;             // n/2 + 1

  int n() const { return source.order(); }
  Vertex edge_vertex(Vertex i, Vertex j) const {
    const Edge e(i, j);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) throw std::invalid_argument("not an edge of the source graph");
    return n() + static_cast<Vertex>(it - edges.begin());
  }
};

/// Every edge ij (i < j) becomes the path u_i - u_ij - u_j. Labels are
/// "u<i>" and "u<i>_<j>".
inline Graph subdivide_once(const Graph& g) {
  const int n = g.order();
  const std::vector<Edge> edges = g.edges();
  std::vector<std::pair<Vertex, Vertex>> out;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Vertex x = n + static_cast<Vertex>(k);
    out.emplace_back(edges[k].u, x);
    out.emplace_back(edges[k].v, x);
    labels.push_back("u" + std::to_string(edges[k].u) + "_" + std::to_string(edges[k].v));
  }
  return Graph::from_edges(n + static_cast<int>(edges.size()), out).with_labels(std::move(labels));
}

inline ReductionInstance reduce_hampath_to_ivxs(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) throw std::invalid_argument("reduction needs a cubic graph");
  if (!is_connected(g)) throw std::invalid_argument("reduction needs a connected graph");
  ReductionInstance inst;
  inst.source = g;
  inst.subdivided = subdivide_once(g);
  inst.edges = g.edges();
  inst.budget = g.order() / 2 + 1;
  return inst;
}

/// Splits every edge vertex off the Hamiltonian path into two pendant
/// copies ({u_i} and {u_j}, i < j), in edge order.
inline SplitSequence forward_witness(const ReductionInstance& inst, const VertexList& hampath) {
  if (!is_hamiltonian_path(inst.source, hampath)) throw std::invalid_argument("not a Hamiltonian path of the source");
  std::vector<char> on_path(inst.edges.size(), 0);
  for (std::size_t i = 1; i < hampath.size(); ++i)
    on_path[inst.edge_vertex(hampath[i - 1], hampath[i]) - inst.n()] = 1;
  SplitSequence seq;
  for (std::size_t k = 0; k < inst.edges.size(); ++k)
    if (!on_path[k]) seq.push_back(Split{inst.n() + static_cast<Vertex>(k), {inst.edges[k].u}, {inst.edges[k].v}});
  return seq;
}

/// Reads a Hamiltonian path of the source off a solution: the result is a
/// caterpillar whose spine, extended by original-vertex leaves at its ends,
/// passes through every copy of an original vertex; contracting the edge
/// vertices gives a trail of the source. If original vertices were split,
/// only trail endpoints can repeat (degree 3), and dropping repeated ends
/// leaves a Hamiltonian path.
inline VertexList extract_hampath(const ReductionInstance& inst, const SplitSequence& seq) {
  if (!is_exclusive(seq)) throw std::invalid_argument("sequence is not exclusive");
  if (static_cast<int>(seq.size()) > inst.budget) throw std::invalid_argument("sequence exceeds the budget");
  const auto [t, desc] = apply_sequence(inst.subdivided, seq);
  if (!interval(t)) throw std::invalid_argument("sequence does not yield an interval graph");
  if (!is_acyclic(t) || !is_connected(t)) throw std::logic_error("interval result is not a tree");
  const VertexList all = [&] {
    VertexList v(static_cast<std::size_t>(t.order()));
    for (int i = 0; i < t.order(); ++i) v[i] = i;
    return v;
  }();
  auto spine = tree_spine(t, all);
  if (!spine || spine->empty()) throw std::logic_error("result is not a caterpillar");

  const int n = inst.n();
  auto is_u = [&](Vertex x) { return desc.origin[x] < n; };
  auto end_leaf = [&](Vertex end, Vertex inner) {
    Vertex best = -1;
    for (Vertex w : t.neighbors(end))
      if (w != inner && t.degree(w) == 1 && is_u(w) && (best < 0 || desc.origin[w] < desc.origin[best])) best = w;
    return best;
  };
  VertexList path = *spine;
  if (!is_u(path.front())) {
    const Vertex l = end_leaf(path.front(), path.size() > 1 ? path[1] : -1);
    if (l >= 0) path.insert(path.begin(), l);
  }
  if (!is_u(path.back())) {
    const Vertex l = end_leaf(path.back(), path.size() > 1 ? path[path.size() - 2] : -1);
    if (l >= 0) path.push_back(l);
  }

  VertexList walk;
  for (Vertex x : path)
    if (is_u(x)) walk.push_back(desc.origin[x]);
  std::size_t u_copies = 0;
  for (int x = 0; x < t.order(); ++x) u_copies += is_u(x) ? 1 : 0;
  if (walk.size() != u_copies) throw std::logic_error("some original vertex is off the spine");

  auto count = [&](Vertex v) { return std::count(walk.begin(), walk.end(), v); };
  bool changed = true;
  while (changed && walk.size() > 1) {
    changed = false;
    if (count(walk.front()) > 1) {
      walk.erase(walk.begin());
      changed = true;
    }
    if (walk.size() > 1 && count(walk.back()) > 1) {
      walk.pop_back();
      changed = true;
    }
  }
  if (!is_hamiltonian_path(inst.source, walk)) throw std::logic_error("extracted order is not a Hamiltonian path");
  return walk;
}

}  // namespace vsplit

#endif  // VSPLIT_FAMILIES_HPP
