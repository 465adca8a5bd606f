#ifndef VSPLIT_GRAPH_HPP
#define VSPLIT_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vsplit {

using Vertex = int;
using VertexList = std::vector<Vertex>;

/// Unordered vertex pair, stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class BuildMode { strict, lenient };

/// Simple undirected graph on dense ids 0..n-1.
///
/// Values are immutable once built. Adjacency is kept as sorted neighbor
/// lists; graphs up to kBitsetLimit vertices also carry one bitset row per
/// vertex so that adjacency tests are O(1) in the exact solvers.
class Graph {
 public:
  static constexpr int kBitsetLimit = 4096;

  Graph() = default;

  /// Builds a graph from an edge list. In strict mode self-loops and repeated
  /// pairs are errors; in lenient mode they are dropped and counted in
  /// `dropped` (when given).
  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> pairs,
                          BuildMode mode = BuildMode::strict, std::size_t* dropped = nullptr) {
    if (n < 0) throw GraphError("negative vertex count");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    std::size_t skipped = 0;
    for (const auto& [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw GraphError("edge endpoint out of range: " + std::to_string(a) + " " +
                         std::to_string(b) + " (n = " + std::to_string(n) + ")");
      }
      if (a == b) {
        if (mode == BuildMode::strict) throw GraphError("self-loop at vertex " + std::to_string(a));
        ++skipped;
        continue;
      }
      edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    if (last != edges.end()) {
      if (mode == BuildMode::strict) {
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        throw GraphError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
      }
      skipped += static_cast<std::size_t>(edges.end() - last);
      edges.erase(last, edges.end());
    }
    if (dropped) *dropped = skipped;
    return from_sorted_unique(n, edges);
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs,
                          BuildMode mode = BuildMode::strict) {
    std::vector<std::pair<Vertex, Vertex>> v(pairs);
    return from_edges(n, v, mode);
  }

  /// Edges must be normalized, sorted and duplicate free.
  static Graph from_sorted_unique(int n, std::span<const Edge> edges) {
    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.adj_.assign(static_cast<std::size_t>(n), {});
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    for (int v = 0; v < n; ++v) g.adj_[v].reserve(deg[v]);
    for (const Edge& e : edges) {
      g.adj_[e.u].push_back(e.v);
      g.adj_[e.v].push_back(e.u);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    g.build_bits();
    return g;
  }

  /// Builds from per-vertex neighbor lists (must be symmetric, loop free).
  static Graph from_adjacency(std::vector<VertexList> adj) {
    Graph g;
    g.n_ = static_cast<int>(adj.size());
    std::size_t twice = 0;
    for (auto& row : adj) {
      std::sort(row.begin(), row.end());
      twice += row.size();
    }
    g.m_ = twice / 2;
    g.adj_ = std::move(adj);
    g.build_bits();
    return g;
  }

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(Vertex a, Vertex b) const {
    if (a == b) return false;
    if (!bits_.empty()) return (bits_[a * words_ + (b >> 6)] >> (b & 63)) & 1U;
    const auto& row = adj_[a];
    return std::binary_search(row.begin(), row.end(), b);
  }

  /// Bitset row of `v`; only valid when has_bitsets().
  std::span<const std::uint64_t> row_bits(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  bool has_bitsets() const { return !bits_.empty() || n_ == 0; }
  std::size_t words() const { return words_; }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }
  const std::vector<std::string>& labels() const { return labels_; }

  Graph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
      throw GraphError("label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }

  const std::vector<VertexList>& adjacency() const { return adj_; }

  /// Structural equality (labels ignored).
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void build_bits() {
    bits_.clear();
    words_ = (static_cast<std::size_t>(n_) + 63) / 64;
    if (n_ == 0 || n_ > kBitsetLimit) return;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int u = 0; u < n_; ++u)
      for (Vertex v : adj_[u]) bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexList> adj_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

inline Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs,
                         BuildMode mode = BuildMode::strict, std::size_t* dropped = nullptr) {
  return Graph::from_edges(n, pairs, mode, dropped);
}

inline Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_sorted_unique(n, edges).with_labels(g.labels());
}

/// Subgraph induced by `keep` (sorted, distinct); vertices renumbered in
/// the order given. Labels follow the kept vertices.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  std::vector<VertexList> adj(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : g.neighbors(keep[i]))
      if (pos[w] >= 0) adj[i].push_back(pos[w]);
  Graph h = Graph::from_adjacency(std::move(adj));
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (Vertex v : keep) labels.push_back(g.label(v));
    h = h.with_labels(std::move(labels));
  }
  return h;
}

/// g minus the listed vertices (renumbered densely, order preserved).
inline Graph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) gone[v] = 1;
  VertexList keep;
  for (int v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

/// g minus the listed edges (all must exist).
inline Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> all = g.edges();
  std::vector<Edge> rem(removed.begin(), removed.end());
  std::sort(rem.begin(), rem.end());
  std::vector<Edge> out;
  std::set_difference(all.begin(), all.end(), rem.begin(), rem.end(), std::back_inserter(out));
  if (out.size() + rem.size() != all.size()) throw GraphError("removed edge not present");
  return Graph::from_sorted_unique(g.order(), out).with_labels(g.labels());
}

/// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (Edge e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph::from_sorted_unique(a.order() + b.order(), edges);
}

struct ComponentDecomposition {
  std::vector<int> component_of;            // per vertex
  std::vector<VertexList> members;          // per component, ascending
  std::vector<int> odd_degree_count;        // per component
  std::vector<std::size_t> edge_count;      // per component

  int count() const { return static_cast<int>(members.size()); }
};

/// Connected components, numbered by their smallest vertex.
inline ComponentDecomposition components(const Graph& g) {
  const int n = g.order();
  ComponentDecomposition cd;
  cd.component_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (int s = 0; s < n; ++s) {
    if (cd.component_of[s] >= 0) continue;
    const int id = cd.count();
    cd.members.emplace_back();
    cd.odd_degree_count.push_back(0);
    cd.edge_count.push_back(0);
    cd.component_of[s] = id;
    stack.push_back(s);
    std::size_t deg_sum = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      cd.members[id].push_back(v);
      deg_sum += static_cast<std::size_t>(g.degree(v));
      if (g.degree(v) % 2) ++cd.odd_degree_count[id];
      for (Vertex w : g.neighbors(v))
        if (cd.component_of[w] < 0) {
          cd.component_of[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(cd.members[id].begin(), cd.members[id].end());
    cd.edge_count[id] = deg_sum / 2;
  }
  return cd;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).count() == 1; }

/// Returns a triangle (ascending ids) if one exists.
inline std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    auto nu = g.neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (nu[i] < u) continue;
      for (std::size_t j = i + 1; j < nu.size(); ++j)
        if (g.adjacent(nu[i], nu[j])) return std::array<Vertex, 3>{u, nu[i], nu[j]};
    }
  }
  return std::nullopt;
}

inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

/// Returns an independent triple (ascending ids) if alpha(g) > 2.
inline std::optional<std::array<Vertex, 3>> find_independent_triple(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c)
        if (!g.adjacent(a, c) && !g.adjacent(b, c)) return std::array<Vertex, 3>{a, b, c};
    }
  return std::nullopt;
}

inline bool independence_at_most_two(const Graph& g) { return !find_independent_triple(g).has_value(); }

struct BipartiteResult {
  bool bipartite = true;
  std::vector<int> color;   // 0/1 per vertex when bipartite
  VertexList odd_cycle;     // closed walk order when not bipartite
};

inline BipartiteResult is_bipartite(const Graph& g) {
  const int n = g.order();
  BipartiteResult r;
  r.color.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (r.color[s] >= 0) continue;
    r.color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (r.color[w] < 0) {
          r.color[w] = 1 - r.color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          q.push(w);
        } else if (r.color[w] == r.color[v]) {
          // Same-level edge closes an odd cycle through the BFS tree.
          VertexList left{v}, right{w};
          Vertex a = v, b = w;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          // v .. lca .. w, closed by the edge w-v.
          r.bipartite = false;
          r.odd_cycle = std::move(left);
          r.color.clear();
          return r;
        }
      }
    }
  }
  return r;
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Length of a shortest cycle; kInfiniteGirth for forests.
inline int girth(const Graph& g) {
  const int n = g.order();
  int best = kInfiniteGirth;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      if (2 * dist[v] + 1 >= best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

/// |E| - |V| + #components: number of independent cycles.
inline long cyclomatic_number(const Graph& g) {
  return static_cast<long>(g.size()) - g.order() + components(g).count();
}

}  // namespace vsplit

#endif  // VSPLIT_GRAPH_HPP
