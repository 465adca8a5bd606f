// Brute-force reference implementations and random generators for tests.
// Nothing here calls the library's recognizers or solvers.
#ifndef VSPLIT_TESTS_ORACLES_HPP
#define VSPLIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <string>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "vsplit/graph.hpp"

namespace oracle {

using vsplit::Edge;
using vsplit::Graph;
using vsplit::Vertex;
using vsplit::VertexList;

using Rng = std::mt19937_64;

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& e) {
  return Graph::from_edges(n, std::span<const std::pair<int, int>>(e));
}

inline Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return from_edges(n, e);
}

/// Random edges in random order, skipping any that close a triangle.
inline Graph random_triangle_free(Rng& rng, int n, double p) {
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  std::shuffle(all.begin(), all.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : all) {
    if (!coin(rng)) continue;
    bool tri = false;
    for (int c = 0; c < n && !tri; ++c) tri = adj[a][c] && adj[b][c];
    if (tri) continue;
    adj[a][b] = adj[b][a] = 1;
    e.emplace_back(a, b);
  }
  return from_edges(n, e);
}

/// Complement of a random triangle-free graph: independence number <= 2.
inline Graph random_alpha2(Rng& rng, int n, double p) {
  Graph t = random_triangle_free(rng, n, p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!t.adjacent(i, j)) e.emplace_back(i, j);
  return from_edges(n, e);
}

/// Random chordal graph: each new vertex joins a random clique of the
/// graph built so far (a subset of an existing vertex's earlier clique
/// neighborhood), so the reverse insertion order is a perfect elimination
/// order.
inline Graph random_chordal(Rng& rng, int n) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    const int anchor = pick(rng);
    std::vector<int> clique{anchor};
    for (int u = 0; u < v; ++u)
      if (u != anchor && adj[anchor][u] && std::bernoulli_distribution(0.5)(rng)) {
        bool ok = true;
        for (int w : clique) ok = ok && adj[u][w];
        if (ok) clique.push_back(u);
      }
    if (std::bernoulli_distribution(0.15)(rng)) clique.clear();
    for (int u : clique) {
      adj[u][v] = adj[v][u] = 1;
      e.emplace_back(u, v);
    }
  }
  return from_edges(n, e);
}

/// Random labelled tree from a Pruefer sequence.
inline Graph random_tree(Rng& rng, int n) {
  if (n <= 1) return from_edges(n, {});
  if (n == 2) return from_edges(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> deg(n, 1);
  for (int c : code) ++deg[c];
  std::vector<std::pair<int, int>> e;
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf)
      if (deg[leaf] == 1) {
        e.emplace_back(leaf, c);
        --deg[leaf];
        --deg[c];
        break;
      }
  }
  int u = -1, w = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) (u < 0 ? u : w) = v;
  e.emplace_back(u, w);
  return from_edges(n, e);
}

inline bool connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int count = 1;
  while (!st.empty()) {
    int x = st.back();
    st.pop_back();
    for (int y : g.neighbors(x))
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        st.push_back(y);
      }
  }
  return count == g.order();
}

// ---------------------------------------------------------------------------
// Subset-based predicates (small n)
// ---------------------------------------------------------------------------

/// True when the subgraph induced by `mask` is a cycle of length >= min_len.
inline bool induces_cycle(const Graph& g, std::uint32_t mask, int min_len) {
  const int k = std::popcount(mask);
  if (k < min_len || k < 3) return false;
  int start = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (!(mask >> v & 1u)) continue;
    int d = 0;
    for (int w : g.neighbors(v)) d += (mask >> w & 1u) ? 1 : 0;
    if (d != 2) return false;
    if (start < 0) start = v;
  }
  // connected?
  std::uint32_t seen = 1u << start;
  std::vector<int> st{start};
  while (!st.empty()) {
    int x = st.back();
    st.pop_back();
    for (int y : g.neighbors(x))
      if ((mask >> y & 1u) && !(seen >> y & 1u)) {
        seen |= 1u << y;
        st.push_back(y);
      }
  }
  return seen == mask;
}

inline bool has_induced_cycle_at_least(const Graph& g, int min_len) {
  const std::uint32_t full = (1u << g.order()) - 1u;
  for (std::uint32_t m = 1; m <= full; ++m)
    if (induces_cycle(g, m, min_len)) return true;
  return false;
}

inline bool chordal(const Graph& g) { return !has_induced_cycle_at_least(g, 4); }

inline int independence_number(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (m >> v & 1u)
        for (int w : g.neighbors(v))
          if (m >> w & 1u) ok = false;
    if (ok) best = std::max(best, std::popcount(m));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Isomorphism by brute force (n <= 8)
// ---------------------------------------------------------------------------

inline std::uint64_t edge_code(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::uint64_t code = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (g.adjacent(perm[i], perm[j])) code |= std::uint64_t{1} << bit;
  return code;
}

inline std::uint64_t canonical_code(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, edge_code(g, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

/// One representative per isomorphism class of connected graphs on n
/// vertices (n <= 6).
inline std::vector<Graph> connected_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (m >> b & 1u) e.push_back(slots[b]);
    if (static_cast<int>(e.size()) < n - 1) continue;
    Graph g = from_edges(n, e);
    if (!connected(g)) continue;
    if (seen.insert(canonical_code(g)).second) out.push_back(g);
  }
  return out;
}

/// AHU encoding of a tree rooted at its center(s); equal iff isomorphic.
inline std::string tree_code(const Graph& g) {
  const int n = g.order();
  if (n == 0) return "";
  std::function<std::string(int, int)> enc = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int w : g.neighbors(v))
      if (w != parent) kids.push_back(enc(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
  };
  std::vector<int> deg(n), layer;
  std::vector<char> gone(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int left = n;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  while (left > 2) {
    std::vector<int> next;
    for (int v : layer) {
      gone[v] = 1;
      --left;
      for (int w : g.neighbors(v))
        if (!gone[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = next;
  }
  std::string best;
  for (int c = 0; c < n; ++c)
    if (!gone[c]) {
      std::string s = enc(c, -1);
      if (best.empty() || s < best) best = s;
    }
  return best;
}

/// One tree per isomorphism class on n vertices, grown leaf by leaf.
inline std::vector<Graph> trees(int n) {
  std::vector<Graph> level{from_edges(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& t : level)
      for (int v = 0; v < t.order(); ++v) {
        auto e = t.edges();
        std::vector<std::pair<int, int>> pairs;
        for (auto x : e) pairs.emplace_back(x.u, x.v);
        pairs.emplace_back(v, k - 1);
        Graph g = from_edges(k, pairs);
        if (seen.insert(tree_code(g)).second) next.push_back(g);
      }
    level = std::move(next);
  }
  return n <= 0 ? std::vector<Graph>{} : level;
}

// ---------------------------------------------------------------------------
// Trails (m <= ~12)
// ---------------------------------------------------------------------------

/// Minimum number of trails partitioning E, by explicit trail enumeration
/// and a DP over edge subsets.
inline int min_trail_partition(const Graph& g) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m == 0) return 0;
  std::vector<char> is_trail(std::size_t{1} << m, 0);
  std::vector<std::vector<std::pair<int, int>>> inc(g.order());  // (edge, other end)
  for (int i = 0; i < m; ++i) {
    inc[edges[i].u].push_back({i, edges[i].v});
    inc[edges[i].v].push_back({i, edges[i].u});
  }
  std::function<void(int, std::uint32_t)> walk = [&](int v, std::uint32_t used) {
    is_trail[used] = 1;
    for (auto [e, w] : inc[v])
      if (!(used >> e & 1u)) walk(w, used | (1u << e));
  };
  for (int v = 0; v < g.order(); ++v) walk(v, 0);
  std::vector<int> best(std::size_t{1} << m, 1 << 20);
  best[0] = 0;
  for (std::uint32_t s = 1; s < (1u << m); ++s) {
    const int low = std::countr_zero(s);
    // subsets of s containing the lowest edge
    const std::uint32_t rest = s & ~(1u << low);
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t t = sub | (1u << low);
      if (is_trail[t]) best[s] = std::min(best[s], 1 + best[s & ~t]);
      if (sub == 0) break;
    }
  }
  return best[(1u << m) - 1];
}

// ---------------------------------------------------------------------------
// Cubic graphs
// ---------------------------------------------------------------------------

/// Hamiltonian path by plain backtracking (independent of the subset DP).
inline bool has_hamiltonian_path(const Graph& g) {
  const int n = g.order();
  std::vector<char> used(n, 0);
  std::function<bool(int, int)> go = [&](int v, int depth) {
    if (depth == n) return true;
    for (int w : g.neighbors(v))
      if (!used[w]) {
        used[w] = 1;
        if (go(w, depth + 1)) return true;
        used[w] = 0;
      }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    used.assign(n, 0);
    used[s] = 1;
    if (go(s, 1)) return true;
  }
  return n == 0;
}

/// Visits connected cubic graphs on n vertices (labelled, with N(0) fixed
/// to {1,2,3}, which loses no isomorphism class). Stops when visit returns
/// false.
inline void for_each_connected_cubic(int n, const std::function<bool(const Graph&)>& visit) {
  if (n < 4 || n % 2) return;
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {0, 3}};
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [a, b] : e) {
    adj[a][b] = adj[b][a] = 1;
    ++deg[a];
    ++deg[b];
  }
  bool stop = false;
  std::function<void()> fill = [&] {
    if (stop) return;
    int v = 0;
    while (v < n && deg[v] == 3) ++v;
    if (v == n) {
      Graph g = from_edges(n, e);
      if (connected(g) && !visit(g)) stop = true;
      return;
    }
    for (int w = v + 1; w < n && !stop; ++w) {
      if (deg[w] == 3 || adj[v][w] || w == 0) continue;
      adj[v][w] = adj[w][v] = 1;
      ++deg[v];
      ++deg[w];
      e.emplace_back(v, w);
      fill();
      e.pop_back();
      --deg[v];
      --deg[w];
      adj[v][w] = adj[w][v] = 0;
    }
  };
  fill();
}

}  // namespace oracle

#endif  // VSPLIT_TESTS_ORACLES_HPP
