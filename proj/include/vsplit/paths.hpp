#ifndef VSPLIT_PATHS_HPP
#define VSPLIT_PATHS_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "vsplit/graph.hpp"
#include "vsplit/splitting.hpp"

namespace vsplit {

struct Trail {
  VertexList walk;   // w0, ..., wL; consecutive vertices joined by distinct edges
  int component = 0;

  std::size_t length() const { return walk.empty() ? 0 : walk.size() - 1; }
  bool closed() const { return walk.size() > 1 && walk.front() == walk.back(); }
};

struct TrailPartition {
  std::vector<Trail> trails;  // grouped by component, components ascending

  std::size_t count() const { return trails.size(); }
};

/// Minimum trail partition of E(g).
///
/// Per component with odd vertices o1 < o2 < ... < o2p, the pairs
/// (o3,o4), (o5,o6), ... get virtual edges, an Euler trail is walked from
/// o1 to o2 and cut at the virtual edges, giving max(p, 1) trails. An
/// Eulerian component yields one closed trail starting at its smallest
/// vertex. Edgeless components contribute nothing.
inline TrailPartition trail_partition(const Graph& g) {
  const int n = g.order();
  const auto cd = components(g);
  const std::vector<Edge> real = g.edges();
  const std::size_t m = real.size();

  std::vector<Edge> ends = real;
  for (const auto& comp : cd.members) {
    VertexList odd;
    for (Vertex v : comp)
      if (g.degree(v) % 2) odd.push_back(v);
    for (std::size_t i = 2; i + 1 < odd.size(); i += 2) ends.emplace_back(odd[i], odd[i + 1]);
  }

  std::vector<std::vector<int>> inc(static_cast<std::size_t>(n));
  for (int e = 0; e < static_cast<int>(ends.size()); ++e) {
    inc[ends[e].u].push_back(e);
    inc[ends[e].v].push_back(e);
  }
  std::vector<char> used(ends.size(), 0);
  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);

  TrailPartition tp;
  for (int c = 0; c < cd.count(); ++c) {
    const auto& comp = cd.members[c];
    if (cd.edge_count[c] == 0) continue;
    Vertex start = comp.front();
    for (Vertex v : comp)
      if (g.degree(v) % 2) {
        start = v;
        break;
      }

    // Iterative Hierholzer; `circuit` collects (vertex, edge used to reach it).
    std::vector<std::pair<Vertex, int>> stack{{start, -1}};
    std::vector<std::pair<Vertex, int>> circuit;
    while (!stack.empty()) {
      const Vertex v = stack.back().first;
      auto& ptr = next[v];
      while (ptr < inc[v].size() && used[inc[v][ptr]]) ++ptr;
      if (ptr == inc[v].size()) {
        circuit.push_back(stack.back());
        stack.pop_back();
        continue;
      }
      const int e = inc[v][ptr];
      used[e] = 1;
      const Vertex w = ends[e].u == v ? ends[e].v : ends[e].u;
      stack.emplace_back(w, e);
    }
    std::reverse(circuit.begin(), circuit.end());

    Trail cur;
    cur.component = c;
    cur.walk.push_back(circuit.front().first);
    for (std::size_t i = 1; i < circuit.size(); ++i) {
      const auto [v, e] = circuit[i];
      if (static_cast<std::size_t>(e) >= m) {
        tp.trails.push_back(std::move(cur));
        cur = Trail{};
        cur.component = c;
        cur.walk.push_back(v);
      } else {
        cur.walk.push_back(v);
      }
    }
    tp.trails.push_back(std::move(cur));
  }
  return tp;
}

/// Minimum number of splits turning g into a disjoint union of paths:
/// sum over v of (ceil(d(v)/2) - 1), plus one per component without
/// odd-degree vertices.
inline long min_splits_to_paths(const Graph& g) {
  long total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += (g.degree(v) + 1) / 2 - 1;
  const auto cd = components(g);
  for (int c = 0; c < cd.count(); ++c)
    if (cd.odd_degree_count[c] == 0) ++total;
  return total;
}

/// Per-vertex edge blocks induced by a trail partition: every pass of a
/// trail through v contributes its two edges, every trail end one edge.
/// Blocks hold neighbor ids in g.
inline std::vector<std::vector<VertexList>> trail_blocks(const Graph& g, const TrailPartition& tp) {
  std::vector<std::vector<VertexList>> blocks(static_cast<std::size_t>(g.order()));
  for (const Trail& t : tp.trails) {
    const auto& w = t.walk;
    const std::size_t len = t.length();
    if (len == 0) continue;
    blocks[w[0]].push_back({w[1]});
    for (std::size_t i = 1; i < len; ++i) blocks[w[i]].push_back({w[i - 1], w[i + 1]});
    blocks[w[len]].push_back({w[len - 1]});
  }
  return blocks;
}

/// Optimal split sequence into a union of paths: each vertex gets one copy
/// per block of the trail partition above, peeled off one split at a time
/// (vertices in ascending order, last block first).
inline SplitSequence split_sequence_to_paths(const Graph& g, const TrailPartition& tp) {
  const auto blocks = trail_blocks(g, tp);
  // holder[v][k]: current id of the copy of neighbor k (k-th entry of N(v))
  // that holds the edge towards v.
  std::vector<VertexList> holder(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) holder[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  auto slot = [&](Vertex v, Vertex w) {
    auto nv = g.neighbors(v);
    return static_cast<std::size_t>(std::lower_bound(nv.begin(), nv.end(), w) - nv.begin());
  };

  SplitSequence seq;
  Vertex next_id = g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& bl = blocks[v];
    if (bl.size() < 2) continue;
    for (std::size_t k = bl.size() - 1; k >= 1; --k) {
      Split s;
      s.target = v;
      for (std::size_t b = 0; b < k; ++b)
        for (Vertex w : bl[b]) s.part_a.push_back(holder[v][slot(v, w)]);
      for (Vertex w : bl[k]) s.part_b.push_back(holder[v][slot(v, w)]);
      std::sort(s.part_a.begin(), s.part_a.end());
      std::sort(s.part_b.begin(), s.part_b.end());
      const Vertex fresh = next_id++;
      for (Vertex w : bl[k]) holder[w][slot(w, v)] = fresh;
      seq.push_back(std::move(s));
    }
  }
  return seq;
}

inline SplitSequence split_sequence_to_paths(const Graph& g) { return split_sequence_to_paths(g, trail_partition(g)); }

}  // namespace vsplit

#endif  // VSPLIT_PATHS_HPP
