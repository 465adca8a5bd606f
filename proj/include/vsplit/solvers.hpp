#ifndef VSPLIT_SOLVERS_HPP
#define VSPLIT_SOLVERS_HPP

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vsplit/graph.hpp"
#include "vsplit/recognition.hpp"
#include "vsplit/splitting.hpp"

namespace vsplit {

enum class SplitMode { inclusive, exclusive };

enum class Modification { splits, exclusive_splits, vertex_deletion, edge_deletion };

/// Parameter names such as ChVS, IVXS, UIVS, PVS, ChVD, ChED.
inline std::string parameter_tag(GraphClass target, Modification m) {
  std::string p;
  switch (target) {
    case GraphClass::chordal: p = "Ch"; break;
    case GraphClass::interval: p = "I"; break;
    case GraphClass::unit_interval: p = "UI"; break;
    case GraphClass::union_of_paths: p = "P"; break;
    case GraphClass::caterpillar_forest: p = "Cat"; break;
    case GraphClass::forest: p = "F"; break;
    case GraphClass::tree: p = "T"; break;
  }
  switch (m) {
    case Modification::splits: return p + "VS";
    case Modification::exclusive_splits: return p + "VXS";
    case Modification::vertex_deletion: return p + "VD";
    case Modification::edge_deletion: return p + "ED";
  }
  return p;
}

inline std::pair<GraphClass, Modification> parse_parameter(std::string_view tag) {
  for (GraphClass c : {GraphClass::chordal, GraphClass::interval, GraphClass::unit_interval,
                       GraphClass::union_of_paths, GraphClass::caterpillar_forest, GraphClass::forest})
    for (Modification m : {Modification::splits, Modification::exclusive_splits, Modification::vertex_deletion,
                           Modification::edge_deletion})
      if (parameter_tag(c, m) == tag) return {c, m};
  throw std::invalid_argument("unknown parameter: " + std::string(tag));
}

enum class SolveStatus { optimal, lower_bound, budget_exceeded };

inline std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::lower_bound: return "lower-bound";
    case SolveStatus::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

struct SolverReport {
  std::string parameter;
  SolveStatus status = SolveStatus::budget_exceeded;
  int optimum = -1;     // set when status == optimal
  int lower_bound = 0;  // certified: optimum >= lower_bound
  SplitSequence splits;
  VertexList vertices;
  std::vector<Edge> edges;
  long long nodes = 0;
  double seconds = 0;

  bool optimal() const { return status == SolveStatus::optimal; }
};

struct SearchOptions {
  SplitMode mode = SplitMode::inclusive;
  int k_max = 4;
  long long node_budget = 0;  // 0: unlimited
  double time_budget = 0;     // seconds, 0: unlimited
  bool prune_dominated = true;
  bool use_bounds = true;
  bool use_memo = true;

  /// Plain exhaustive search: every ordered cover, no bounds, no memo.
  static SearchOptions unpruned(SplitMode mode, int k_max) {
    SearchOptions o;
    o.mode = mode;
    o.k_max = k_max;
    o.prune_dominated = o.use_bounds = o.use_memo = false;
    return o;
  }
};

namespace detail {

struct BudgetExceeded {};

class Budget {
 public:
  Budget(long long nodes, double secs) : max_nodes_(nodes), max_secs_(secs), start_(clock::now()) {}

  void tick() {
    ++nodes_;
    if (max_nodes_ > 0 && nodes_ > max_nodes_) throw BudgetExceeded{};
    if (max_secs_ > 0 && (nodes_ & 255) == 0 && elapsed() > max_secs_) throw BudgetExceeded{};
  }
  long long nodes() const { return nodes_; }
  double elapsed() const { return std::chrono::duration<double>(clock::now() - start_).count(); }

 private:
  using clock = std::chrono::steady_clock;
  long long max_nodes_;
  double max_secs_;
  clock::time_point start_;
  long long nodes_ = 0;
};

/// Calls visit(maskA, maskB) for each cover of a d-element neighborhood.
/// Bit i refers to the i-th neighbor.
template <class Visit>
void for_each_cover(int d, SplitMode mode, bool prune, Visit&& visit) {
  if (d > 20) throw std::invalid_argument("neighborhood too large for cover enumeration");
  const std::uint32_t full = d == 0 ? 0u : ((1u << d) - 1u);
  if (mode == SplitMode::exclusive) {
    if (prune) {
      // unordered bipartitions with both sides nonempty; neighbor 0 on side A
      for (std::uint32_t a = 1; a < full; a += 2) visit(a, full & ~a);
    } else {
      for (std::uint32_t a = 0; a <= full; ++a) visit(a, full & ~a);
    }
    return;
  }
  // inclusive: every neighbor goes to A, B or both (digits 0, 1, 2)
  std::vector<int> digit(static_cast<std::size_t>(d), 0);
  while (true) {
    std::uint32_t a = 0, b = 0;
    for (int i = 0; i < d; ++i) {
      if (digit[i] != 1) a |= 1u << i;
      if (digit[i] != 0) b |= 1u << i;
    }
    if (!prune) {
      visit(a, b);
    } else if (a != full && b != full && a > b) {
      visit(a, b);
    }
    int i = 0;
    while (i < d && digit[i] == 2) digit[i++] = 0;
    if (i == d) break;
    ++digit[i];
  }
}

inline long cover_count(int d, SplitMode mode, bool prune) {
  if (d > 20) return std::numeric_limits<long>::max();
  if (mode == SplitMode::exclusive) return prune ? (d == 0 ? 0 : (1L << (d - 1)) - 1) : (1L << d);
  long p3 = 1;
  for (int i = 0; i < d; ++i) p3 *= 3;
  return prune ? (p3 - 2 * (1L << d) + 1) / 2 : p3;
}

/// Some cycle through v (a triangle if there is one, else a shortest
/// induced cycle of length >= 4).
inline std::optional<VertexList> cycle_through(const Graph& g, Vertex v) {
  auto nv = g.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i)
    for (std::size_t j = i + 1; j < nv.size(); ++j)
      if (g.adjacent(nv[i], nv[j])) return VertexList{v, nv[i], nv[j]};
  return shortest_induced_cycle_through(g, v);
}

inline void add_unique(std::vector<VertexList>& out, VertexList set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (std::find(out.begin(), out.end(), set) == out.end()) out.push_back(std::move(set));
}

}  // namespace detail

/// Vertex sets of forbidden configurations of `g` for `target`: every
/// member of the class avoids all of them, so each listed set must contain
/// a split (or deleted) vertex. Empty iff g is in the class. At most `cap`
/// sets per kind of configuration.
inline std::vector<VertexList> obstructions(const Graph& g, GraphClass target, int cap = 400) {
  std::vector<VertexList> out;
  const int n = g.order();
  auto add_cycles = [&](bool with_triangles) {
    for (Vertex v = 0; v < n; ++v) {
      auto c = with_triangles ? detail::cycle_through(g, v) : shortest_induced_cycle_through(g, v);
      if (c) detail::add_unique(out, std::move(*c));
    }
  };
  auto add_pattern = [&](Pattern p) {
    int left = cap;
    for_each_induced(g, pattern_graph(p), [&](const VertexList& map) {
      detail::add_unique(out, map);
      return --left > 0;
    });
  };
  switch (target) {
    case GraphClass::chordal: add_cycles(false); break;
    case GraphClass::interval: {
      add_cycles(false);
      int left = cap;
      const auto comp = avoidance_components(g);
      for_each_asteroidal_triple(
          g,
          [&](Vertex a, Vertex b, Vertex c) {
            Witness w = asteroidal_witness(g, a, b, c);
            VertexList set = w.vertices;
            for (const auto& p : w.paths) set.insert(set.end(), p.begin(), p.end());
            detail::add_unique(out, std::move(set));
            return --left > 0;
          },
          &comp);
      break;
    }
    case GraphClass::unit_interval:
      add_cycles(false);
      for (Pattern p : {Pattern::claw, Pattern::net, Pattern::tent}) add_pattern(p);
      break;
    case GraphClass::union_of_paths:
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) >= 3) out.push_back({v});
      if (out.empty()) add_cycles(true);
      break;
    case GraphClass::forest: add_cycles(true); break;
    case GraphClass::caterpillar_forest:
      add_cycles(true);
      add_pattern(Pattern::t2);
      break;
    case GraphClass::tree: throw std::invalid_argument("tree is not a hereditary target");
  }
  return out;
}

/// Size of a greedily chosen family of pairwise disjoint sets.
inline int disjoint_packing(std::vector<VertexList> sets, int n) {
  std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  int count = 0;
  for (const auto& s : sets) {
    if (std::any_of(s.begin(), s.end(), [&](Vertex v) { return used[v] != 0; })) continue;
    for (Vertex v : s) used[v] = 1;
    ++count;
  }
  return count;
}

namespace detail {

/// Depth-first split search with iterative deepening. The current graph is
/// edited in place; copies get ids in creation order, so the recorded
/// sequence replays directly on the input graph.
///
/// Branching: some vertex of any obstruction has to be split, and splits of
/// distinct vertices commute, so it suffices to branch on the vertices of a
/// single obstruction, taking that split first.
class SplitSearch {
 public:
  SplitSearch(const Graph& g, GraphClass target, const SearchOptions& opt)
      : target_(target), opt_(opt), adj_(g.adjacency()), budget_(opt.node_budget, opt.time_budget) {
    origin_.resize(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) origin_[v] = static_cast<Vertex>(v);
  }

  SolverReport run() {
    SolverReport rep;
    rep.parameter = parameter_tag(target_, opt_.mode == SplitMode::exclusive ? Modification::exclusive_splits
                                                                              : Modification::splits);
    int proven = 0;  // no solution shorter than this
    try {
      if (opt_.use_bounds) {
        const Graph g = current();
        proven = lower_bound(g, obstructions(g, target_), is_triangle_free(g));
      }
      if (proven > opt_.k_max) {
        rep.status = SolveStatus::lower_bound;
      } else {
        for (int k = proven; k <= opt_.k_max; ++k) {
          if (dfs(k)) {
            rep.status = SolveStatus::optimal;
            rep.optimum = k;
            rep.splits = found_;
            break;
          }
          proven = k + 1;
        }
        if (rep.status != SolveStatus::optimal) rep.status = SolveStatus::lower_bound;
      }
    } catch (const BudgetExceeded&) {
      rep.status = SolveStatus::budget_exceeded;
    }
    rep.lower_bound = rep.status == SolveStatus::optimal ? rep.optimum : proven;
    rep.nodes = budget_.nodes();
    rep.seconds = budget_.elapsed();
    return rep;
  }

 private:
  struct Child {
    Vertex target;
    std::uint32_t a, b;
  };

  Graph current() const { return Graph::from_adjacency(adj_); }

  /// Bounds that hold for any graph reachable from the current one:
  /// disjoint obstructions each need their own split; for forest-like
  /// results a split lowers |E| - |V| + #components by at most one; a vertex
  /// of degree d needs ceil(d/2) copies in a union of paths.
  long cheap_bound(bool triangle_free) const {
    long bound = 0;
    const bool forest_like = target_ == GraphClass::union_of_paths || target_ == GraphClass::forest ||
                             target_ == GraphClass::caterpillar_forest || triangle_free;
    if (forest_like) bound = cyclomatic();
    if (target_ == GraphClass::union_of_paths) {
      long deg = 0;
      for (const auto& row : adj_) deg += std::max<long>(0, (static_cast<long>(row.size()) + 1) / 2 - 1);
      bound = std::max(bound, deg);
    }
    return bound;
  }

  bool cheap_bound_applies(bool triangle_free) const {
    return target_ == GraphClass::union_of_paths || target_ == GraphClass::forest ||
           target_ == GraphClass::caterpillar_forest || triangle_free;
  }

  int lower_bound(const Graph& g, const std::vector<VertexList>& obs, bool triangle_free) const {
    return static_cast<int>(std::max<long>(cheap_bound(triangle_free), disjoint_packing(obs, g.order())));
  }

  long cyclomatic() const {
    const std::size_t n = adj_.size();
    long m = 0;
    for (const auto& row : adj_) m += static_cast<long>(row.size());
    m /= 2;
    seen_.assign(n, 0);
    long comps = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen_[s]) continue;
      ++comps;
      seen_[s] = 1;
      stack_.assign(1, static_cast<Vertex>(s));
      while (!stack_.empty()) {
        const Vertex x = stack_.back();
        stack_.pop_back();
        for (Vertex y : adj_[x])
          if (!seen_[y]) {
            seen_[y] = 1;
            stack_.push_back(y);
          }
      }
    }
    return m - static_cast<long>(n) + comps;
  }

  // In-place split and its inverse. The neighborhood snapshot is kept on a
  // stack so undo can restore it.
  Vertex apply(Vertex v, std::uint32_t ma, std::uint32_t mb) {
    const VertexList nv = adj_[v];
    VertexList a, b;
    for (std::size_t i = 0; i < nv.size(); ++i) {
      if (ma >> i & 1u) a.push_back(nv[i]);
      if (mb >> i & 1u) b.push_back(nv[i]);
    }
    const Vertex fresh = static_cast<Vertex>(adj_.size());
    for (std::size_t i = 0; i < nv.size(); ++i) {
      auto& row = adj_[nv[i]];
      if (!(ma >> i & 1u)) row.erase(std::lower_bound(row.begin(), row.end(), v));
      if (mb >> i & 1u) row.push_back(fresh);
    }
    adj_[v] = a;
    adj_.push_back(b);
    origin_.push_back(origin_[v]);
    saved_.push_back(nv);
    path_.push_back(Split{v, std::move(a), std::move(b)});
    return fresh;
  }

  void undo() {
    const Split s = std::move(path_.back());
    path_.pop_back();
    const VertexList nv = std::move(saved_.back());
    saved_.pop_back();
    const Vertex v = s.target;
    for (Vertex x : nv) {
      auto& row = adj_[x];
      if (std::binary_search(s.part_b.begin(), s.part_b.end(), x)) row.pop_back();
      if (!std::binary_search(s.part_a.begin(), s.part_a.end(), x))
        row.insert(std::lower_bound(row.begin(), row.end(), v), v);
    }
    adj_[v] = nv;
    adj_.pop_back();
    origin_.pop_back();
  }

  /// Exclusive splits keep every original edge exactly once, so the graph
  /// is determined (up to renaming copies) by the multiset of
  /// (origin, neighbor origins) over current vertices.
  std::string memo_key() const {
    std::vector<std::vector<Vertex>> rows(adj_.size());
    for (std::size_t x = 0; x < adj_.size(); ++x) {
      auto& r = rows[x];
      r.push_back(origin_[x]);
      for (Vertex y : adj_[x]) r.push_back(origin_[y]);
      std::sort(r.begin() + 1, r.end());
    }
    std::sort(rows.begin(), rows.end());
    std::string key;
    for (const auto& r : rows) {
      for (Vertex x : r) {
        key.push_back(static_cast<char>(x & 0xff));
        key.push_back(static_cast<char>((x >> 8) & 0xff));
      }
      key.push_back('\xff');
      key.push_back('\xff');
    }
    return key;
  }

  bool dfs(int remaining) {
    budget_.tick();
    const bool memo = opt_.use_memo && opt_.mode == SplitMode::exclusive;
    std::string key;
    if (memo) {
      key = memo_key();
      auto it = failed_.find(key);
      if (it != failed_.end() && it->second >= remaining) return false;
    }
    auto fail = [&] {
      if (memo && failed_.size() < kMemoLimit) {
        auto& slot = failed_[key];
        slot = std::max(slot, remaining);
      }
      return false;
    };

    const Graph g = current();
    const std::vector<VertexList> obs = obstructions(g, target_);
    if (obs.empty()) {
      found_ = path_;
      return true;
    }
    if (remaining == 0) return fail();
    const bool tf = opt_.use_bounds && is_triangle_free(g);
    if (opt_.use_bounds && lower_bound(g, obs, tf) > remaining) return fail();

    std::vector<Child> children = choose_children(obs, remaining, tf);
    for (const Child& c : children) {
      apply(c.target, c.a, c.b);
      const bool ok = dfs(remaining - 1);
      undo();
      if (ok) return true;
    }
    return fail();
  }

  std::vector<Child> children_of(const VertexList& ob) const {
    std::vector<Child> out;
    for (Vertex x : ob)
      for_each_cover(static_cast<int>(adj_[x].size()), opt_.mode, opt_.prune_dominated,
                     [&](std::uint32_t a, std::uint32_t b) { out.push_back({x, a, b}); });
    return out;
  }

  /// Children of the obstruction with the fewest children; when a cheap
  /// bound applies, the obstruction with the fewest children that survive
  /// it (among the smallest few), keeping only those.
  std::vector<Child> choose_children(const std::vector<VertexList>& obs, int remaining, bool tf) {
    std::vector<std::pair<long, std::size_t>> order;
    for (std::size_t i = 0; i < obs.size(); ++i) {
      long c = 0;
      for (Vertex x : obs[i]) c += cover_count(static_cast<int>(adj_[x].size()), opt_.mode, opt_.prune_dominated);
      order.emplace_back(c, i);
    }
    std::stable_sort(order.begin(), order.end());
    if (!opt_.use_bounds || !cheap_bound_applies(tf)) return children_of(obs[order.front().second]);

    std::vector<Child> best;
    bool have = false;
    const std::size_t probes = std::min<std::size_t>(order.size(), kProbe);
    for (std::size_t p = 0; p < probes; ++p) {
      if (have && static_cast<long>(best.size()) <= 0) break;
      std::vector<Child> viable;
      for (const Child& c : children_of(obs[order[p].second])) {
        apply(c.target, c.a, c.b);
        const bool ok = cheap_bound(tf) <= remaining - 1;
        undo();
        if (ok) viable.push_back(c);
        if (have && viable.size() >= best.size()) break;
      }
      if (!have || viable.size() < best.size()) {
        best = std::move(viable);
        have = true;
      }
    }
    return best;
  }

  static constexpr std::size_t kMemoLimit = 4'000'000;
  static constexpr std::size_t kProbe = 24;

  GraphClass target_;
  SearchOptions opt_;
  std::vector<VertexList> adj_;
  std::vector<Vertex> origin_;
  std::vector<VertexList> saved_;
  SplitSequence path_;
  SplitSequence found_;
  Budget budget_;
  std::unordered_map<std::string, int> failed_;
  mutable std::vector<char> seen_;
  mutable std::vector<Vertex> stack_;
};

}  // namespace detail

/// Minimum number of splits (inclusive or exclusive) turning g into the
/// target class, searched up to opt.k_max.
inline SolverReport brute_min_splits(const Graph& g, GraphClass target, const SearchOptions& opt) {
  if (opt.k_max < 0) throw std::invalid_argument("k_max must be non-negative");
  detail::SplitSearch s(g, target, opt);
  return s.run();
}

inline SolverReport brute_min_splits(const Graph& g, GraphClass target, SplitMode mode, int k_max) {
  SearchOptions opt;
  opt.mode = mode;
  opt.k_max = k_max;
  return brute_min_splits(g, target, opt);
}

namespace detail {

/// Visits k-subsets of {0..n-1} in lexicographic order until visit returns true.
template <class Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Minimum vertex deletion set, by subsets of increasing size in
/// lexicographic order.
inline SolverReport brute_min_vertex_deletions(const Graph& g, GraphClass target, int k_max,
                                               long long node_budget = 0, double time_budget = 0) {
  SolverReport rep;
  rep.parameter = parameter_tag(target, Modification::vertex_deletion);
  detail::Budget budget(node_budget, time_budget);
  try {
    rep.status = SolveStatus::lower_bound;
    for (int k = 0; k <= k_max; ++k) {
      const bool hit = detail::for_each_subset(g.order(), k, [&](const std::vector<int>& idx) {
        budget.tick();
        VertexList del(idx.begin(), idx.end());
        if (!in_class(remove_vertices(g, del), target)) return false;
        rep.vertices = std::move(del);
        return true;
      });
      if (hit) {
        rep.status = SolveStatus::optimal;
        rep.optimum = k;
        break;
      }
      rep.lower_bound = k + 1;
    }
  } catch (const detail::BudgetExceeded&) {
    rep.status = SolveStatus::budget_exceeded;
  }
  if (rep.optimal()) rep.lower_bound = rep.optimum;
  rep.nodes = budget.nodes();
  rep.seconds = budget.elapsed();
  return rep;
}

/// Minimum edge deletion set over g.edges() (sorted), same enumeration.
inline SolverReport brute_min_edge_deletions(const Graph& g, GraphClass target, int k_max,
                                             long long node_budget = 0, double time_budget = 0) {
  SolverReport rep;
  rep.parameter = parameter_tag(target, Modification::edge_deletion);
  detail::Budget budget(node_budget, time_budget);
  const std::vector<Edge> all = g.edges();
  try {
    rep.status = SolveStatus::lower_bound;
    for (int k = 0; k <= k_max; ++k) {
      const bool hit = detail::for_each_subset(static_cast<int>(all.size()), k, [&](const std::vector<int>& idx) {
        budget.tick();
        std::vector<Edge> del;
        for (int i : idx) del.push_back(all[i]);
        if (!in_class(remove_edges(g, del), target)) return false;
        rep.edges = std::move(del);
        return true;
      });
      if (hit) {
        rep.status = SolveStatus::optimal;
        rep.optimum = k;
        break;
      }
      rep.lower_bound = k + 1;
    }
  } catch (const detail::BudgetExceeded&) {
    rep.status = SolveStatus::budget_exceeded;
  }
  if (rep.optimal()) rep.lower_bound = rep.optimum;
  rep.nodes = budget.nodes();
  rep.seconds = budget.elapsed();
  return rep;
}

// ---------------------------------------------------------------------------
// Hamiltonian paths
// ---------------------------------------------------------------------------

inline constexpr int kHamiltonianLimit = 24;

inline bool is_hamiltonian_path(const Graph& g, const VertexList& path) {
  if (static_cast<int>(path.size()) != g.order()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] < 0 || path[i] >= g.order() || seen[path[i]]) return false;
    seen[path[i]] = 1;
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

/// Subset dynamic program: reach[S] holds the possible end vertices of a
/// path visiting exactly S.
inline std::optional<VertexList> hamiltonian_path(const Graph& g) {
  const int n = g.order();
  if (n > kHamiltonianLimit) throw std::invalid_argument("hamiltonian_path supports at most 24 vertices");
  if (n == 0) return VertexList{};
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v] |= 1u << w;
  std::vector<std::uint32_t> reach(static_cast<std::size_t>(full) + 1, 0);
  for (Vertex v = 0; v < n; ++v) reach[1u << v] = 1u << v;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint32_t ends = reach[s];
    while (ends) {
      const int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t ext = nbr[v] & ~s;
      while (ext) {
        const int w = std::countr_zero(ext);
        ext &= ext - 1;
        reach[s | (1u << w)] |= 1u << w;
      }
    }
  }
  if (!reach[full]) return std::nullopt;
  VertexList path;
  std::uint32_t s = full;
  int v = std::countr_zero(reach[full]);
  while (true) {
    path.push_back(v);
    const std::uint32_t rest = s & ~(1u << v);
    if (!rest) break;
    const std::uint32_t prev = reach[rest] & nbr[v];
    s = rest;
    v = std::countr_zero(prev);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

inline bool hamiltonian_path_exists(const Graph& g) { return hamiltonian_path(g).has_value(); }

// ---------------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------------

/// Maximal cliques (Bron-Kerbosch with pivoting), each sorted, listed in
/// lexicographic order. At most 64 vertices.
inline std::vector<VertexList> maximal_cliques(const Graph& g) {
  const int n = g.order();
  if (n > 64) throw std::invalid_argument("maximal_cliques supports at most 64 vertices");
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v] |= std::uint64_t{1} << w;
  std::vector<VertexList> out;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> bk = [&](std::uint64_t r, std::uint64_t p,
                                                                           std::uint64_t x) {
    if (!p && !x) {
      VertexList c;
      for (std::uint64_t t = r; t; t &= t - 1) c.push_back(std::countr_zero(t));
      out.push_back(std::move(c));
      return;
    }
    const int pivot = std::countr_zero(p | x);
    for (std::uint64_t cand = p & ~nbr[pivot]; cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      const std::uint64_t bit = std::uint64_t{1} << v;
      bk(r | bit, p & nbr[v], x & nbr[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  if (n > 0) bk(0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline constexpr int kCliqueOrderLimit = 9;

/// Interval test by brute force over orderings of the maximal cliques: g is
/// interval iff some ordering puts the cliques containing each vertex
/// consecutively. Throws beyond 9 maximal cliques.
inline bool interval_oracle_consecutive_cliques(const Graph& g) {
  const auto cliques = maximal_cliques(g);
  const int c = static_cast<int>(cliques.size());
  if (c > kCliqueOrderLimit) throw std::invalid_argument("too many maximal cliques for the ordering oracle");
  if (c <= 1) return true;
  // state: 0 unseen, 1 in the last placed clique, 2 closed
  std::vector<int> state(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> placed(static_cast<std::size_t>(c), 0);
  std::function<bool(int, int)> place = [&](int depth, int last) -> bool {
    if (depth == c) return true;
    for (int i = 0; i < c; ++i) {
      if (placed[i]) continue;
      const auto& q = cliques[i];
      if (std::any_of(q.begin(), q.end(), [&](Vertex v) { return state[v] == 2; })) continue;
      const std::vector<int> saved = state;
      if (last >= 0)
        for (Vertex v : cliques[last])
          if (!std::binary_search(q.begin(), q.end(), v)) state[v] = 2;
      for (Vertex v : q) state[v] = 1;
      placed[i] = 1;
      if (place(depth + 1, i)) return true;
      placed[i] = 0;
      state = saved;
    }
    return false;
  };
  return place(0, -1);
}

/// For α(g) <= 2 and a vertex v with g - v chordal: g - v is covered by two
/// cliques A and B (a 2-coloring of its complement), and splitting v into
/// N(v) ∩ A and N(v) ∩ B leaves both copies simplicial.
inline Split chvs1_witness_from_chvd1(const Graph& g) {
  if (!independence_at_most_two(g)) throw std::invalid_argument("independence number exceeds 2");
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexList gone{v};
    const Graph rest = remove_vertices(g, gone);
    if (!chordal(rest)) continue;
    const BipartiteResult col = is_bipartite(complement(rest));
    if (!col.bipartite) throw std::logic_error("complement of a chordal graph with α <= 2 is not bipartite");
    Split s;
    s.target = v;
    for (Vertex w : g.neighbors(v)) {
      const Vertex r = w < v ? w : w - 1;
      (col.color[r] == 0 ? s.part_a : s.part_b).push_back(w);
    }
    return s;
  }
  throw std::invalid_argument("no single vertex deletion makes the graph chordal");
}

struct Occurrence {
  Pattern pattern = Pattern::c4;
  VertexList vertices;  // cyclic order
};

/// For α(g) <= 2 with non-bipartite complement (no cover by two cliques)
/// an induced C4 or C5 exists.
inline Occurrence find_induced_c4_or_c5(const Graph& g) {
  if (!independence_at_most_two(g)) throw std::invalid_argument("independence number exceeds 2");
  if (is_bipartite(complement(g)).bipartite) throw std::invalid_argument("graph is covered by two cliques");
  for (Pattern p : {Pattern::c4, Pattern::c5})
    if (auto m = find_induced(g, p)) return {p, *m};
  throw std::logic_error("no induced C4 or C5 although α <= 2 and the complement is not bipartite");
}

}  // namespace vsplit

#endif  // VSPLIT_SOLVERS_HPP
