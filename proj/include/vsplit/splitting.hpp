#ifndef VSPLIT_SPLITTING_HPP
#define VSPLIT_SPLITTING_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vsplit/graph.hpp"
#include "vsplit/recognition.hpp"

namespace vsplit {

/// One vertex split: `target` is replaced by a copy keeping its id and
/// adjacent to `part_a`, and a fresh copy (next free id) adjacent to
/// `part_b`. The two parts must cover N(target).
struct Split {
  Vertex target = 0;
  VertexList part_a;
  VertexList part_b;

  friend bool operator==(const Split&, const Split&) = default;
};

using SplitSequence = std::vector<Split>;

inline bool is_exclusive(const Split& s) {
  VertexList common;
  std::set_intersection(s.part_a.begin(), s.part_a.end(), s.part_b.begin(), s.part_b.end(),
                        std::back_inserter(common));
  return common.empty();
}

inline bool is_exclusive(const SplitSequence& seq) {
  return std::all_of(seq.begin(), seq.end(), [](const Split& s) { return is_exclusive(s); });
}

/// Sorts and dedups both parts.
inline Split normalized(Split s) {
  for (auto* part : {&s.part_a, &s.part_b}) {
    std::sort(part->begin(), part->end());
    part->erase(std::unique(part->begin(), part->end()), part->end());
  }
  return s;
}

class SplitError : public std::invalid_argument {
 public:
  SplitError(const std::string& what, std::size_t index)
      : std::invalid_argument("split " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Original vertex -> current copies, and the reverse.
struct DescendantMap {
  std::vector<VertexList> copies;  // indexed by original id
  std::vector<Vertex> origin;      // indexed by current id

  static DescendantMap identity(int n) {
    DescendantMap d;
    d.copies.resize(static_cast<std::size_t>(n));
    d.origin.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      d.copies[v] = {v};
      d.origin[v] = v;
    }
    return d;
  }
};

/// Mutable adjacency for replaying split sequences. Each split costs
/// O(sum of degrees around the target).
class SplitWorkspace {
 public:
  explicit SplitWorkspace(const Graph& g)
      : adj_(g.adjacency()), labels_(g.labels()), desc_(DescendantMap::identity(g.order())) {
    if (!labels_.empty()) base_labels_ = labels_;
  }

  int order() const { return static_cast<int>(adj_.size()); }
  const VertexList& neighbors(Vertex v) const { return adj_[v]; }
  const DescendantMap& descendants() const { return desc_; }

  /// Applies `s` (parts need not be sorted). Throws SplitError tagged with
  /// `index` when the split is invalid for the current graph.
  Vertex apply(const Split& raw, std::size_t index = 0) {
    const Split s = normalized(raw);
    const int n = order();
    const Vertex v = s.target;
    if (v < 0 || v >= n) throw SplitError("unknown vertex " + std::to_string(v), index);
    const VertexList& nv = adj_[v];
    VertexList cover;
    std::set_union(s.part_a.begin(), s.part_a.end(), s.part_b.begin(), s.part_b.end(), std::back_inserter(cover));
    if (cover != nv) throw SplitError("parts do not cover exactly N(" + std::to_string(v) + ")", index);

    const Vertex fresh = n;
    for (Vertex x : nv) {
      const bool in_a = std::binary_search(s.part_a.begin(), s.part_a.end(), x);
      const bool in_b = std::binary_search(s.part_b.begin(), s.part_b.end(), x);
      auto& row = adj_[x];
      if (!in_a) row.erase(std::lower_bound(row.begin(), row.end(), v));
      if (in_b) row.push_back(fresh);  // fresh is the largest id, row stays sorted
    }
    adj_[v] = s.part_a;
    adj_.push_back(s.part_b);

    const Vertex root = desc_.origin[v];
    desc_.origin.push_back(root);
    desc_.copies[root].push_back(fresh);
    if (!labels_.empty()) labels_.push_back(base_labels_[root] + "#" + std::to_string(desc_.copies[root].size()));
    return fresh;
  }

  Graph graph() const { return Graph::from_adjacency(adj_).with_labels(labels_); }

 private:
  std::vector<VertexList> adj_;
  std::vector<std::string> labels_;
  std::vector<std::string> base_labels_;
  DescendantMap desc_;
};

inline Graph apply_split(const Graph& g, const Split& s) {
  SplitWorkspace ws(g);
  ws.apply(s);
  return ws.graph();
}

inline std::pair<Graph, DescendantMap> apply_sequence(const Graph& g, const SplitSequence& seq) {
  SplitWorkspace ws(g);
  for (std::size_t i = 0; i < seq.size(); ++i) ws.apply(seq[i], i);
  return {ws.graph(), ws.descendants()};
}

/// Rewrites a split sequence on a triangle-free graph into an exclusive one
/// of the same length whose result stays in `target`.
///
/// The last non-exclusive split (v, A, B) becomes (v, A, B \ A); every later
/// split drops the edges between the descendants of the second copy and the
/// descendants of A ∩ B. This repeats until no inclusive split is left. The
/// result is only a subgraph of the original result, which stays in the
/// class because triangle-free members of these classes are closed under
/// subgraphs.
inline SplitSequence make_exclusive(const Graph& g, SplitSequence seq, GraphClass target) {
  if (target != GraphClass::chordal && target != GraphClass::interval && target != GraphClass::unit_interval)
    throw std::invalid_argument("make_exclusive targets chordal, interval or unit-interval");
  if (!is_triangle_free(g)) throw std::invalid_argument("make_exclusive needs a triangle-free graph");
  for (auto& s : seq) s = normalized(s);
  if (!in_class(apply_sequence(g, seq).first, target))
    throw std::invalid_argument("input sequence does not reach the target class");

  const int n0 = g.order();
  while (true) {
    int last = -1;
    for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i)
      if (!is_exclusive(seq[i])) {
        last = i;
        break;
      }
    if (last < 0) break;

    Split& si = seq[last];
    VertexList shared;
    std::set_intersection(si.part_a.begin(), si.part_a.end(), si.part_b.begin(), si.part_b.end(),
                          std::back_inserter(shared));
    VertexList b_only;
    std::set_difference(si.part_b.begin(), si.part_b.end(), si.part_a.begin(), si.part_a.end(),
                        std::back_inserter(b_only));
    si.part_b = std::move(b_only);

    // Membership in D(copy2) and D(A ∩ B); copies created at step j get id n0 + j.
    std::vector<char> in_copy2(static_cast<std::size_t>(n0) + seq.size(), 0);
    std::vector<char> in_shared(in_copy2.size(), 0);
    in_copy2[static_cast<std::size_t>(n0 + last)] = 1;
    for (Vertex x : shared) in_shared[x] = 1;
    auto drop = [](VertexList& part, const std::vector<char>& mask) {
      part.erase(std::remove_if(part.begin(), part.end(), [&](Vertex x) { return mask[x] != 0; }), part.end());
    };
    for (std::size_t j = static_cast<std::size_t>(last) + 1; j < seq.size(); ++j) {
      Split& sj = seq[j];
      const Vertex t = sj.target;
      const std::size_t fresh = static_cast<std::size_t>(n0) + j;
      if (in_shared[t]) {
        drop(sj.part_a, in_copy2);
        drop(sj.part_b, in_copy2);
        in_shared[fresh] = 1;
      } else if (in_copy2[t]) {
        drop(sj.part_a, in_shared);
        drop(sj.part_b, in_shared);
        in_copy2[fresh] = 1;
      }
    }
  }
  if (!in_class(apply_sequence(g, seq).first, target))
    throw std::logic_error("exclusive rewrite left the target class");
  return seq;
}

/// Turns edge deletions into splits: deleting xy (x < y) becomes splitting
/// x into a pendant copy on y and a copy holding the rest of N(x).
inline SplitSequence edge_deletions_to_splits(const Graph& g, const std::vector<Edge>& deletions) {
  SplitWorkspace ws(g);
  std::vector<Vertex> current(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) current[v] = v;
  SplitSequence seq;
  for (std::size_t i = 0; i < deletions.size(); ++i) {
    const Edge e = deletions[i];
    if (e.u < 0 || e.v >= g.order() || e.u == e.v) throw SplitError("bad edge", i);
    const Vertex x = current[e.u], y = current[e.v];
    const VertexList& nx = ws.neighbors(x);
    if (!std::binary_search(nx.begin(), nx.end(), y))
      throw SplitError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " not present", i);
    Split s{x, {y}, {}};
    for (Vertex w : nx)
      if (w != y) s.part_b.push_back(w);
    seq.push_back(s);
    current[e.u] = ws.apply(s, i);
  }
  return seq;
}

struct VerifyResult {
  bool ok = false;
  RecognitionReport report;
  Graph result;
};

inline VerifyResult verify(const Graph& g, const SplitSequence& seq, GraphClass target) {
  VerifyResult out;
  out.result = apply_sequence(g, seq).first;
  out.report = recognize(out.result, target);
  out.ok = out.report.verdict;
  return out;
}

}  // namespace vsplit

#endif  // VSPLIT_SPLITTING_HPP
