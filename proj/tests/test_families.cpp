#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vsplit/families.hpp"
#include "vsplit/io.hpp"
#include "vsplit/solvers.hpp"

using namespace vsplit;

TEST_CASE("G_k: one split versus k edge deletions") {
  for (int k = 2; k <= 3; ++k) {
    const Graph g = fig4_gk(k);
    CHECK(g.order() == 3 * k + 1);
    CHECK(g.label(0) == "v");
    const auto vs = brute_min_splits(g, GraphClass::chordal, SplitMode::inclusive, 2);
    REQUIRE(vs.optimal());
    CHECK(vs.optimum == 1);
    const auto ed = brute_min_edge_deletions(g, GraphClass::chordal, k);
    REQUIRE(ed.optimal());
    CHECK(ed.optimum == k);
  }
}

TEST_CASE("star of C4: one deletion versus k splits") {
  for (int k = 2; k <= 3; ++k) {
    const Graph g = star_of_c4(k);
    const auto vd = brute_min_vertex_deletions(g, GraphClass::chordal, 2);
    REQUIRE(vd.optimal());
    CHECK(vd.optimum == 1);
    const auto vs = brute_min_splits(g, GraphClass::chordal, SplitMode::inclusive, k);
    REQUIRE(vs.optimal());
    CHECK(vs.optimum == k);
  }
}

TEST_CASE("generator tags") {
  for (const std::string& tag : family_tags()) {
    std::vector<std::string> p;
    if (tag == "fig4-gk" || tag == "star-of-c4") p = {"2"};
    if (tag == "cycle" || tag == "path" || tag == "complete") p = {"5"};
    if (tag == "t-d-star") p = {"3", "2"};
    if (tag == "cubic") p = {"cube"};
    const Graph g = gen_family(tag, p);
    CHECK(g.order() > 0);
    const Graph back = parse_edge_list(write_edge_list(g)).graph;
    CHECK(back == g);
    CHECK(back.labels() == g.labels());
  }
  CHECK_THROWS_AS(gen_family("nope"), std::invalid_argument);
  CHECK_THROWS_AS(gen_family("cycle", {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(gen_family("cycle"), std::invalid_argument);
  CHECK(oracle::isomorphic(gen_family("t-d-star", {"3", "2"}), pattern_graph(Pattern::t2)));
}

TEST_CASE("cubic samples") {
  for (const auto& name : cubic_sample_names()) {
    const Graph g = cubic_sample(name);
    CHECK(is_connected(g));
    for (Vertex v = 0; v < g.order(); ++v) CHECK(g.degree(v) == 3);
  }
  CHECK(cube_graph().order() == 8);
  CHECK(no_hampath_cubic().order() == 16);
}

TEST_CASE("reduction instance shape") {
  const ReductionInstance k4 = reduce_hampath_to_ivxs(complete_graph(4));
  CHECK(k4.subdivided.order() == 10);
  CHECK(k4.subdivided.size() == 12);
  CHECK(k4.budget == 3);
  CHECK(k4.subdivided.label(4) == "u0_1");
  CHECK(k4.edge_vertex(1, 0) == 4);
  CHECK_THROWS_AS(reduce_hampath_to_ivxs(cycle_graph(5)), std::invalid_argument);
  CHECK_THROWS_AS(reduce_hampath_to_ivxs(disjoint_union(complete_graph(4), complete_graph(4))),
                  std::invalid_argument);
}

TEST_CASE("forward witness and extraction round-trip") {
  for (const auto& name : {"k4", "prism", "cube", "fig2"}) {
    const ReductionInstance inst = reduce_hampath_to_ivxs(cubic_sample(name));
    const auto path = hamiltonian_path(inst.source);
    REQUIRE(path);
    const SplitSequence seq = forward_witness(inst, *path);
    CHECK(static_cast<int>(seq.size()) == inst.budget);
    CHECK(is_exclusive(seq));
    CHECK(verify(inst.subdivided, seq, GraphClass::interval).ok);
    const VertexList back = extract_hampath(inst, seq);
    CHECK(is_hamiltonian_path(inst.source, back));
  }
}

TEST_CASE("extraction from solver output") {
  for (const auto& name : {"k4", "prism"}) {
    const ReductionInstance inst = reduce_hampath_to_ivxs(cubic_sample(name));
    const auto r = brute_min_splits(inst.subdivided, GraphClass::interval, SplitMode::exclusive, inst.budget);
    REQUIRE(r.optimal());
    CHECK(r.optimum <= inst.budget);
    CHECK(is_hamiltonian_path(inst.source, extract_hampath(inst, r.splits)));
  }
  const ReductionInstance k4 = reduce_hampath_to_ivxs(complete_graph(4));
  CHECK_THROWS_AS(extract_hampath(k4, {}), std::invalid_argument);
}

TEST_CASE("no small cubic graph lacks a Hamiltonian path") {
  int seen = 0;
  for (int n = 4; n <= 8; n += 2)
    oracle::for_each_connected_cubic(n, [&](const Graph& g) {
      ++seen;
      CHECK(oracle::has_hamiltonian_path(g));
      return true;
    });
  CHECK(seen > 0);
  CHECK_FALSE(oracle::has_hamiltonian_path(no_hampath_cubic()));
}

TEST_CASE("forward witness on the six-vertex cubic sample") {
  const ReductionInstance inst = reduce_hampath_to_ivxs(fig2_cubic());
  const VertexList path{0, 1, 2, 3, 4, 5};
  const SplitSequence seq = forward_witness(inst, path);
  const Graph t = apply_sequence(inst.subdivided, seq).first;
  CHECK(t.order() == 19);
  CHECK(is_tree(t).verdict);
  CHECK(caterpillar_forest(t));
  // spine u0, u0_1, u1, ..., u5 with pendant edge-vertex copies
  VertexList spine;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) spine.push_back(inst.edge_vertex(path[i - 1], path[i]));
    spine.push_back(path[i]);
  }
  for (std::size_t i = 1; i < spine.size(); ++i) CHECK(t.adjacent(spine[i - 1], spine[i]));
  for (Vertex v = 0; v < t.order(); ++v)
    if (std::find(spine.begin(), spine.end(), v) == spine.end()) CHECK(t.degree(v) == 1);
  CHECK(extract_hampath(inst, seq) == path);
}
