#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vsplit/families.hpp"
#include "vsplit/solvers.hpp"

using namespace vsplit;

TEST_CASE("parameter tags round-trip") {
  for (GraphClass c : {GraphClass::chordal, GraphClass::interval, GraphClass::unit_interval,
                       GraphClass::union_of_paths, GraphClass::caterpillar_forest, GraphClass::forest})
    for (Modification m : {Modification::splits, Modification::exclusive_splits, Modification::vertex_deletion,
                           Modification::edge_deletion}) {
      const auto [c2, m2] = parse_parameter(parameter_tag(c, m));
      CHECK(c2 == c);
      CHECK(m2 == m);
    }
  CHECK(parameter_tag(GraphClass::chordal, Modification::splits) == "ChVS");
  CHECK(parameter_tag(GraphClass::interval, Modification::exclusive_splits) == "IVXS");
  CHECK_THROWS_AS(parse_parameter("XYZ"), std::invalid_argument);
}

TEST_CASE("small optima") {
  auto r = brute_min_splits(cycle_graph(4), GraphClass::chordal, SplitMode::inclusive, 3);
  REQUIRE(r.optimal());
  CHECK(r.optimum == 1);
  CHECK(verify(cycle_graph(4), r.splits, GraphClass::chordal).ok);

  r = brute_min_splits(complete_graph(5), GraphClass::chordal, SplitMode::inclusive, 3);
  CHECK(r.optimum == 0);
  CHECK(r.splits.empty());

  r = brute_min_splits(pattern_graph(Pattern::claw), GraphClass::unit_interval, SplitMode::exclusive, 3);
  CHECK(r.optimum == 1);

  r = brute_min_splits(pattern_graph(Pattern::t2), GraphClass::interval, SplitMode::exclusive, 3);
  CHECK(r.optimum == 1);

  auto d = brute_min_vertex_deletions(cycle_graph(5), GraphClass::chordal, 3);
  CHECK(d.optimum == 1);
  CHECK(d.vertices == VertexList{0});

  auto e = brute_min_edge_deletions(cycle_graph(5), GraphClass::chordal, 3);
  CHECK(e.optimum == 1);
  CHECK(e.edges.size() == 1);
}

TEST_CASE("k_max and budgets report honestly") {
  const Graph g = fig4_gk(3);
  auto r = brute_min_splits(g, GraphClass::chordal, SplitMode::inclusive, 0);
  CHECK(r.status == SolveStatus::lower_bound);
  CHECK(r.lower_bound == 1);

  SearchOptions opt = SearchOptions::unpruned(SplitMode::inclusive, 4);
  opt.node_budget = 5;
  r = brute_min_splits(fig6_graph(), GraphClass::chordal, opt);
  CHECK(r.status == SolveStatus::budget_exceeded);
  CHECK(r.optimum == -1);
}

TEST_CASE("pruned and unpruned search agree") {
  oracle::Rng rng(41);
  int compared = 0;
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_graph(rng, 4 + i % 3, 0.5);
    for (GraphClass c : {GraphClass::chordal, GraphClass::interval, GraphClass::unit_interval,
                         GraphClass::union_of_paths, GraphClass::caterpillar_forest}) {
      for (SplitMode m : {SplitMode::inclusive, SplitMode::exclusive}) {
        SearchOptions fast;
        fast.mode = m;
        fast.k_max = 2;
        const auto a = brute_min_splits(g, c, fast);
        const auto b = brute_min_splits(g, c, SearchOptions::unpruned(m, 2));
        REQUIRE(a.status == b.status);
        if (a.optimal()) {
          CHECK(a.optimum == b.optimum);
          CHECK(verify(g, a.splits, c).ok);
          if (m == SplitMode::exclusive) CHECK(is_exclusive(a.splits));
        }
        ++compared;
      }
    }
  }
  CHECK(compared == 600);
}

TEST_CASE("splitting is at most vertex deletion on chordal targets") {
  oracle::Rng rng(43);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_alpha2(rng, 6, 0.5);
    const auto vs = brute_min_splits(g, GraphClass::chordal, SplitMode::inclusive, 3);
    const auto vd = brute_min_vertex_deletions(g, GraphClass::chordal, 3);
    if (vs.optimal() && vd.optimal()) CHECK(vs.optimum <= vd.optimum);
  }
}

TEST_CASE("chordal split from a single deletion when alpha is at most two") {
  oracle::Rng rng(44);
  int built = 0;
  for (int i = 0; i < 400 && built < 40; ++i) {
    const Graph g = oracle::random_alpha2(rng, 7, 0.55);
    const auto vd = brute_min_vertex_deletions(g, GraphClass::chordal, 1);
    if (!vd.optimal() || vd.optimum != 1) continue;
    const Split s = chvs1_witness_from_chvd1(g);
    CHECK(verify(g, {s}, GraphClass::chordal).ok);
    ++built;
  }
  CHECK(built >= 10);
  CHECK_THROWS_AS(chvs1_witness_from_chvd1(path_graph(5)), std::invalid_argument);
}

TEST_CASE("induced C4 or C5 when two cliques do not cover") {
  const Occurrence o = find_induced_c4_or_c5(complement(cycle_graph(7)));
  CHECK((o.pattern == Pattern::c4 || o.pattern == Pattern::c5));
  CHECK(is_induced_cycle(complement(cycle_graph(7)), o.vertices));
  CHECK_THROWS_AS(find_induced_c4_or_c5(complete_graph(5)), std::invalid_argument);
  CHECK_THROWS_AS(find_induced_c4_or_c5(path_graph(6)), std::invalid_argument);

  oracle::Rng rng(45);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_alpha2(rng, 7, 0.5);
    if (is_bipartite(complement(g)).bipartite) continue;
    const Occurrence occ = find_induced_c4_or_c5(g);
    CHECK(is_induced_cycle(g, occ.vertices));
  }
}

TEST_CASE("Hamiltonian paths") {
  CHECK(hamiltonian_path_exists(cube_graph()));
  CHECK_FALSE(hamiltonian_path_exists(pattern_graph(Pattern::claw)));
  const auto p = hamiltonian_path(prism_graph());
  REQUIRE(p);
  CHECK(is_hamiltonian_path(prism_graph(), *p));
  CHECK_FALSE(hamiltonian_path_exists(no_hampath_cubic()));

  oracle::Rng rng(46);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 9, 0.35);
    CHECK(hamiltonian_path_exists(g) == oracle::has_hamiltonian_path(g));
  }
}

TEST_CASE("consecutive-clique interval oracle") {
  CHECK_FALSE(interval_oracle_consecutive_cliques(pattern_graph(Pattern::t2)));
  CHECK(interval_oracle_consecutive_cliques(path_graph(6)));
  CHECK(maximal_cliques(complete_graph(4)).size() == 1);
  CHECK(maximal_cliques(cycle_graph(5)).size() == 5);
}
