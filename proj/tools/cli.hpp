#ifndef VSPLIT_TOOLS_CLI_HPP
#define VSPLIT_TOOLS_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vsplit/vsplit.hpp"

namespace vsplit::cli {

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kBudget = 3 };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string slurp(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    std::ostringstream buf;
    buf << stdin_stream.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

inline long long env_number(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const long long x = std::strtoll(v, &end, 10);
  return end && *end == '\0' && x >= 0 ? x : fallback;
}

inline std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace detail

/// Runs one command line (without the program name). Every subcommand is a
/// thin adapter over one library call.
inline int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Vertex splitting toward interval, unit interval, chordal and path targets", "vsplit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "records"}));

  std::string graph_path = "-", seq_path, class_tag, target_tag = "chordal", param_tag, tag;
  std::vector<std::string> params;
  bool show_trails = false, unpruned = false, no_timing = false;
  std::string mode_tag;
  int k_max = 3;
  long long budget_nodes = detail::env_number("VSPLIT_BUDGET_NODES", 0);
  double budget_secs = static_cast<double>(detail::env_number("VSPLIT_BUDGET_SECS", 0));

  auto* recognize = app.add_subcommand("recognize", "Test class membership with certificate or witness");
  recognize->add_option("class", class_tag, "chordal | interval | unit-interval | caterpillar-forest | "
                                            "union-of-paths | forest | tree")
      ->required();
  recognize->add_option("graph", graph_path, "Edge-list file or - for stdin");

  auto* split_paths = app.add_subcommand("split-paths", "Optimal split sequence into a union of paths");
  split_paths->add_option("graph", graph_path, "Edge-list file or - for stdin");
  split_paths->add_flag("--trails", show_trails, "Also print the trail partition");

  auto* trails = app.add_subcommand("trails", "Minimum trail partition");
  trails->add_option("graph", graph_path, "Edge-list file or - for stdin");

  auto* solve = app.add_subcommand("solve", "Exact modification parameter by exhaustive search");
  solve->add_option("param", param_tag, "ChVS, ChVXS, IVS, IVXS, UIVS, UIVXS, PVS, ChVD, ChED, ...")->required();
  solve->add_option("graph", graph_path, "Edge-list file or - for stdin");
  solve->add_option("--mode", mode_tag, "Override split mode")->check(CLI::IsMember({"inclusive", "exclusive"}));
  solve->add_option("--kmax", k_max, "Largest value searched")->check(CLI::NonNegativeNumber);
  solve->add_option("--budget-nodes", budget_nodes, "Node budget, 0 for none (env VSPLIT_BUDGET_NODES)");
  solve->add_option("--budget-secs", budget_secs, "Time budget in seconds, 0 for none (env VSPLIT_BUDGET_SECS)");
  solve->add_flag("--unpruned", unpruned, "Disable cover pruning, bounds and memo");
  solve->add_flag("--no-timing", no_timing, "Omit the SECS line");

  auto* apply = app.add_subcommand("apply", "Apply a split sequence and print the result");
  apply->add_option("graph", graph_path, "Edge-list file")->required();
  apply->add_option("sequence", seq_path, "Split-sequence file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Apply a split sequence and recognize the result");
  verify_cmd->add_option("graph", graph_path, "Edge-list file")->required();
  verify_cmd->add_option("sequence", seq_path, "Split-sequence file")->required();
  verify_cmd->add_option("--target", target_tag, "Target class");

  auto* exclusive = app.add_subcommand("make-exclusive", "Rewrite a sequence on a triangle-free graph as exclusive");
  exclusive->add_option("graph", graph_path, "Edge-list file")->required();
  exclusive->add_option("sequence", seq_path, "Split-sequence file")->required();
  exclusive->add_option("--target", target_tag, "chordal | interval | unit-interval");

  auto* reduce = app.add_subcommand("reduce", "Subdivide a cubic graph into an exclusive interval-splitting instance");
  reduce->add_option("graph", graph_path, "Cubic edge-list file or - for stdin");

  auto* extract = app.add_subcommand("extract", "Read a Hamiltonian path off a solved reduction instance");
  extract->add_option("graph", graph_path, "The cubic source graph")->required();
  extract->add_option("sequence", seq_path, "Split sequence on the subdivided graph")->required();

  auto* gen = app.add_subcommand("gen", "Generate a named graph");
  gen->add_option("family", tag, "fig4-gk k | star-of-c4 k | fig6 | claw | net | tent | t2 | t-d-star t d | "
                                 "cycle n | path n | complete n | cubic <k4|prism|cube|fig2|no-hampath>")
      ->required();
  gen->add_option("params", params, "Family parameters");

  auto* stats = app.add_subcommand("stats", "Basic invariants and class memberships");
  stats->add_option("graph", graph_path, "Edge-list file or - for stdin");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const OutputFormat fmt = format == "records" ? OutputFormat::records : OutputFormat::human;
  ReportWriter w(fmt);
  auto read_graph = [&](const std::string& path) { return parse_edge_list(detail::slurp(path, io.in)).graph; };
  auto read_seq = [&](const std::string& path) { return parse_split_sequence(detail::slurp(path, io.in)); };

  int code = kOk;
  try {
    if (recognize->parsed()) {
      const GraphClass c = parse_class(class_tag);
      const RecognitionReport r = vsplit::recognize(read_graph(graph_path), c);
      write_recognition(w, r);
      code = r.verdict ? kOk : kFalse;
    } else if (split_paths->parsed()) {
      const Graph g = read_graph(graph_path);
      const TrailPartition tp = trail_partition(g);
      const SplitSequence seq = split_sequence_to_paths(g, tp);
      w.add("opt", static_cast<long long>(seq.size()));
      if (show_trails)
        for (const Trail& t : tp.trails) w.add("trail", format_trail(t));
      for (const Split& s : seq) w.add("split", format_split(s));
    } else if (trails->parsed()) {
      const TrailPartition tp = trail_partition(read_graph(graph_path));
      w.add("trails", static_cast<long long>(tp.count()));
      for (const Trail& t : tp.trails) w.add("trail", format_trail(t));
    } else if (solve->parsed()) {
      auto [target, mod] = parse_parameter(param_tag);
      const Graph g = read_graph(graph_path);
      if (!mode_tag.empty() && (mod == Modification::splits || mod == Modification::exclusive_splits))
        mod = mode_tag == "exclusive" ? Modification::exclusive_splits : Modification::splits;
      SolverReport r;
      if (mod == Modification::vertex_deletion) {
        r = brute_min_vertex_deletions(g, target, k_max, budget_nodes, budget_secs);
      } else if (mod == Modification::edge_deletion) {
        r = brute_min_edge_deletions(g, target, k_max, budget_nodes, budget_secs);
      } else {
        const SplitMode m = mod == Modification::exclusive_splits ? SplitMode::exclusive : SplitMode::inclusive;
        SearchOptions opt = unpruned ? SearchOptions::unpruned(m, k_max) : SearchOptions{};
        opt.mode = m;
        opt.k_max = k_max;
        opt.node_budget = budget_nodes;
        opt.time_budget = budget_secs;
        r = brute_min_splits(g, target, opt);
      }
      write_solver(w, r, !no_timing);
      code = r.status == SolveStatus::optimal ? kOk : r.status == SolveStatus::lower_bound ? kFalse : kBudget;
    } else if (apply->parsed()) {
      const Graph g = read_graph(graph_path);
      io.out << write_edge_list(apply_sequence(g, read_seq(seq_path)).first);
      return kOk;
    } else if (verify_cmd->parsed()) {
      const VerifyResult v = vsplit::verify(read_graph(graph_path), read_seq(seq_path), parse_class(target_tag));
      w.add("splits", static_cast<long long>(v.result.order() - read_graph(graph_path).order()));
      write_recognition(w, v.report);
      code = v.ok ? kOk : kFalse;
    } else if (exclusive->parsed()) {
      const SplitSequence out = make_exclusive(read_graph(graph_path), read_seq(seq_path), parse_class(target_tag));
      io.out << write_split_sequence(out);
      return kOk;
    } else if (reduce->parsed()) {
      const ReductionInstance inst = reduce_hampath_to_ivxs(read_graph(graph_path));
      io.out << write_edge_list(inst.subdivided, {{"k", std::to_string(inst.budget)}});
      return kOk;
    } else if (extract->parsed()) {
      const ReductionInstance inst = reduce_hampath_to_ivxs(read_graph(graph_path));
      const SplitSequence seq = read_seq(seq_path);
      try {
        w.add("hampath", extract_hampath(inst, seq));
      } catch (const std::invalid_argument& e) {
        io.err << "no solution: " << e.what() << '\n';
        return kFalse;
      }
    } else if (gen->parsed()) {
      io.out << write_edge_list(gen_family(tag, params));
      return kOk;
    } else if (stats->parsed()) {
      const Graph g = read_graph(graph_path);
      const auto cd = components(g);
      const int gi = girth(g);
      w.add("n", g.order());
      w.add("m", static_cast<long long>(g.size()));
      w.add("components", cd.count());
      w.add("max-degree", max_degree(g));
      w.add("girth", gi == kInfiniteGirth ? std::string("inf") : std::to_string(gi));
      w.add("triangle-free", detail::flag(is_triangle_free(g)));
      w.add("alpha-at-most-2", detail::flag(independence_at_most_two(g)));
      w.add("bipartite", detail::flag(is_bipartite(g).bipartite));
      w.add("chordal", detail::flag(chordal(g)));
      if (g.order() <= 2000) {
        w.add("interval", detail::flag(interval(g)));
        w.add("unit-interval", detail::flag(unit_interval(g)));
      }
      w.add("union-of-paths", detail::flag(union_of_paths(g)));
      w.add("path-splits", min_splits_to_paths(g));
    }
  } catch (const std::logic_error& e) {
    // invalid_argument derives from logic_error: bad input is a usage error
    if (dynamic_cast<const std::invalid_argument*>(&e) == nullptr) {
      io.err << "internal error: " << e.what() << '\n';
      return 4;
    }
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  }
  io.out << w.str();
  return code;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, Streams{std::cin, std::cout, std::cerr});
}

}  // namespace vsplit::cli

#endif  // VSPLIT_TOOLS_CLI_HPP
