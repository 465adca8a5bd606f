#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace vsplit;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, cli::Streams{in, out, err});
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("vsplit_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("recognize exit codes and witnesses") {
  const std::string claw = run({"gen", "claw"}).out;
  auto r = run({"recognize", "unit-interval", "-"}, claw);
  CHECK(r.code == 1);
  CHECK(r.out.find("WITNESS claw 0 1 2 3") != std::string::npos);

  r = run({"recognize", "interval"}, claw);
  CHECK(r.code == 0);
  CHECK(r.out.find("VERDICT true") != std::string::npos);

  r = run({"recognize", "chordal", "--format", "records"}, run({"gen", "cycle", "4"}).out);
  CHECK(r.code == 1);
  CHECK(r.out.find("witness\tcycle ") != std::string::npos);

  r = run({"--format", "records", "recognize", "chordal"}, run({"gen", "cycle", "4"}).out);
  CHECK(r.out.find("verdict\tfalse") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"recognize", "bipartite"}, "0 1\n").code == 2);
  CHECK(run({"recognize", "chordal"}, "0 1 2\n").code == 2);
  CHECK(run({"gen", "cycle"}).code == 2);
  CHECK(run({"recognize", "chordal", "/nonexistent/file"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("solve output passes verify") {
  const std::string g = temp_file("c5.txt", run({"gen", "cycle", "5"}).out);
  auto r = run({"solve", "ChVS", g, "--no-timing"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("OPT 1") != std::string::npos);
  CHECK(r.out.find("SECS") == std::string::npos);

  std::string seq;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);)
    if (line.rfind("SPLIT ", 0) == 0) seq += line.substr(6) + "\n";
  const std::string s = temp_file("c5.seq", seq);
  auto v = run({"verify", g, s, "--target", "chordal"});
  CHECK(v.code == 0);
  CHECK(v.out.find("SPLITS 1") != std::string::npos);

  auto a = run({"apply", g, s});
  CHECK(a.code == 0);
  CHECK(a.out.find("n 6") != std::string::npos);

  CHECK(run({"verify", g, temp_file("empty.seq", ""), "--target", "chordal"}).code == 1);
}

TEST_CASE("solve statuses") {
  const std::string fig6 = run({"gen", "fig6"}).out;
  auto r = run({"solve", "ChVD", "-", "--no-timing"}, fig6);
  CHECK(r.code == 0);
  CHECK(r.out.find("OPT 2") != std::string::npos);

  r = run({"solve", "ChVS", "--kmax", "0"}, fig6);
  CHECK(r.code == 1);
  CHECK(r.out.find("STATUS lower-bound") != std::string::npos);

  r = run({"solve", "ChVS", "--unpruned", "--budget-nodes", "3"}, fig6);
  CHECK(r.code == 3);
  CHECK(r.out.find("STATUS budget-exceeded") != std::string::npos);

  CHECK(run({"solve", "QQQ"}, fig6).code == 2);
}

TEST_CASE("paths, trails and stats") {
  const std::string c6 = run({"gen", "cycle", "6"}).out;
  auto r = run({"split-paths", "--trails"}, c6);
  CHECK(r.code == 0);
  CHECK(r.out.find("OPT 1") != std::string::npos);
  CHECK(r.out.find("TRAIL 0: 0") != std::string::npos);

  r = run({"trails"}, run({"gen", "complete", "4"}).out);
  CHECK(r.out.find("TRAILS 2") != std::string::npos);

  r = run({"stats", "--format", "records"}, c6);
  CHECK(r.code == 0);
  CHECK(r.out.find("girth\t6") != std::string::npos);
  CHECK(r.out.find("path-splits\t1") != std::string::npos);
}

TEST_CASE("reduce, make-exclusive and extract") {
  auto r = run({"reduce"}, run({"gen", "cubic", "k4"}).out);
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# k = 3\nn 10\n", 0) == 0);

  const std::string k4 = temp_file("k4.txt", run({"gen", "complete", "4"}).out);
  // path 0-1-2-3 leaves edges 02, 03, 13 (ids 5, 6, 8)
  const std::string seq = temp_file("k4.seq", "5 : 0 | 2\n6 : 0 | 3\n8 : 1 | 3\n");
  r = run({"extract", k4, seq});
  CHECK(r.code == 0);
  CHECK(r.out == "HAMPATH 0 1 2 3\n");
  CHECK(run({"extract", k4, temp_file("bad.seq", "")}).code == 1);

  const std::string claw = temp_file("claw.txt", run({"gen", "claw"}).out);
  r = run({"make-exclusive", claw, temp_file("claw.seq", "0 : 1,2 | 2,3\n"), "--target", "unit-interval"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 : 1,2 | 3\n");
}
