#ifndef VSPLIT_IO_HPP
#define VSPLIT_IO_HPP

#include <cstddef>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vsplit/graph.hpp"
#include "vsplit/paths.hpp"
#include "vsplit/recognition.hpp"
#include "vsplit/solvers.hpp"
#include "vsplit/splitting.hpp"

namespace vsplit {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline int parse_int(std::string_view tok, std::size_t line) {
  if (tok.empty()) throw ParseError("expected an integer", line);
  std::size_t i = 0;
  bool neg = false;
  if (tok[0] == '-') {
    neg = true;
    i = 1;
  }
  if (i == tok.size()) throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  long long v = 0;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
    v = v * 10 + (tok[i] - '0');
    if (v > 1'000'000'000) throw ParseError("integer out of range", line);
  }
  return static_cast<int>(neg ? -v : v);
}

/// Position of a comment '#': at line start or after whitespace, so labels
/// such as "v#2" survive.
inline std::size_t comment_start(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '#' && (i == 0 || s[i - 1] == ' ' || s[i - 1] == '\t')) return i;
  return std::string_view::npos;
}

inline std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

inline std::string join(const VertexList& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Edge lists
// ---------------------------------------------------------------------------

struct ParsedGraph {
  Graph graph;
  std::map<std::string, std::string> meta;  // from "# key = value" comments
  std::size_t dropped = 0;                  // lenient mode only
};

/// Edge-list format: '#' comments ("# key = value" comments are kept as
/// metadata), an optional "n <N>" line, optional "label <id> <name>" lines,
/// and one "u v" pair per line. Without "n" the order is max id + 1.
inline ParsedGraph parse_edge_list(std::istream& in, BuildMode mode = BuildMode::strict) {
  ParsedGraph out;
  int n = -1;
  int max_id = -1;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::map<int, std::string> labels;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (const auto hash = detail::comment_start(s); hash != std::string_view::npos) {
      const std::string_view comment = s.substr(hash + 1);
      if (const auto eq = comment.find('='); eq != std::string_view::npos) {
        const auto key = detail::trim(comment.substr(0, eq));
        const auto value = detail::trim(comment.substr(eq + 1));
        if (!key.empty() && key.find(' ') == std::string_view::npos) out.meta[std::string(key)] = value;
      }
      s = s.substr(0, hash);
    }
    const auto tok = detail::tokens(s);
    if (tok.empty()) continue;
    if (tok[0] == "n") {
      if (tok.size() != 2) throw ParseError("expected 'n <count>'", line);
      if (n >= 0 || !pairs.empty()) throw ParseError("'n' must come first and only once", line);
      n = detail::parse_int(tok[1], line);
      if (n < 0) throw ParseError("negative vertex count", line);
      continue;
    }
    if (tok[0] == "label") {
      if (tok.size() != 3) throw ParseError("expected 'label <id> <name>'", line);
      const int id = detail::parse_int(tok[1], line);
      if (id < 0) throw ParseError("negative vertex id", line);
      labels[id] = std::string(tok[2]);
      max_id = std::max(max_id, id);
      continue;
    }
    if (tok.size() != 2) throw ParseError("expected 'u v'", line);
    const int u = detail::parse_int(tok[0], line), v = detail::parse_int(tok[1], line);
    if (u < 0 || v < 0) throw ParseError("negative vertex id", line);
    if (n >= 0 && (u >= n || v >= n)) throw ParseError("vertex id out of range", line);
    max_id = std::max({max_id, u, v});
    pairs.emplace_back(u, v);
  }
  if (n < 0) n = max_id + 1;
  if (max_id >= n) throw ParseError("label id out of range", line);
  out.graph = Graph::from_edges(n, pairs, mode, &out.dropped);
  if (!labels.empty()) {
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) names[v] = labels.count(v) ? labels[v] : std::to_string(v);
    out.graph = out.graph.with_labels(std::move(names));
  }
  return out;
}

inline ParsedGraph parse_edge_list(const std::string& text, BuildMode mode = BuildMode::strict) {
  std::istringstream in(text);
  return parse_edge_list(in, mode);
}

/// "n <N>", then labels (if any), then sorted edges. Metadata goes first as
/// "# key = value" lines.
inline std::string write_edge_list(const Graph& g, const std::map<std::string, std::string>& meta = {}) {
  std::ostringstream out;
  for (const auto& [k, v] : meta) out << "# " << k << " = " << v << '\n';
  out << "n " << g.order() << '\n';
  if (g.has_labels())
    for (Vertex v = 0; v < g.order(); ++v) out << "label " << v << ' ' << g.label(v) << '\n';
  for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Split sequences
// ---------------------------------------------------------------------------

inline std::string format_split(const Split& raw) {
  const Split s = normalized(raw);
  std::string out = std::to_string(s.target) + " :";
  if (!s.part_a.empty()) out += " " + detail::join(s.part_a, ",");
  out += " |";
  if (!s.part_b.empty()) out += " " + detail::join(s.part_b, ",");
  return out;
}

/// One split per line: "v : a1,a2,... | b1,b2,...", either side may be blank.
inline SplitSequence parse_split_sequence(std::istream& in) {
  SplitSequence seq;
  std::string raw;
  std::size_t line = 0;
  auto parse_side = [&](std::string_view side) {
    VertexList out;
    side = detail::trim(side);
    if (side.empty()) return out;
    std::size_t b = 0;
    while (true) {
      const auto comma = side.find(',', b);
      const auto tok = detail::trim(side.substr(b, comma == std::string_view::npos ? side.npos : comma - b));
      const int v = detail::parse_int(tok, line);
      if (v < 0) throw ParseError("negative vertex id", line);
      out.push_back(v);
      if (comma == std::string_view::npos) break;
      b = comma + 1;
    }
    return out;
  };
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (const auto hash = detail::comment_start(s); hash != std::string_view::npos) s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;
    const auto colon = s.find(':');
    const auto bar = s.find('|');
    if (colon == std::string_view::npos || bar == std::string_view::npos || bar < colon)
      throw ParseError("expected 'v : a,... | b,...'", line);
    Split sp;
    sp.target = detail::parse_int(detail::trim(s.substr(0, colon)), line);
    if (sp.target < 0) throw ParseError("negative vertex id", line);
    sp.part_a = parse_side(s.substr(colon + 1, bar - colon - 1));
    sp.part_b = parse_side(s.substr(bar + 1));
    seq.push_back(normalized(std::move(sp)));
  }
  return seq;
}

inline SplitSequence parse_split_sequence(const std::string& text) {
  std::istringstream in(text);
  return parse_split_sequence(in);
}

inline std::string write_split_sequence(const SplitSequence& seq) {
  std::string out;
  for (const Split& s : seq) out += format_split(s) + '\n';
  return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

enum class OutputFormat { human, records };

/// Key/value lines; human format is "KEY value", records format is
/// "key<TAB>value".
class ReportWriter {
 public:
  explicit ReportWriter(OutputFormat f) : format_(f) {}

  void add(std::string_view key, const std::string& value) {
    if (format_ == OutputFormat::human) {
      std::string k(key);
      for (char& c : k) c = static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : (c == '-' ? '_' : c));
      out_ << k;
      if (!value.empty()) out_ << ' ' << value;
      out_ << '\n';
    } else {
      out_ << key << '\t' << value << '\n';
    }
  }
  void add(std::string_view key, const VertexList& v) { add(key, detail::join(v, " ")); }
  void add(std::string_view key, long long v) { add(key, std::to_string(v)); }

  std::string str() const { return out_.str(); }

 private:
  OutputFormat format_;
  std::ostringstream out_;
};

inline std::string witness_text(const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::none: return "none";
    case Witness::Kind::induced_cycle: return "cycle " + detail::join(w.vertices, " ");
    case Witness::Kind::pattern: return std::string(pattern_name(w.pattern)) + " " + detail::join(w.vertices, " ");
    case Witness::Kind::asteroidal_triple: return "asteroidal-triple " + detail::join(w.vertices, " ");
    case Witness::Kind::degree: return "degree " + detail::join(w.vertices, " ");
    case Witness::Kind::disconnected: return "disconnected " + detail::join(w.vertices, " ");
  }
  return "none";
}

inline void write_recognition(ReportWriter& w, const RecognitionReport& r) {
  w.add("class", std::string(class_name(r.target)));
  w.add("verdict", r.verdict ? "true" : "false");
  if (r.verdict) {
    switch (r.certificate.kind) {
      case Certificate::Kind::elimination_order: w.add("cert", "peo " + detail::join(r.certificate.lists[0], " ")); break;
      case Certificate::Kind::spines:
        for (const auto& s : r.certificate.lists) w.add("cert", "spine " + detail::join(s, " "));
        break;
      case Certificate::Kind::paths:
        for (const auto& p : r.certificate.lists) w.add("cert", "path " + detail::join(p, " "));
        break;
      case Certificate::Kind::none: break;
    }
  } else {
    w.add("witness", witness_text(r.witness));
    for (const auto& p : r.witness.paths) w.add("path", p);
  }
}

inline void write_solver(ReportWriter& w, const SolverReport& r, bool timing = true) {
  w.add("param", r.parameter);
  w.add("status", std::string(status_name(r.status)));
  if (r.optimal())
    w.add("opt", r.optimum);
  else
    w.add("opt", ">=" + std::to_string(r.lower_bound));
  if (r.optimal()) {
    const auto mod = parse_parameter(r.parameter).second;
    if (mod == Modification::vertex_deletion) {
      w.add("witness", r.vertices);
    } else if (mod == Modification::edge_deletion) {
      std::string s;
      for (std::size_t i = 0; i < r.edges.size(); ++i)
        s += (i ? " " : "") + std::to_string(r.edges[i].u) + "-" + std::to_string(r.edges[i].v);
      w.add("witness", s);
    } else {
      w.add("witness", std::to_string(r.splits.size()) + " splits");
      for (const Split& s : r.splits) w.add("split", format_split(s));
    }
  }
  w.add("nodes", r.nodes);
  if (timing) {
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << r.seconds;
    w.add("secs", secs.str());
  }
}

inline std::string format_trail(const Trail& t) {
  return std::to_string(t.component) + ": " + detail::join(t.walk, " ");
}

}  // namespace vsplit

#endif  // VSPLIT_IO_HPP
