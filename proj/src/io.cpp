#include "orientdia/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "orientdia/errors.hpp"

namespace orientdia {

namespace {

struct Pair {
  std::uint64_t first;
  std::uint64_t second;
};

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw InputError("line " + std::to_string(line) + ": " + why);
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Exactly two non-negative integers separated by blanks.
Pair parse_pair(std::string_view line, std::size_t line_no) {
  std::uint64_t values[2];
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    std::string_view token = line.substr(pos, end - pos);
    if (count == 2) fail(line_no, "expected two integers, found extra token '" + std::string(token) + "'");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(line_no, "'" + std::string(token) + "' is not a non-negative integer");
    }
    values[count++] = v;
    pos = end;
  }
  if (count != 2) fail(line_no, "expected two integers");
  return {values[0], values[1]};
}

struct RawList {
  std::size_t vertex_count;
  std::vector<Edge> pairs;
};

RawList parse_raw(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    lines.emplace_back(line_no, line);
  }
  if (lines.empty()) throw InputError("line 1: missing 'n m' header");

  auto [n, m] = parse_pair(lines[0].second, lines[0].first);
  if (n > (1u << 24)) fail(lines[0].first, "vertex count too large");
  if (lines.size() - 1 != m) {
    std::size_t where = lines.size() > m + 1 ? lines[m + 1].first : line_no;
    fail(where, "header declares " + std::to_string(m) + " edges, found " +
                    std::to_string(lines.size() - 1));
  }
  RawList raw{static_cast<std::size_t>(n), {}};
  raw.pairs.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [u, v] = parse_pair(lines[i].second, lines[i].first);
    if (u >= n || v >= n) fail(lines[i].first, "endpoint out of range 0.." + std::to_string(n - 1));
    if (u == v) fail(lines[i].first, "loop at vertex " + std::to_string(u));
    raw.pairs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return raw;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

MultiGraph parse_edge_list(std::string_view text) {
  auto raw = parse_raw(text);
  return MultiGraph(raw.vertex_count, std::move(raw.pairs));
}

Digraph parse_arc_list(std::string_view text) {
  auto raw = parse_raw(text);
  std::vector<Arc> arcs;
  arcs.reserve(raw.pairs.size());
  for (const Edge& e : raw.pairs) arcs.push_back({e.u, e.v});
  return Digraph(raw.vertex_count, std::move(arcs));
}

MultiGraph load_edge_list(const std::string& path) { return parse_edge_list(read_file(path)); }
Digraph load_arc_list(const std::string& path) { return parse_arc_list(read_file(path)); }

std::string to_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_arc_list(const Digraph& d) {
  std::ostringstream out;
  out << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph {\n";
  // Isolated vertices still need to appear.
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (d.out_neighbors(v).empty() && d.in_neighbors(v).empty()) out << "  " << v << ";\n";
  }
  for (const Arc& a : d.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
  out << "}\n";
  return out.str();
}

void save_text(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

}  // namespace orientdia
