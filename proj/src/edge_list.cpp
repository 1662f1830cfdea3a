#include <algorithm>
#include <charconv>
#include <limits>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "girthkit/error.hpp"
#include "girthkit/graph.hpp"

namespace girthkit {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Reads exactly two unsigned integers separated by whitespace.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  auto skip_ws = [&] {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
  };
  skip_ws();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{} || r1.ptr == p) return false;
  p = r1.ptr;
  if (p == end || (*p != ' ' && *p != '\t')) return false;
  skip_ws();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{} || r2.ptr == p) return false;
  p = r2.ptr;
  skip_ws();
  return p == end;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_pair(line, a, b)) {
      throw ParseError(line_no, have_header ? "expected \"u v\"" : "expected header \"n m\"");
    }
    if (!have_header) {
      if (a > std::numeric_limits<VertexId>::max()) throw ParseError(line_no, "n too large");
      n = a;
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(b, 1u << 24)));
      have_header = true;
      continue;
    }
    if (a >= n || b >= n) {
      throw ParseError(line_no, "vertex id out of range (n = " + std::to_string(n) + ")");
    }
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
  }
  if (!have_header) throw ParseError(line_no, "missing header \"n m\"");
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto edges = g.active_edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

}  // namespace girthkit
