#include "domg/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace domg {

namespace {

// next non-comment, non-blank line
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw parse_error("graph file: missing header line");
  std::istringstream header(line);
  long long n = 0, m = 0;
  if (!(header >> n >> m)) throw parse_error("graph file: header must be 'n m'");
  std::string trailing;
  if (header >> trailing) throw parse_error("graph file: trailing tokens after header");
  if (n < 1) throw parse_error("graph file: vertex count must be >= 1");
  if (m < 0) throw parse_error("graph file: negative edge count");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line))
      throw parse_error("graph file: expected " + std::to_string(m) + " edges, got " +
                        std::to_string(i));
    std::istringstream es(line);
    long long u = 0, v = 0;
    if (!(es >> u >> v)) throw parse_error("graph file: bad edge line '" + line + "'");
    if (es >> trailing) throw parse_error("graph file: trailing tokens on edge line");
    if (u < 0 || v <= u || v >= n)
      throw parse_error("graph file: edge must satisfy 0 <= u < v < n, got '" + line + "'");
    if (g.has_edge(int(u), int(v)))
      throw parse_error("graph file: duplicate edge '" + line + "'");
    g.add_edge(int(u), int(v));
  }
  if (next_data_line(in, line))
    throw parse_error("graph file: unexpected data after the edge list");
  return g;
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream iss(text);
  return parse_graph(iss);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open graph file: " + path);
  return parse_graph(in);
}

void serialize_graph(const Graph& g, std::ostream& out) {
  auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream oss;
  serialize_graph(g, oss);
  return oss.str();
}

std::string format_verdict(const BoundVerdict& v) {
  const char* sev = v.severity == Severity::OK     ? "OK"
                    : v.severity == Severity::WARN ? "WARN"
                                                   : "FAIL";
  std::ostringstream oss;
  oss << v.graph_id << '\t' << v.bound_id << '\t' << (v.holds ? 1 : 0) << '\t' << v.lhs.str()
      << '\t' << v.rhs.str() << '\t' << sev;
  return oss.str();
}

}  // namespace domg
