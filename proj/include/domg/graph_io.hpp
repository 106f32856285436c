#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "domg/bounds.hpp"
#include "domg/graph.hpp"

namespace domg {

class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Text format: optional '#' comment lines, a header "n m", then m lines
// "u v" with 0 <= u < v < n. Parsing then serializing is the identity up to
// comment stripping and edge ordering.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph load_graph_file(const std::string& path);

void serialize_graph(const Graph& g, std::ostream& out);
std::string graph_to_string(const Graph& g);

// One record per line, six tab-separated fields:
// graph id, bound id, holds (1/0), lhs, rhs, severity (OK/WARN/FAIL).
// lhs and rhs render as integers or exact "p/q" rationals.
std::string format_verdict(const BoundVerdict& v);

}  // namespace domg
