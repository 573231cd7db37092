#pragma once

// Canonical edge-list text format: first line "n m", then m lines "u v"
// with 0 <= u < v < n. Lines whose first non-space character is '#' are
// comments. This is the interchange format of every CLI command.

#include <istream>
#include <set>
#include <sstream>
#include <string>

#include "sqroot/graph.hpp"
#include "sqroot/width.hpp"

namespace sqroot {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  int line_number;
};

inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++line_no;
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_data_line(header)) throw ParseError(line_no, "missing header");
  long long n, m;
  {
    std::istringstream ss(header);
    std::string extra;
    if (!(ss >> n >> m) || (ss >> extra))
      throw ParseError(line_no, "malformed header, expected 'n m'");
    if (n < 0 || m < 0) throw ParseError(line_no, "negative header counts");
  }

  EdgeList edges;
  std::set<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    std::string data;
    if (!next_data_line(data))
      throw ParseError(line_no, "expected " + std::to_string(m) +
                                    " edges, found " + std::to_string(i));
    std::istringstream ss(data);
    long long u, v;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra))
      throw ParseError(line_no, "malformed edge line, expected 'u v'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line_no, "vertex out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    int a = static_cast<int>(std::min(u, v)), b = static_cast<int>(std::max(u, v));
    if (!seen.emplace(a, b).second) throw ParseError(line_no, "duplicate edge");
    edges.emplace_back(a, b);
  }
  std::string trailing;
  if (next_data_line(trailing)) throw ParseError(line_no, "trailing content after edges");
  return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline std::string format_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string format_decomposition(const Decomposition& dec) {
  std::ostringstream out;
  for (size_t i = 0; i < dec.bags.size(); ++i) {
    out << "bag " << i << " :";
    for (int v : dec.bags[i]) out << ' ' << v;
    out << '\n';
  }
  if (dec.kind == WidthKind::tree)
    for (const auto& [a, b] : dec.tree_edges) out << "tree-edge " << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace sqroot
