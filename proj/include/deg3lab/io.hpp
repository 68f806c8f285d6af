#pragma once

// Edge-list text format:
//
//   n m
//   u v        (m lines, 0 <= u < v < n)
//   root r     (optional, trees only)

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "deg3lab/errors.hpp"
#include "deg3lab/graph.hpp"

namespace deg3lab {

struct EdgeListFile {
  Graph graph;
  std::optional<Vertex> root;
};

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] inline void parse_fail(int lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace detail

inline EdgeListFile read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) detail::parse_fail(lineno, "missing header");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) detail::parse_fail(lineno, "expected \"n m\"");
  }
  if (n < 0 || m < 0 || n > 10'000'000) detail::parse_fail(lineno, "bad header values");
  if (m > n * (n - 1) / 2) detail::parse_fail(lineno, "too many edges for n");

  EdgeListFile out{Graph(static_cast<int>(n)), std::nullopt};
  for (long long t = 0; t < m; ++t) {
    if (!detail::next_content_line(in, line, lineno)) detail::parse_fail(lineno, "missing edge lines");
    std::istringstream es(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) detail::parse_fail(lineno, "expected \"u v\"");
    if (!(0 <= u && u < v && v < n)) detail::parse_fail(lineno, "edge must satisfy 0 <= u < v < n");
    if (out.graph.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      detail::parse_fail(lineno, "duplicate edge");
    }
    out.graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (detail::next_content_line(in, line, lineno)) {
    std::istringstream rs(line);
    std::string word;
    long long r = -1;
    std::string extra;
    if (!(rs >> word >> r) || word != "root" || (rs >> extra)) detail::parse_fail(lineno, "unexpected trailing content");
    if (r < 0 || r >= n) detail::parse_fail(lineno, "root out of range");
    out.root = static_cast<Vertex>(r);
    if (detail::next_content_line(in, line, lineno)) detail::parse_fail(lineno, "unexpected trailing content");
  }
  return out;
}

inline EdgeListFile parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g, std::optional<Vertex> root = std::nullopt) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  if (root) out << "root " << *root << '\n';
}

inline std::string to_edge_list(const Graph& g, std::optional<Vertex> root = std::nullopt) {
  std::ostringstream out;
  write_edge_list(out, g, root);
  return out.str();
}

}  // namespace deg3lab
