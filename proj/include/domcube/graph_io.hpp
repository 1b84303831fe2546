#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "domcube/dom_graph.hpp"
#include "domcube/errors.hpp"
#include "domcube/graph.hpp"

namespace domcube {

// graph6, short form (n <= 62): one printable line per graph.
//   byte 0:      n + 63
//   bytes 1..k:  the n(n-1)/2 upper-triangle bits x(0,1), x(0,2), x(1,2),
//                x(0,3), x(1,3), x(2,3), ... packed 6 per byte, most
//                significant bit first, each byte offset by 63.
// Trailing pad bits must be zero; a lenient parse downgrades that to a
// silent accept for third-party files.

inline Graph parse_graph6(std::string_view line, bool lenient = false) {
  if (line.empty()) raise(Errc::bad_header, "empty graph6 line");
  for (char ch : line) {
    unsigned byte = static_cast<unsigned char>(ch);
    if (byte < 63 || byte > 126)
      raise(Errc::non_printable_byte, "byte " + std::to_string(byte) + " outside 63..126");
  }
  unsigned header = static_cast<unsigned char>(line[0]);
  if (header == 126) raise(Errc::bad_header, "multi-byte order form is not supported");
  int n = static_cast<int>(header) - 63;
  int pairs = n * (n - 1) / 2;
  std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
  if (line.size() != 1 + body)
    raise(Errc::bad_length, "expected " + std::to_string(1 + body) + " bytes for order " +
                                std::to_string(n) + ", got " + std::to_string(line.size()));
  std::vector<Edge> edges;
  int bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      unsigned byte = static_cast<unsigned char>(line[1 + static_cast<std::size_t>(bit / 6)]) - 63;
      if ((byte >> (5 - bit % 6)) & 1u) edges.emplace_back(row, col);
    }
  }
  if (!lenient) {
    for (int pad = pairs; pad < static_cast<int>(body) * 6; ++pad) {
      unsigned byte = static_cast<unsigned char>(line[1 + static_cast<std::size_t>(pad / 6)]) - 63;
      if ((byte >> (5 - pad % 6)) & 1u)
        raise(Errc::nonzero_padding, "pad bit " + std::to_string(pad - pairs) + " is set");
    }
  }
  return Graph(n, edges);  // n = 0 rejected here as OrderOutOfRange
}

inline std::string write_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62) raise(Errc::order_out_of_range, "graph6 short form caps at 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int pairs = n * (n - 1) / 2;
  out.resize(1 + static_cast<std::size_t>((pairs + 5) / 6), 63);
  int bit = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++bit)
      if (g.has_edge(row, col)) out[1 + static_cast<std::size_t>(bit / 6)] += 1 << (5 - bit % 6);
  return out;
}

// Edge-list text: first line "n <count>", then one "u v" line per edge.
inline Graph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag >> n) || tag != "n" || n < 0)
        raise(Errc::parse_error, "line 1: expected \"n <count>\"");
      continue;
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    int u, v;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest))
      raise(Errc::parse_error, "line " + std::to_string(lineno) + ": expected \"u v\"");
    if (u == v)
      raise(Errc::invalid_edge, "line " + std::to_string(lineno) + ": self-loop at " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      raise(Errc::invalid_edge, "line " + std::to_string(lineno) + ": endpoint out of range in (" +
                                    std::to_string(u) + "," + std::to_string(v) + ")");
    edges.emplace_back(u, v);
  }
  if (n < 0) raise(Errc::parse_error, "line 1: missing \"n <count>\" header");
  return Graph(n, edges);
}

// Canonical inverse of parse_edgelist: edges sorted ascending as (u,v), u < v.
inline std::string write_edgelist(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edge_list())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

struct DotOptions {
  std::string name = "G";
};

inline std::string write_dot(const Graph& g, const DotOptions& options = {}) {
  std::string out = "graph " + options.name + " {\n";
  for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& [u, v] : g.edge_list())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

// Dominating-graph vertices carry their dominating set as a brace-list label.
inline std::string write_dot(const DomGraph& h, const DotOptions& options = {}) {
  std::string out = "graph " + options.name + " {\n";
  for (int i = 0; i < h.order(); ++i)
    out += "  " + std::to_string(i) + " [label=\"" + h.label(i).to_braces() + "\"];\n";
  for (int i = 0; i < h.order(); ++i)
    for (int j : h.neighbors(i))
      if (i < j) out += "  " + std::to_string(i) + " -- " + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace domcube
