// SPDX-License-Identifier: Apache-2.0
#include "frank/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "frank/error.hpp"

namespace frank {

void check_limits(const Multigraph& g, const GraphLimits& limits) {
  require(g.num_vertices() <= limits.max_vertices, Errc::too_large,
          "graph has " + std::to_string(g.num_vertices()) + " vertices; cap is " +
              std::to_string(limits.max_vertices));
  require(g.num_edges() <= limits.max_edges, Errc::too_large,
          "graph has " + std::to_string(g.num_edges()) + " edges; cap is " + std::to_string(limits.max_edges));
}

namespace {

int parse_int(std::string_view tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
    fail(Errc::parse_error, "line " + std::to_string(line) + ": bad vertex token '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Multigraph parse_edge_list(std::string_view text, const GraphLimits& limits) {
  std::set<VertexId> vertices;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) toks.push_back(line.substr(i, j - i));
      i = j;
    }
    if (toks.empty()) continue;
    if (toks.size() > 2) fail(Errc::parse_error, "line " + std::to_string(line_no) + ": expected 'u v'");
    VertexId u{parse_int(toks[0], line_no)};
    vertices.insert(u);
    if (toks.size() == 2) {
      VertexId v{parse_int(toks[1], line_no)};
      vertices.insert(v);
      edges.push_back({EdgeId{static_cast<int>(edges.size())}, u, v});
    }
  }
  Multigraph g({vertices.begin(), vertices.end()}, std::move(edges));
  check_limits(g, limits);
  return g;
}

std::string format_edge_list(const Multigraph& g) {
  std::ostringstream os;
  for (VertexId v : g.vertices()) {
    if (g.incident(g.vertex_index(v)).empty()) os << v.value << "\n";
  }
  for (const auto& e : g.edges()) os << e.u.value << " " << e.v.value << "\n";
  return os.str();
}

Multigraph parse_graph6(std::string_view text, const GraphLimits& limits) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) fail(Errc::parse_error, "graph6: truncated input");
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) fail(Errc::parse_error, "graph6: byte out of range");
    return c - 63;
  };
  long n = next();
  if (n == 63) {
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | next();
  }
  if (static_cast<std::size_t>(n) > limits.max_vertices) {
    fail(Errc::too_large, "graph6: " + std::to_string(n) + " vertices exceeds cap");
  }
  std::vector<std::pair<int, int>> pairs;
  int bits_left = 0, word = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits_left == 0) {
        word = next();
        bits_left = 6;
      }
      --bits_left;
      if ((word >> bits_left) & 1) pairs.emplace_back(i, j);
    }
  }
  if (pos != text.size()) fail(Errc::parse_error, "graph6: trailing bytes");
  Multigraph g = Multigraph::from_pairs(static_cast<int>(n), pairs);
  check_limits(g, limits);
  return g;
}

std::string format_graph6(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    int a = g.tail_index(static_cast<int>(i)), b = g.head_index(static_cast<int>(i));
    if (a == b) fail(Errc::graph6_multigraph, "graph6: graph has a loop");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      fail(Errc::graph6_multigraph, "graph6: graph has parallel edges");
    }
  }
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int k = 2; k >= 0; --k) out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
  }
  int word = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (seen.contains({i, j}) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + word));
        word = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (word << (6 - used))));
  return out;
}

}  // namespace frank
