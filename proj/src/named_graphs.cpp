// SPDX-License-Identifier: Apache-2.0
#include "frank/named_graphs.hpp"

#include <functional>
#include <map>

#include "frank/error.hpp"

namespace frank {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Multigraph complete(int n) {
  Pairs p;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
  return Multigraph::from_pairs(n, p);
}

Multigraph complete_bipartite(int a, int b) {
  Pairs p;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) p.emplace_back(i, a + j);
  return Multigraph::from_pairs(a + b, p);
}

// Outer cycle 0..n-1, inner vertices n..2n-1 with inner edges i -> i+k, spokes i -- n+i.
Multigraph generalized_petersen(int n, int k) {
  Pairs p;
  for (int i = 0; i < n; ++i) p.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) p.emplace_back(i, n + i);
  for (int i = 0; i < n; ++i) p.emplace_back(n + i, n + (i + k) % n);
  return Multigraph::from_pairs(2 * n, p);
}

Multigraph wheel(int rim) {
  Pairs p;
  for (int i = 0; i < rim; ++i) p.emplace_back(1 + i, 1 + (i + 1) % rim);
  for (int i = 0; i < rim; ++i) p.emplace_back(0, 1 + i);
  return Multigraph::from_pairs(rim + 1, p);
}

Multigraph heawood() {
  // LCF [5,-5]^7.
  Pairs p;
  for (int i = 0; i < 14; ++i) p.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) p.emplace_back(i, (i + 5) % 14);
  return Multigraph::from_pairs(14, p);
}

Multigraph cube() {
  Pairs p;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) p.emplace_back(v, v ^ (1 << b));
  return Multigraph::from_pairs(8, p);
}

Multigraph octahedron() {
  // K6 minus the antipodal matching {0,3},{1,4},{2,5}.
  Pairs p;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j != i + 3) p.emplace_back(i, j);
  return Multigraph::from_pairs(6, p);
}

const std::map<std::string, std::function<Multigraph()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<Multigraph()>, std::less<>> table = {
      {"petersen", [] { return generalized_petersen(5, 2); }},
      {"k4", [] { return complete(4); }},
      {"k5", [] { return complete(5); }},
      {"k6", [] { return complete(6); }},
      {"k33", [] { return complete_bipartite(3, 3); }},
      {"prism3", [] { return generalized_petersen(3, 1); }},
      {"prism5", [] { return generalized_petersen(5, 1); }},
      {"cube", [] { return cube(); }},
      {"moebius_kantor", [] { return generalized_petersen(8, 3); }},
      {"dodecahedron", [] { return generalized_petersen(10, 2); }},
      {"heawood", [] { return heawood(); }},
      {"octahedron", [] { return octahedron(); }},
      {"w4", [] { return wheel(4); }},
      {"w5", [] { return wheel(5); }},
      {"theta3", [] { return Multigraph::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}}); }},
      {"c4_doubled",
       [] { return Multigraph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 0}}); }},
      {"k33_truncated", [] { return truncate_vertex(complete_bipartite(3, 3), VertexId{0}); }},
      {"petersen_truncated", [] { return truncate_vertex(generalized_petersen(5, 2), VertexId{0}); }},
  };
  return table;
}

}  // namespace

Multigraph named_graph(std::string_view name) {
  const auto& table = registry();
  auto it = table.find(name);
  if (it == table.end()) fail(Errc::invalid_argument, "unknown graph name '" + std::string(name) + "'");
  return it->second();
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [name, make] : registry()) out.push_back(name);
  return out;
}

Multigraph truncate_vertex(const Multigraph& g, VertexId v) {
  require(degree(g, v) == 3, Errc::precondition, "truncate_vertex: vertex must have degree 3");
  int vi = g.vertex_index(v);
  for (const auto& inc : g.incident(vi)) {
    require(inc.other != vi, Errc::precondition, "truncate_vertex: loop at vertex");
  }
  int next_vertex = g.max_vertex_id().value + 1;
  int next_edge = g.max_edge_id().value + 1;
  std::vector<VertexId> vs;
  for (VertexId w : g.vertices()) {
    if (w != v) vs.push_back(w);
  }
  VertexId tri[3] = {VertexId{next_vertex}, VertexId{next_vertex + 1}, VertexId{next_vertex + 2}};
  for (VertexId t : tri) vs.push_back(t);
  std::vector<Edge> es;
  int slot = 0;
  for (const auto& e : g.edges()) {
    if (e.u == v) {
      es.push_back({e.id, tri[slot++], e.v});
    } else if (e.v == v) {
      es.push_back({e.id, e.u, tri[slot++]});
    } else {
      es.push_back(e);
    }
  }
  for (int i = 0; i < 3; ++i) es.push_back({EdgeId{next_edge + i}, tri[i], tri[(i + 1) % 3]});
  return Multigraph(std::move(vs), std::move(es));
}

}  // namespace frank
