// SPDX-License-Identifier: Apache-2.0
#include "frank/structures.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "frank/connectivity.hpp"
#include "frank/error.hpp"

namespace frank {

// ---------------------------------------------------------------------------
// Matchings and colorings.

namespace {

// Calls visit(matching) for every perfect matching until it returns false.
void for_each_perfect_matching(const Multigraph& g, const std::function<bool(const EdgeSet&)>& visit) {
  const int n = static_cast<int>(g.num_vertices());
  if (n % 2) return;
  std::vector<char> matched(n, 0);
  std::vector<int> chosen;
  bool stop = false;
  std::function<void()> rec = [&]() {
    if (stop) return;
    int v = 0;
    while (v < n && matched[v]) ++v;
    if (v == n) {
      EdgeSet m;
      for (int ei : chosen) m.insert(g.edge_at(ei).id);
      if (!visit(m)) stop = true;
      return;
    }
    matched[v] = 1;
    for (const auto& inc : g.incident(v)) {
      if (inc.other == v || matched[inc.other]) continue;
      matched[inc.other] = 1;
      chosen.push_back(inc.edge);
      rec();
      chosen.pop_back();
      matched[inc.other] = 0;
      if (stop) break;
    }
    matched[v] = 0;
  };
  rec();
}

}  // namespace

std::optional<EdgeSet> perfect_matching(const Multigraph& g) {
  std::optional<EdgeSet> out;
  for_each_perfect_matching(g, [&](const EdgeSet& m) {
    out = m;
    return false;
  });
  return out;
}

std::vector<EdgeSet> enumerate_perfect_matchings(const Multigraph& g, std::size_t limit) {
  std::vector<EdgeSet> out;
  if (limit == 0) return out;
  for_each_perfect_matching(g, [&](const EdgeSet& m) {
    out.push_back(m);
    return out.size() < limit;
  });
  return out;
}

std::optional<std::array<EdgeSet, 3>> proper_3_edge_coloring(const Multigraph& g) {
  require(is_cubic(g), Errc::precondition, "3-edge-coloring needs a cubic graph");
  const int m = static_cast<int>(g.num_edges());
  for (int ei = 0; ei < m; ++ei) {
    if (g.edge_at(ei).is_loop()) return std::nullopt;
  }
  // Edges in breadth-first order so that neighbouring edges are colored close together.
  std::vector<int> order;
  std::vector<char> listed(m, 0), seen(g.num_vertices(), 0);
  for (int root = 0; root < static_cast<int>(g.num_vertices()); ++root) {
    if (seen[root]) continue;
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(v)) {
        if (!listed[inc.edge]) {
          listed[inc.edge] = 1;
          order.push_back(inc.edge);
        }
        if (!seen[inc.other]) {
          seen[inc.other] = 1;
          queue.push_back(inc.other);
        }
      }
    }
  }
  std::vector<int> color(m, -1);
  std::vector<int> used(g.num_vertices(), 0);  // bit c set when color c is taken at the vertex
  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) return true;
    const int ei = order[k];
    const int a = g.tail_index(ei), b = g.head_index(ei);
    const int limit = k == 0 ? 1 : 3;  // the first edge takes color 0 by symmetry
    for (int c = 0; c < limit; ++c) {
      if (((used[a] | used[b]) >> c) & 1) continue;
      color[ei] = c;
      used[a] |= 1 << c;
      used[b] |= 1 << c;
      if (rec(k + 1)) return true;
      used[a] &= ~(1 << c);
      used[b] &= ~(1 << c);
      color[ei] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::array<EdgeSet, 3> out;
  for (int ei = 0; ei < m; ++ei) out[color[ei]].insert(g.edge_at(ei).id);
  return out;
}

DoubleCover berge_fulkerson_cover(const Multigraph& g, long node_budget) {
  require(is_cubic(g), Errc::precondition, "double cover search needs a cubic graph");
  DoubleCover out;
  if (node_budget <= 0) return out;
  const auto matchings = enumerate_perfect_matchings(g);
  const int m = static_cast<int>(g.num_edges());
  std::vector<std::vector<int>> edges_of(matchings.size());
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    for (EdgeId e : matchings[i]) edges_of[i].push_back(g.edge_index(e));
  }
  std::vector<int> need(m, 2);
  std::vector<int> chosen;
  long nodes = 0;
  bool aborted = false;
  auto usable = [&](std::size_t i) {
    return std::all_of(edges_of[i].begin(), edges_of[i].end(), [&](int ei) { return need[ei] > 0; });
  };
  std::function<bool()> rec = [&]() {
    if (++nodes > node_budget) {
      aborted = true;
      return false;
    }
    int pivot = -1;
    std::size_t fewest = matchings.size() + 1;
    for (int ei = 0; ei < m; ++ei) {
      if (need[ei] == 0) continue;
      std::size_t count = 0;
      for (std::size_t i = 0; i < matchings.size(); ++i) {
        if (usable(i) && std::binary_search(edges_of[i].begin(), edges_of[i].end(), ei)) ++count;
      }
      if (count < fewest) {
        fewest = count;
        pivot = ei;
      }
    }
    if (pivot < 0) return chosen.size() == 6;
    if (chosen.size() == 6 || fewest == 0) return false;
    for (std::size_t i = 0; i < matchings.size(); ++i) {
      if (!usable(i) || !std::binary_search(edges_of[i].begin(), edges_of[i].end(), pivot)) continue;
      for (int ei : edges_of[i]) --need[ei];
      chosen.push_back(static_cast<int>(i));
      if (rec()) return true;
      chosen.pop_back();
      for (int ei : edges_of[i]) ++need[ei];
      if (aborted) return false;
    }
    return false;
  };
  for (auto& v : edges_of) std::sort(v.begin(), v.end());
  if (rec()) {
    out.outcome = Outcome::yes;
    for (int i : chosen) out.matchings.push_back(matchings[i]);
    std::sort(out.matchings.begin(), out.matchings.end());
  } else {
    out.outcome = aborted ? Outcome::indeterminate : Outcome::no;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Joins and trees.

VertexSet odd_vertices(const Multigraph& g, const EdgeSet& f) {
  std::map<VertexId, int> deg;
  for (EdgeId e : f) {
    const Edge& edge = g.edge(e);
    ++deg[edge.u];
    ++deg[edge.v];
  }
  VertexSet out;
  for (const auto& [v, d] : deg) {
    if (d % 2) out.insert(v);
  }
  return out;
}

std::optional<EdgeSet> t_join(const Multigraph& g, const VertexSet& t) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<char> odd(n, 0);
  for (VertexId v : t) odd[g.vertex_index(v)] = 1;
  std::vector<int> parent_edge(n, -1), parent(n, -1), order;
  std::vector<char> seen(n, 0);
  EdgeSet out;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    order.clear();
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (const auto& inc : g.incident(v)) {
        if (seen[inc.other]) continue;
        seen[inc.other] = 1;
        parent[inc.other] = v;
        parent_edge[inc.other] = inc.edge;
        queue.push_back(inc.other);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      if (!odd[v] || v == root) continue;
      out.insert(g.edge_at(parent_edge[v]).id);
      odd[v] = 0;
      odd[parent[v]] ^= 1;
    }
    if (odd[root]) return std::nullopt;
  }
  return out;
}

std::optional<std::pair<EdgeSet, EdgeSet>> two_edge_disjoint_spanning_trees(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  const int m = static_cast<int>(g.num_edges());
  if (n == 0) return std::pair<EdgeSet, EdgeSet>{};
  std::vector<int> owner(m, -1);  // forest 0 or 1, or -1

  // Path between a and b inside forest f (dense edge indices), empty when they are not connected.
  auto forest_path = [&](int f, int a, int b, bool& connected) {
    std::vector<int> via(n, -2);
    std::vector<int> stack{a};
    via[a] = -1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (owner[inc.edge] != f || via[inc.other] != -2) continue;
        via[inc.other] = inc.edge;
        stack.push_back(inc.other);
      }
    }
    std::vector<int> path;
    connected = via[b] != -2;
    if (!connected) return path;
    for (int v = b; v != a;) {
      int ei = via[v];
      path.push_back(ei);
      v = g.tail_index(ei) == v ? g.head_index(ei) : g.tail_index(ei);
    }
    return path;
  };

  for (int e = 0; e < m; ++e) {
    if (g.edge_at(e).is_loop()) continue;
    // Breadth-first search over (edge, target forest); each edge is labeled once
    // with the edge that displaces it and the forest that edge moves into.
    std::vector<int> parent(m, -2), parent_target(m, -1);
    std::deque<std::pair<int, int>> queue{{e, 0}, {e, 1}};
    parent[e] = -1;
    while (!queue.empty()) {
      auto [x, f] = queue.front();
      queue.pop_front();
      bool connected = false;
      auto path = forest_path(f, g.tail_index(x), g.head_index(x), connected);
      if (!connected) {
        for (int cur = x, target = f; cur >= 0;) {
          const int next_target = parent_target[cur];
          const int next = parent[cur];
          owner[cur] = target;
          cur = next;
          target = next_target;
        }
        break;
      }
      for (int y : path) {
        if (parent[y] != -2) continue;
        parent[y] = x;
        parent_target[y] = f;
        queue.push_back({y, 1 - f});
      }
    }
  }
  EdgeSet t1, t2;
  for (int ei = 0; ei < m; ++ei) {
    if (owner[ei] == 0) t1.insert(g.edge_at(ei).id);
    if (owner[ei] == 1) t2.insert(g.edge_at(ei).id);
  }
  if (static_cast<int>(t1.size()) != n - 1 || static_cast<int>(t2.size()) != n - 1) return std::nullopt;
  for (const EdgeSet* t : {&t1, &t2}) {
    require(connected_components(keep_edges(g, *t)).size() == 1, Errc::internal,
            "spanning tree augmentation produced a disconnected forest");
  }
  return std::pair{t1, t2};
}

std::array<EdgeSet, 3> partition_into_three_tjoins(const Multigraph& g) {
  require(is_k_edge_connected(g, 4), Errc::precondition, "three T-joins need a 4-edge-connected graph");
  auto trees = two_edge_disjoint_spanning_trees(g);
  require(trees.has_value(), Errc::internal, "no two edge-disjoint spanning trees in a 4-edge-connected graph");
  const VertexSet t = odd_vertices(g, g.edge_set());
  std::array<EdgeSet, 3> out;
  out[0] = *t_join(keep_edges(g, trees->first), t);
  out[1] = *t_join(keep_edges(g, trees->second), t);
  for (const auto& e : g.edges()) {
    if (!out[0].contains(e.id) && !out[1].contains(e.id)) out[2].insert(e.id);
  }
  for (const auto& part : out) {
    require(odd_vertices(g, part) == t, Errc::internal, "T-join partition failed its parity check");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cycle packings.

EdgeSet CyclePacking::edge_set() const {
  EdgeSet out;
  for (const auto& c : cycles) out.insert(c.edges.begin(), c.edges.end());
  return out;
}

VertexSet CyclePacking::vertex_set() const {
  VertexSet out;
  for (const auto& c : cycles) out.insert(c.vertices.begin(), c.vertices.end());
  return out;
}

CyclePacking packing_from_edges(const Multigraph& g, const EdgeSet& f) {
  std::map<VertexId, std::vector<EdgeId>> at;
  for (EdgeId e : f) {
    const Edge& edge = g.edge(e);
    at[edge.u].push_back(e);
    at[edge.v].push_back(e);
  }
  for (const auto& [v, es] : at) {
    require(es.size() == 2, Errc::invalid_argument,
            "edge set is not a union of disjoint cycles at vertex " + std::to_string(v.value));
  }
  CyclePacking p;
  EdgeSet used;
  for (const auto& [start, es] : at) {
    if (used.contains(es[0])) continue;
    Cycle c;
    VertexId v = start;
    EdgeId e = es[0];
    while (!used.contains(e)) {
      used.insert(e);
      c.vertices.push_back(v);
      c.edges.push_back(e);
      const Edge& edge = g.edge(e);
      v = edge.u == v ? edge.v : edge.u;
      const auto& next = at[v];
      e = next[0] == e ? next[1] : next[0];
    }
    p.cycles.push_back(std::move(c));
  }
  return p;
}

bool is_valid_packing(const Multigraph& g, const CyclePacking& p) {
  VertexSet seen_v;
  EdgeSet seen_e;
  for (const auto& c : p.cycles) {
    if (c.vertices.empty() || c.vertices.size() != c.edges.size()) return false;
    const std::size_t k = c.edges.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (!g.has_edge(c.edges[i]) || !g.has_vertex(c.vertices[i])) return false;
      if (!seen_v.insert(c.vertices[i]).second || !seen_e.insert(c.edges[i]).second) return false;
      const Edge& e = g.edge(c.edges[i]);
      VertexId a = c.vertices[i], b = c.vertices[(i + 1) % k];
      if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
    }
  }
  return true;
}

EdgeSet special_set(const Multigraph& g, const CyclePacking& p) {
  require(g.num_vertices() >= 2 && is_k_edge_connected(g, 3), Errc::precondition,
          "special sets are defined for 3-edge-connected graphs");
  require(is_valid_packing(g, p), Errc::invalid_argument, "not a cycle packing of the graph");
  const EdgeSet in_p = p.edge_set();
  ContractionResult c = contract(g, in_p);
  const Multigraph& q = c.quotient;
  std::map<std::pair<int, int>, int> lambda;
  EdgeSet out;
  for (const auto& e : g.edges()) {
    if (in_p.contains(e.id)) continue;
    const Edge& qe = q.edge(e.id);
    if (qe.is_loop()) {
      out.insert(e.id);
      continue;
    }
    auto key = std::pair{q.vertex_index(qe.u), q.vertex_index(qe.v)};
    auto it = lambda.find(key);
    if (it == lambda.end()) it = lambda.emplace(key, local_edge_connectivity(q, qe.u, qe.v)).first;
    if (it->second >= 4) out.insert(e.id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orientation helpers.

std::vector<DirectionTie> circuit_ties(const CyclePacking& p) {
  std::vector<DirectionTie> out;
  for (const auto& c : p.cycles) {
    DirectionTie tie;
    for (std::size_t i = 0; i < c.edges.size(); ++i) tie[c.edges[i]] = c.vertices[i];
    out.push_back(std::move(tie));
  }
  return out;
}

Orientation orient_cycles_as_circuits(const Orientation& d, const CyclePacking& p) {
  Orientation out = d;
  for (const auto& c : p.cycles) {
    for (std::size_t i = 0; i < c.edges.size(); ++i) out = out.with_tail(c.edges[i], c.vertices[i]);
  }
  return out;
}

bool is_circuit(const Orientation& d, const Cycle& c) {
  const std::size_t k = c.edges.size();
  if (k == 0 || c.vertices.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const Edge& e = d.graph().edge(c.edges[i]);
    if (e.is_loop()) return k == 1;
    if (d.tail(c.edges[i]) != c.vertices[i] || d.head(c.edges[i]) != c.vertices[(i + 1) % k]) {
      // Accept the reverse direction as well.
      bool reversed = true;
      for (std::size_t j = 0; j < k; ++j) {
        if (d.head(c.edges[j]) != c.vertices[j] || d.tail(c.edges[j]) != c.vertices[(j + 1) % k]) reversed = false;
      }
      return reversed;
    }
  }
  return true;
}

EdgeId find_deletable_arc_on_circuit(const Orientation& d, const Cycle& c) {
  require(is_strongly_connected(d), Errc::precondition, "orientation is not strongly connected");
  require(is_valid_packing(d.graph(), CyclePacking{{c}}) && is_circuit(d, c), Errc::precondition,
          "cycle is not a circuit of the orientation");
  const EdgeSet on_c(c.edges.begin(), c.edges.end());
  for (EdgeId e : c.edges) {
    if (d.graph().edge(e).is_loop()) return e;
  }
  Orientation cur = d;
  while (true) {
    const Multigraph& g = cur.graph();
    for (EdgeId e : c.edges) {
      if (g.has_edge(e) && g.edge(e).is_loop()) {
        require(is_strongly_connected_without(d, e), Errc::internal, "circuit arc search returned a bridge arc");
        return e;
      }
    }
    // Vertices still on the circuit, and its arcs as successor links.
    const int n = static_cast<int>(g.num_vertices());
    std::vector<char> on(n, 0);
    std::vector<int> succ_edge(n, -1);
    for (EdgeId e : c.edges) {
      if (!g.has_edge(e)) continue;
      int ei = g.edge_index(e);
      on[cur.tail_index(ei)] = on[cur.head_index(ei)] = 1;
      succ_edge[cur.tail_index(ei)] = ei;
    }
    // An edge leaving the circuit at one end.
    int ear = -1;
    for (int ei = 0; ei < static_cast<int>(g.num_edges()) && ear < 0; ++ei) {
      const Edge& e = g.edge_at(ei);
      if (e.is_loop() || on_c.contains(e.id)) continue;
      if (on[g.tail_index(ei)] || on[g.head_index(ei)]) ear = ei;
    }
    require(ear >= 0, Errc::precondition, "no edge leaves the circuit; graph is not 3-edge-connected");
    // Directed path through the ear with ends on the circuit and inner vertices off it.
    std::vector<int> path{ear};
    auto walk = [&](int from, bool forward) {
      std::vector<int> via(n, -2);
      std::deque<int> queue{from};
      via[from] = -1;
      int hit = -1;
      while (!queue.empty() && hit < 0) {
        int v = queue.front();
        queue.pop_front();
        if (on[v]) {
          hit = v;
          break;
        }
        for (const auto& inc : g.incident(v)) {
          if (inc.other == v || via[inc.other] != -2) continue;
          bool out_arc = cur.tail_index(inc.edge) == v;
          if (out_arc != forward) continue;
          via[inc.other] = inc.edge;
          queue.push_back(inc.other);
        }
      }
      require(hit >= 0, Errc::precondition, "orientation is not strongly connected");
      std::vector<int> edges;
      for (int v = hit; via[v] >= 0;) {
        int ei = via[v];
        edges.push_back(ei);
        v = forward ? cur.tail_index(ei) : cur.head_index(ei);
      }
      return std::pair{hit, edges};
    };
    int start, end;
    if (on[cur.tail_index(ear)]) {
      start = cur.tail_index(ear);
      auto [hit, edges] = walk(cur.head_index(ear), true);
      end = hit;
      path.insert(path.end(), edges.begin(), edges.end());
    } else {
      end = cur.head_index(ear);
      auto [hit, edges] = walk(cur.tail_index(ear), false);
      start = hit;
      path.insert(path.end(), edges.begin(), edges.end());
    }
    // Close the ear along the circuit from end back to start.
    EdgeSet closed;
    for (int ei : path) closed.insert(g.edge_at(ei).id);
    for (int v = end; v != start;) {
      int ei = succ_edge[v];
      closed.insert(g.edge_at(ei).id);
      v = cur.head_index(ei);
    }
    cur = contract_orientation(cur, closed);
  }
}

std::pair<EdgeSet, EdgeSet> paths_to_two_matchings(const Multigraph& g, const EdgeSet& paths) {
  std::map<VertexId, std::vector<EdgeId>> at;
  for (EdgeId e : paths) {
    const Edge& edge = g.edge(e);
    require(!edge.is_loop(), Errc::invalid_argument, "paths contain a loop");
    at[edge.u].push_back(e);
    at[edge.v].push_back(e);
  }
  for (const auto& [v, es] : at) {
    require(es.size() <= 2, Errc::invalid_argument, "vertex " + std::to_string(v.value) + " has degree above 2");
  }
  std::pair<EdgeSet, EdgeSet> out;
  EdgeSet used;
  for (const auto& [v, es] : at) {
    if (es.size() != 1 || used.contains(es[0])) continue;
    VertexId x = v;
    EdgeId e = es[0];
    bool first = true;
    while (true) {
      used.insert(e);
      (first ? out.first : out.second).insert(e);
      first = !first;
      const Edge& edge = g.edge(e);
      x = edge.u == x ? edge.v : edge.u;
      const auto& next = at[x];
      if (next.size() == 1) break;
      e = next[0] == e ? next[1] : next[0];
    }
  }
  require(used.size() == paths.size(), Errc::invalid_argument, "edge set contains a cycle");
  return out;
}

}  // namespace frank
