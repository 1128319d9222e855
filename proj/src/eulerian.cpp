// SPDX-License-Identifier: Apache-2.0
#include "frank/eulerian.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>

#include "frank/connectivity.hpp"
#include "frank/error.hpp"

namespace frank {

namespace {

// Orients g along closed trails of the graph whose nodes are given per edge
// end. Every node must have even degree.
std::vector<std::uint8_t> orient_by_trails(const Multigraph& g, int nodes,
                                           const std::vector<std::array<int, 2>>& end_node) {
  const int m = static_cast<int>(g.num_edges());
  std::vector<std::vector<std::pair<int, int>>> ends(nodes);  // (edge, side)
  for (int ei = 0; ei < m; ++ei) {
    ends[end_node[ei][0]].push_back({ei, 0});
    ends[end_node[ei][1]].push_back({ei, 1});
  }
  std::vector<std::uint8_t> fwd(m, 1);
  std::vector<char> used(m, 0);
  std::vector<std::size_t> ptr(nodes, 0);
  for (int s = 0; s < nodes; ++s) {
    while (true) {
      int cur = s;
      bool moved = false;
      while (true) {
        auto& p = ptr[cur];
        while (p < ends[cur].size() && used[ends[cur][p].first]) ++p;
        if (p == ends[cur].size()) break;
        auto [ei, side] = ends[cur][p];
        used[ei] = 1;
        fwd[ei] = side == 0 ? 1 : 0;
        cur = end_node[ei][1 - side];
        moved = true;
      }
      require(cur == s, Errc::internal, "closed trail ended away from its start");
      if (!moved) break;
    }
  }
  return fwd;
}

}  // namespace

Orientation eulerian_orientation(const Multigraph& g) { return eulerian_orientation_constrained(g, {}); }

Orientation eulerian_orientation_constrained(const Multigraph& g, const EulerConstraints& constraints) {
  require(is_eulerian(g), Errc::precondition, "graph is not Eulerian (some degree is odd)");
  const int n = static_cast<int>(g.num_vertices());
  const int m = static_cast<int>(g.num_edges());
  std::vector<std::array<int, 2>> end_node(m);
  for (int ei = 0; ei < m; ++ei) end_node[ei] = {g.tail_index(ei), g.head_index(ei)};
  int nodes = n;
  for (const auto& [v, pair] : constraints) {
    const int vi = g.vertex_index(v);
    const auto [e, f] = pair;
    require(e != f, Errc::invalid_argument, "constraint at vertex " + std::to_string(v.value) + " repeats an edge");
    const int split = nodes++;
    for (EdgeId x : {e, f}) {
      const int ei = g.edge_index(x);
      const Edge& edge = g.edge_at(ei);
      require(!edge.is_loop(), Errc::invalid_argument, "constraint edge " + std::to_string(x.value) + " is a loop");
      require(edge.u == v || edge.v == v, Errc::invalid_argument,
              "constraint edge " + std::to_string(x.value) + " is not incident to vertex " + std::to_string(v.value));
      const int side = g.tail_index(ei) == vi ? 0 : 1;
      end_node[ei][side] = split;
    }
  }
  Orientation d(std::make_shared<const Multigraph>(g), orient_by_trails(g, nodes, end_node));
  require(is_eulerian_orientation(d) && satisfies_constraints(d, constraints), Errc::internal,
          "constrained Eulerian orientation failed its own check");
  return d;
}

bool is_eulerian_orientation(const Orientation& d) {
  const Multigraph& g = d.graph();
  std::vector<int> balance(g.num_vertices(), 0);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const int ei = static_cast<int>(i);
    ++balance[d.tail_index(ei)];
    --balance[d.head_index(ei)];
  }
  return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
}

bool satisfies_constraints(const Orientation& d, const EulerConstraints& constraints) {
  for (const auto& [v, pair] : constraints) {
    const int entering = (d.head(pair.first) == v) + (d.head(pair.second) == v);
    if (entering != 1) return false;
  }
  return true;
}

namespace {

bool well_balanced_given(const Orientation& d, const std::vector<std::vector<int>>& lambda) {
  const Multigraph& g = d.graph();
  const int n = static_cast<int>(g.num_vertices());
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      const int need = s == t ? 0 : lambda[s][t] / 2;
      if (need == 0) continue;
      FlowNetwork net(n);
      for (int ei = 0; ei < static_cast<int>(g.num_edges()); ++ei) {
        if (g.edge_at(ei).is_loop()) continue;
        net.add_pair(d.tail_index(ei), d.head_index(ei), 1, 0);
      }
      if (net.max_flow(s, t, need) < need) return false;
    }
  }
  return true;
}

}  // namespace

bool is_well_balanced(const Orientation& d) { return well_balanced_given(d, all_pairs_connectivity(d.graph())); }

Multigraph add_pairing(const Multigraph& g, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  int next = g.max_edge_id().value + 1;
  for (const auto& [a, b] : pairs) {
    require(g.has_vertex(a) && g.has_vertex(b), Errc::unknown_vertex, "pairing names an unknown vertex");
    edges.push_back({EdgeId{next++}, std::min(a, b), std::max(a, b)});
  }
  return Multigraph({g.vertices().begin(), g.vertices().end()}, std::move(edges));
}

Orientation well_balanced_orientation(const Multigraph& g, const WellBalancedLimits& limits) {
  require(is_connected(g), Errc::precondition, "well_balanced_orientation: graph is not connected");
  if (is_eulerian(g)) return eulerian_orientation(g);
  auto gp = std::make_shared<const Multigraph>(g);

  const int n = static_cast<int>(g.num_vertices());
  std::vector<int> odd;
  for (int v = 0; v < n; ++v) {
    if (degree(g, g.vertex_at(v)) % 2) odd.push_back(v);
  }
  const auto lambda = all_pairs_connectivity(g);

  long tried = 0;
  std::vector<char> paired(n, 0);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::optional<Orientation> found;
  std::function<void()> search = [&]() {
    if (found || tried >= limits.max_pairings) return;
    auto first = std::find_if(odd.begin(), odd.end(), [&](int v) { return !paired[v]; });
    if (first == odd.end()) {
      ++tried;
      Multigraph h = add_pairing(g, pairs);
      Orientation dh = eulerian_orientation(h);
      std::vector<std::uint8_t> fwd(g.num_edges());
      for (std::size_t i = 0; i < fwd.size(); ++i) fwd[i] = dh.forward(static_cast<int>(i));
      Orientation d(gp, std::move(fwd));
      if (well_balanced_given(d, lambda)) found = d;
      return;
    }
    const int a = *first;
    std::vector<int> partners;
    for (int b : odd) {
      if (b != a && !paired[b]) partners.push_back(b);
    }
    std::stable_sort(partners.begin(), partners.end(), [&](int x, int y) { return lambda[a][x] > lambda[a][y]; });
    paired[a] = 1;
    for (int b : partners) {
      paired[b] = 1;
      pairs.push_back({g.vertex_at(a), g.vertex_at(b)});
      search();
      pairs.pop_back();
      paired[b] = 0;
      if (found) break;
    }
    paired[a] = 0;
  };
  search();
  if (found) return *found;

  const int m = static_cast<int>(g.num_edges());
  if (m <= limits.max_exhaustive_edges) {
    for (std::uint64_t mask = 0; mask < (1ULL << std::max(0, m - 1)); ++mask) {
      Orientation d = Orientation::from_mask(gp, mask << 1);
      if (well_balanced_given(d, lambda)) return d;
    }
  }
  fail(Errc::indeterminate, "well_balanced_orientation: search budget exhausted");
}

}  // namespace frank
