// SPDX-License-Identifier: Apache-2.0
#include "frank/connectivity.hpp"

#include <algorithm>
#include <deque>

#include "frank/error.hpp"

namespace frank {

void FlowNetwork::add_pair(int u, int v, int cap, int rev_cap) {
  arcs_.push_back({v, cap, head_[u]});
  head_[u] = static_cast<int>(arcs_.size()) - 1;
  arcs_.push_back({u, rev_cap, head_[v]});
  head_[v] = static_cast<int>(arcs_.size()) - 1;
}

int FlowNetwork::max_flow(int s, int t, int limit) {
  if (s == t) return 0;
  const int n = static_cast<int>(head_.size());
  int flow = 0;
  std::vector<int> via(n);
  std::deque<int> queue;
  while (flow < limit) {
    std::fill(via.begin(), via.end(), -1);
    via[s] = -2;
    queue.assign(1, s);
    while (!queue.empty() && via[t] == -1) {
      int x = queue.front();
      queue.pop_front();
      for (int a = head_[x]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && via[arcs_[a].to] == -1) {
          via[arcs_[a].to] = a;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    if (via[t] == -1) break;
    int bottleneck = limit - flow;
    for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) bottleneck = std::min(bottleneck, arcs_[via[x]].cap);
    for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
      arcs_[via[x]].cap -= bottleneck;
      arcs_[via[x] ^ 1].cap += bottleneck;
    }
    flow += bottleneck;
  }
  return flow;
}

std::vector<char> FlowNetwork::source_side(int s) const {
  std::vector<char> seen(head_.size(), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int a = head_[x]; a >= 0; a = arcs_[a].next) {
      if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
        seen[arcs_[a].to] = 1;
        stack.push_back(arcs_[a].to);
      }
    }
  }
  return seen;
}

namespace {

// Undirected network over dense vertex indices, with an optional node relabeling.
FlowNetwork undirected_network(const Multigraph& g, const std::vector<int>& node_of, int nodes) {
  FlowNetwork net(nodes);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    int a = node_of[g.tail_index(static_cast<int>(i))];
    int b = node_of[g.head_index(static_cast<int>(i))];
    if (a != b) net.add_pair(a, b, 1, 1);
  }
  return net;
}

std::vector<int> identity_nodes(const Multigraph& g) {
  std::vector<int> ids(g.num_vertices());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return ids;
}

int local_connectivity_dense(const Multigraph& g, int s, int t, int limit = 1 << 30) {
  FlowNetwork net = undirected_network(g, identity_nodes(g), static_cast<int>(g.num_vertices()));
  return net.max_flow(s, t, limit);
}

}  // namespace

int local_edge_connectivity(const Multigraph& g, VertexId u, VertexId v) {
  int s = g.vertex_index(u);
  int t = g.vertex_index(v);
  require(s != t, Errc::invalid_argument, "local_edge_connectivity: u == v");
  return local_connectivity_dense(g, s, t);
}

int edge_connectivity(const Multigraph& g) {
  require(g.num_vertices() >= 2, Errc::invalid_argument, "edge_connectivity: fewer than 2 vertices");
  int best = 1 << 30;
  for (std::size_t v = 1; v < g.num_vertices(); ++v) {
    best = std::min(best, local_connectivity_dense(g, 0, static_cast<int>(v), best));
    if (best == 0) break;
  }
  return best;
}

bool is_k_edge_connected(const Multigraph& g, int k) {
  if (g.num_vertices() < 2) return true;
  for (std::size_t v = 1; v < g.num_vertices(); ++v) {
    if (local_connectivity_dense(g, 0, static_cast<int>(v), k) < k) return false;
  }
  return true;
}

std::optional<VertexSet> find_nontrivial_3_cut(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  const int m = static_cast<int>(g.num_edges());
  if (n < 4) return std::nullopt;
  for (int i = 0; i < m; ++i) {
    int a = g.tail_index(i), b = g.head_index(i);
    if (a == b) continue;
    for (int j = i + 1; j < m; ++j) {
      int c = g.tail_index(j), d = g.head_index(j);
      if (c == d || c == a || c == b || d == a || d == b) continue;
      // Merge {a,b} into node a and {c,d} into node c.
      std::vector<int> node_of = identity_nodes(g);
      node_of[b] = a;
      node_of[d] = c;
      FlowNetwork net = undirected_network(g, node_of, n);
      if (net.max_flow(a, c, 4) == 3) {
        std::vector<char> side = net.source_side(a);
        side[b] = side[a];
        side[d] = side[c];
        VertexSet x;
        for (int v = 0; v < n; ++v) {
          if (side[v]) x.insert(g.vertex_at(v));
        }
        return x;
      }
    }
  }
  return std::nullopt;
}

bool is_essentially_4ec(const Multigraph& g) {
  if (!is_k_edge_connected(g, 3)) return false;
  return !find_nontrivial_3_cut(g).has_value();
}

std::vector<std::vector<int>> all_pairs_connectivity(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<std::vector<int>> lam(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      lam[u][v] = lam[v][u] = local_connectivity_dense(g, u, v);
    }
  }
  return lam;
}

}  // namespace frank
