// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "frank/multigraph.hpp"

namespace frank {

/// Unit-ish capacity max-flow by shortest augmenting paths. Nodes are dense
/// integers; arcs are added in residual pairs.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

  /// Adds u->v with capacity `cap` and v->u with capacity `rev_cap` as one residual pair.
  void add_pair(int u, int v, int cap, int rev_cap);

  /// Max flow value from s to t, stopping early once `limit` is reached.
  int max_flow(int s, int t, int limit = 1 << 30);

  /// After max_flow: nodes reachable from s in the residual network.
  std::vector<char> source_side(int s) const;

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

/// Maximum number of edge-disjoint u-v paths.
int local_edge_connectivity(const Multigraph& g, VertexId u, VertexId v);

/// Minimum edge cut size; 0 for disconnected graphs.
int edge_connectivity(const Multigraph& g);

bool is_k_edge_connected(const Multigraph& g, int k);

/// A vertex set X with |X| >= 2, |V - X| >= 2 and d(X) = 3, if one exists.
/// Found by merging the endpoints of two vertex-disjoint edges and testing
/// the local connectivity between the merged vertices.
std::optional<VertexSet> find_nontrivial_3_cut(const Multigraph& g);

bool is_essentially_4ec(const Multigraph& g);

/// Dense all-pairs local edge connectivity (n x n, diagonal 0).
std::vector<std::vector<int>> all_pairs_connectivity(const Multigraph& g);

}  // namespace frank
