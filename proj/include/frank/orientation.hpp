// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "frank/multigraph.hpp"

namespace frank {

using GraphPtr = std::shared_ptr<const Multigraph>;

/// A direction for every edge of a reference multigraph.
///
/// forward(i) means edge i (dense index) runs from its stored `u` endpoint to
/// its `v` endpoint. Loops carry no direction and never matter for
/// connectivity; their bit is kept at 1.
class Orientation {
 public:
  Orientation(GraphPtr graph, std::vector<std::uint8_t> forward);
  /// Every non-loop edge oriented u -> v.
  explicit Orientation(const Multigraph& g);
  explicit Orientation(GraphPtr graph);

  static Orientation from_tails(GraphPtr graph, const std::map<EdgeId, VertexId>& tails);
  /// Bit i set reverses edge i relative to u -> v (edge indices below 64).
  static Orientation from_mask(GraphPtr graph, std::uint64_t reversed);

  const Multigraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }

  bool forward(int ei) const { return forward_[ei] != 0; }
  int tail_index(int ei) const { return forward(ei) ? graph_->tail_index(ei) : graph_->head_index(ei); }
  int head_index(int ei) const { return forward(ei) ? graph_->head_index(ei) : graph_->tail_index(ei); }
  VertexId tail(EdgeId e) const { return graph_->vertex_at(tail_index(graph_->edge_index(e))); }
  VertexId head(EdgeId e) const { return graph_->vertex_at(head_index(graph_->edge_index(e))); }

  Orientation with_tail(EdgeId e, VertexId tail) const;
  /// Tail of every non-loop edge.
  std::map<EdgeId, VertexId> tails() const;
  std::uint64_t reversed_mask() const;

  bool operator==(const Orientation& other) const {
    return *graph_ == *other.graph_ && forward_ == other.forward_;
  }

 private:
  GraphPtr graph_;
  std::vector<std::uint8_t> forward_;
};

struct ArcCut {
  VertexSet side;
  EdgeSet in;   // arcs entering side
  EdgeSet out;  // arcs leaving side
};

ArcCut arc_cut(const Orientation& d, const VertexSet& x);

bool is_strongly_connected(const Orientation& d);
/// Strong connectivity of d with edge e removed.
bool is_strongly_connected_without(const Orientation& d, EdgeId e);

/// Maximum number of arc-disjoint directed u -> v paths.
int directed_local_connectivity(const Orientation& d, VertexId u, VertexId v);
bool is_k_arc_connected(const Orientation& d, int k);

/// Arcs whose deletion leaves d strongly connected. Requires d strongly connected.
EdgeSet deletable_arcs(const Orientation& d);
/// d strongly connected and d - f strongly connected for every f in the set.
bool is_deletable_set(const Orientation& d, const EdgeSet& f);

/// Subset-enumeration form of deletability: every nonempty proper X has an
/// entering arc outside f or at least two entering arcs.
bool cut_characterization_check(const Orientation& d, const EdgeSet& f, int max_vertices = 20);

Orientation reverse(const Orientation& d);

/// Orientation of g/f with surviving edges keeping their direction.
Orientation contract_orientation(const Orientation& d, const EdgeSet& f);

/// Restriction of d to a subgraph sharing its edge ids (e.g. produced by remove_edges).
Orientation restrict_orientation(const Orientation& d, GraphPtr sub);

/// Strongly connected orientation of a 2-edge-connected graph by a DFS
/// (tree edges downward, all others upward). Components are handled
/// independently.
Orientation dfs_strong_orientation(const Multigraph& g);

/// Vertex classes of the strongly connected components.
std::vector<VertexSet> strong_components(const Orientation& d);

}  // namespace frank
