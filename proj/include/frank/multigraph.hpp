// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace frank {

struct VertexId {
  int value = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct EdgeId {
  int value = 0;
  auto operator<=>(const EdgeId&) const = default;
};

using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
  bool is_loop() const { return u == v; }
  auto operator<=>(const Edge&) const = default;
};

/// Position of an edge endpoint in the dense adjacency of a Multigraph.
struct Incidence {
  int edge;   // dense edge index
  int other;  // dense index of the opposite endpoint (itself for a loop)
};

/// Undirected multigraph with stable vertex and edge identifiers.
///
/// Loops and parallel edges are permitted. Vertices and edges are kept
/// sorted by identifier, so dense indices (0..n-1, 0..m-1) follow the
/// identifier order and every iteration is deterministic. The object is
/// immutable after construction.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  /// Vertices 0..n-1 and edges numbered 0.. in the given order.
  static Multigraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;
  int vertex_index(VertexId v) const;  // throws unknown_vertex
  int edge_index(EdgeId e) const;      // throws unknown_edge
  const Edge& edge(EdgeId e) const { return edges_[edge_index(e)]; }

  // Dense views.
  VertexId vertex_at(int i) const { return vertices_[i]; }
  const Edge& edge_at(int i) const { return edges_[i]; }
  int tail_index(int ei) const { return eu_[ei]; }
  int head_index(int ei) const { return ev_[ei]; }
  std::span<const Incidence> incident(int vi) const { return adjacency_[vi]; }

  VertexId max_vertex_id() const;  // -1 when empty
  EdgeId max_edge_id() const;

  VertexSet vertex_set() const;
  EdgeSet edge_set() const;

  bool operator==(const Multigraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> eu_, ev_;
  std::vector<std::vector<Incidence>> adjacency_;
};

int degree(const Multigraph& g, VertexId v);
bool is_cubic(const Multigraph& g);
bool is_eulerian(const Multigraph& g);
int min_degree(const Multigraph& g);

/// Non-loop edges with exactly one endpoint in x.
EdgeSet edge_cut(const Multigraph& g, const VertexSet& x);

// Subgraph and quotient constructions. All keep the identifiers of what survives.
Multigraph remove_edges(const Multigraph& g, const EdgeSet& f);
Multigraph keep_edges(const Multigraph& g, const EdgeSet& f);
Multigraph remove_vertex(const Multigraph& g, VertexId v);
Multigraph without_loops(const Multigraph& g);
Multigraph induced_subgraph(const Multigraph& g, const VertexSet& x);

/// Identifies all of x into the single vertex `label` and deletes edges inside x.
Multigraph shrink(const Multigraph& g, const VertexSet& x, VertexId label);

enum class EdgeFate { kept, became_loop, contracted };

struct ContractionResult {
  Multigraph quotient;
  std::map<VertexId, VertexId> vertex_map;  // original -> quotient (smallest id of its class)
  std::map<EdgeId, EdgeFate> edge_status;
};

ContractionResult contract(const Multigraph& g, const EdgeSet& f);

/// Vertex classes of the connected components (loops ignored), each sorted,
/// listed by smallest member.
std::vector<VertexSet> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Edges whose removal disconnects their component.
EdgeSet bridges(const Multigraph& g);

/// Components of g after deleting all bridges.
std::vector<VertexSet> maximal_2ec_subgraphs(const Multigraph& g);

/// Vertices whose removal increases the number of components.
VertexSet cut_vertices(const Multigraph& g);

std::string to_string(const Multigraph& g);

}  // namespace frank

template <>
struct std::hash<frank::VertexId> {
  std::size_t operator()(frank::VertexId v) const noexcept { return std::hash<int>()(v.value); }
};
template <>
struct std::hash<frank::EdgeId> {
  std::size_t operator()(frank::EdgeId e) const noexcept { return std::hash<int>()(e.value); }
};
