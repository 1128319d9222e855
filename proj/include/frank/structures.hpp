// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "frank/exact.hpp"
#include "frank/orientation.hpp"

namespace frank {

// ---------------------------------------------------------------------------
// Matchings and colorings.

/// A perfect matching by backtracking (lowest unmatched vertex first), if any.
std::optional<EdgeSet> perfect_matching(const Multigraph& g);

/// All perfect matchings in search order, stopping after `limit`.
std::vector<EdgeSet> enumerate_perfect_matchings(const Multigraph& g,
                                                 std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Three disjoint perfect matchings covering E. Throws precondition for non-cubic input.
std::optional<std::array<EdgeSet, 3>> proper_3_edge_coloring(const Multigraph& g);

struct DoubleCover {
  Outcome outcome = Outcome::indeterminate;
  std::vector<EdgeSet> matchings;  // six perfect matchings, sorted, when outcome is yes
};

/// Six perfect matchings (repetition allowed) covering every edge exactly
/// twice, by exact multi-cover search over the enumerated matchings.
DoubleCover berge_fulkerson_cover(const Multigraph& g, long node_budget = 5'000'000);

// ---------------------------------------------------------------------------
// Joins and trees.

/// An edge set whose odd-degree vertices are exactly t, by parity propagation
/// from the leaves of a spanning forest. Nothing when some component holds an
/// odd number of t.
std::optional<EdgeSet> t_join(const Multigraph& g, const VertexSet& t);

/// Vertices of odd degree in the subgraph formed by f (loops add 2).
VertexSet odd_vertices(const Multigraph& g, const EdgeSet& f);

/// Two edge-disjoint spanning trees by matroid-union augmentation, if they exist.
std::optional<std::pair<EdgeSet, EdgeSet>> two_edge_disjoint_spanning_trees(const Multigraph& g);

/// Splits E into three T-joins (T = odd-degree vertices): one inside each of
/// two edge-disjoint spanning trees, the third the remainder (which takes
/// every loop). Requires a 4-edge-connected graph.
std::array<EdgeSet, 3> partition_into_three_tjoins(const Multigraph& g);

// ---------------------------------------------------------------------------
// Cycle packings.

/// A cycle listed as v0 e0 v1 e1 ... v(k-1) e(k-1) v0. A loop is a cycle of
/// length 1 and two parallel edges form a cycle of length 2.
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

struct CyclePacking {
  std::vector<Cycle> cycles;

  EdgeSet edge_set() const;
  VertexSet vertex_set() const;
  bool empty() const { return cycles.empty(); }
};

/// The packing formed by the components of f; every vertex touched by f must
/// have degree exactly 2 in f. Cycles are listed by smallest vertex.
CyclePacking packing_from_edges(const Multigraph& g, const EdgeSet& f);

/// Vertex-disjoint cycles made of existing edges, each a closed walk as listed.
bool is_valid_packing(const Multigraph& g, const CyclePacking& p);

/// Edges outside the packing that lie on no 3-edge-cut of g/p. Edges that
/// become loops in g/p lie on no cut and are included. Requires g 3-edge-connected.
EdgeSet special_set(const Multigraph& g, const CyclePacking& p);

// ---------------------------------------------------------------------------
// Orientation helpers.

/// The directions making every cycle of p a circuit, tied together per cycle
/// (each cycle may still be reversed as a whole).
std::vector<DirectionTie> circuit_ties(const CyclePacking& p);

/// Orients every cycle of p as a circuit in its listed direction, keeping other edges.
Orientation orient_cycles_as_circuits(const Orientation& d, const CyclePacking& p);

bool is_circuit(const Orientation& d, const Cycle& c);

/// An arc of the circuit c whose deletion keeps d strongly connected.
/// Repeatedly closes a directed ear through an edge leaving the circuit,
/// contracts it, and stops once an arc of c turns into a loop. Requires d
/// strongly connected on a 3-edge-connected graph.
EdgeId find_deletable_arc_on_circuit(const Orientation& d, const Cycle& c);

/// Splits a union of vertex-disjoint paths into two matchings by alternating
/// along each path from its end with the smaller vertex id.
std::pair<EdgeSet, EdgeSet> paths_to_two_matchings(const Multigraph& g, const EdgeSet& paths);

}  // namespace frank
