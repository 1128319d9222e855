// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <utility>

#include "frank/orientation.hpp"

namespace frank {

/// Per vertex v, two distinct non-loop edges at v of which exactly one must enter v.
using EulerConstraints = std::map<VertexId, std::pair<EdgeId, EdgeId>>;

/// In-degree equals out-degree at every vertex. Requires all degrees even.
Orientation eulerian_orientation(const Multigraph& g);

/// Eulerian orientation honoring the constraints. Each constrained vertex is
/// split into a degree-2 copy carrying its two edges and a copy carrying the
/// rest; closed trails of the split graph then give the directions.
Orientation eulerian_orientation_constrained(const Multigraph& g, const EulerConstraints& constraints);

bool is_eulerian_orientation(const Orientation& d);
bool satisfies_constraints(const Orientation& d, const EulerConstraints& constraints);

struct WellBalancedLimits {
  long max_pairings = 20000;      // odd-vertex pairings tried before the fallback
  int max_exhaustive_edges = 20;  // fallback enumerates 2^(m-1) orientations up to this size
};

/// Directed u->v connectivity at least floor(lambda(u,v)/2) for every ordered pair.
bool is_well_balanced(const Orientation& d);

/// Searches for a well-balanced orientation: an Eulerian orientation when g
/// is Eulerian, otherwise Eulerian orientations of g plus an odd-vertex
/// pairing, and finally exhaustive search on small graphs. The result is
/// always checked. Throws Errc::indeterminate when the search gives up.
Orientation well_balanced_orientation(const Multigraph& g, const WellBalancedLimits& limits = {});

/// Adds one edge per pair (fresh edge ids above the current maximum, in pair order).
Multigraph add_pairing(const Multigraph& g, const std::vector<std::pair<VertexId, VertexId>>& pairs);

}  // namespace frank
