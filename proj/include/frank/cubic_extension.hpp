// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "frank/orientation.hpp"

namespace frank {

/// A cubic host graph in which every vertex of degree at least 4 is expanded
/// into a cycle. Original edges keep their ids in the host; expansion
/// vertices and cycle edges get fresh ids above the originals.
struct CubicExtension {
  Multigraph host;
  std::map<VertexId, std::vector<VertexId>> classes;   // original vertex -> its class, in cycle order
  std::map<VertexId, std::vector<EdgeId>> cycles;      // original vertex -> cycle edges (empty for degree 3)
  std::map<VertexId, VertexId> original_of;            // host vertex -> original vertex
  EdgeSet cycle_edges() const;
};

/// Endpoints at each vertex are attached to its class in increasing edge-id
/// order (both ends of a loop in turn). Requires minimum degree 3.
CubicExtension cubic_extension(const Multigraph& g);

/// Orientation of the original graph read off a host orientation (the
/// contraction of all expansion cycles).
Orientation project_orientation(const CubicExtension& ext, GraphPtr original, const Orientation& host_d);

}  // namespace frank
