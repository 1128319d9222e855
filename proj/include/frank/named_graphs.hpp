// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frank/multigraph.hpp"

namespace frank {

/// Canonical labeled instance of a corpus graph. Throws invalid_argument for unknown names.
Multigraph named_graph(std::string_view name);

/// All corpus names, sorted.
std::vector<std::string> corpus_names();

/// Replaces a degree-3 vertex by a triangle (new vertices get fresh ids).
Multigraph truncate_vertex(const Multigraph& g, VertexId v);

}  // namespace frank
