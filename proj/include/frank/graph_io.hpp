// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "frank/multigraph.hpp"

namespace frank {

struct GraphLimits {
  std::size_t max_vertices = 64;
  std::size_t max_edges = 256;
};

void check_limits(const Multigraph& g, const GraphLimits& limits);

/// One edge "u v" per line; a line with a single integer declares an isolated
/// vertex; '#' starts a comment. Edge ids follow line order from 0.
Multigraph parse_edge_list(std::string_view text, const GraphLimits& limits = {});
std::string format_edge_list(const Multigraph& g);

/// graph6 for simple graphs. Loops or parallel edges raise Errc::graph6_multigraph.
Multigraph parse_graph6(std::string_view text, const GraphLimits& limits = {});
std::string format_graph6(const Multigraph& g);

}  // namespace frank
