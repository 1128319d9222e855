// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "frank/eulerian.hpp"
#include "frank/exact.hpp"
#include "frank/structures.hpp"

namespace frank {

struct PipelineReport {
  std::string pipeline;
  std::vector<std::string> preconditions;  // conditions checked before building
  FrankCertificate certificate;
  std::vector<std::string> provenance;     // how each orientation was produced
};

struct PipelineLimits {
  WellBalancedLimits well_balanced;
  long pairing_budget = 2000;       // pairings tried per matching orientation
  long double_cover_budget = 5'000'000;
  SolveLimits fallback;             // deletability search when the pairing search gives up
};

/// Orientation with every cycle of p a circuit and the special set of p
/// deletable: a well-balanced orientation of g/p lifted through the cycles.
Orientation orient_special_set_deletable(const Multigraph& g, const CyclePacking& p,
                                         const PipelineLimits& limits = {});

/// Orientation with every edge of the matching m deletable and every cycle of
/// p (a packing of g - m) a circuit. Contracts the maximal 2-edge-connected
/// pieces of g - m, orients the quotient by a constrained Eulerian orientation
/// of it plus an odd-vertex pairing, and orients each piece strongly with its
/// cycles as circuits. Requires g essentially 4-edge-connected.
Orientation orient_matching_deletable(const Multigraph& g, const EdgeSet& m, const CyclePacking& p,
                                      const PipelineLimits& limits = {});

/// At most 7 orientations for a 3-edge-connected graph.
PipelineReport certify_upper7(const Multigraph& g, const PipelineLimits& limits = {});

/// 3 orientations for a cubic 3-edge-connected 3-edge-colorable graph; throws
/// Errc::not_colorable otherwise.
PipelineReport certify_color3(const Multigraph& g, const PipelineLimits& limits = {});

/// 5 orientations from a six-matching double cover of a cubic 3-edge-connected
/// graph; throws Errc::indeterminate when no cover is found within budget.
PipelineReport certify_bf5(const Multigraph& g, const PipelineLimits& limits = {});

/// At most 3 orientations for an essentially 4-edge-connected graph.
PipelineReport certify_esse4(const Multigraph& g, const PipelineLimits& limits = {});

}  // namespace frank
