// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "frank/orientation.hpp"

namespace frank {

struct SolveLimits {
  int max_enum_edges = 22;         // exhaustive enumeration up to this many edges
  long node_budget = 20'000'000;   // backtracking nodes before giving up
  double time_budget_s = 60.0;     // wall clock before giving up
};

enum class Outcome { yes, no, indeterminate };

const char* to_string(Outcome o);

/// Every edge of the graph mapped to an orientation in which it is deletable.
struct FrankCertificate {
  std::vector<Orientation> orientations;
  std::map<EdgeId, int> cover;
};

struct CertificateCheck {
  bool ok = false;
  EdgeSet uncovered;  // edges missing from the cover or failing their check
};

/// Re-checks every cover entry by direct deletion. Throws invalid_argument
/// when an orientation refers to a different graph.
CertificateCheck verify_certificate(const Multigraph& g, const FrankCertificate& cert);

/// Distinct deletable sets over all strongly connected orientations, as edge
/// masks, each with the smallest orientation mask producing it. One edge is
/// kept at its stored direction since reversal preserves deletable sets.
struct DeletableSets {
  std::map<std::uint64_t, std::uint64_t> min_mask;  // deletable set -> smallest orientation mask
  std::uint64_t strong_orientations = 0;
};

/// Plain loop over all 2^(m-1) masks.
DeletableSets enumerate_deletable_sets_reference(const Multigraph& g);
/// Backtracking over edge directions that drops any prefix creating a source
/// or sink; runs single threaded.
DeletableSets enumerate_deletable_sets_serial(const Multigraph& g);
/// Same search with the first decisions split across OpenMP threads.
DeletableSets enumerate_deletable_sets_parallel(const Multigraph& g);

struct FrankResult {
  int value = 0;
  FrankCertificate certificate;
  std::uint64_t strong_orientations = 0;
  std::size_t distinct_sets = 0;
  std::size_t maximal_sets = 0;
};

/// Exact Frank number by enumeration and minimum set cover over maximal
/// deletable sets. Requires a 3-edge-connected graph with at most
/// limits.max_enum_edges edges (and at most 64 vertices).
FrankResult frank_number_exact(const Multigraph& g, const SolveLimits& limits = {}, bool parallel = true);

/// 2 when the graph has a 3-edge-cut, otherwise 1. Requires 3-edge-connectivity.
int frank_lower_bound(const Multigraph& g);

/// Groups of edges whose directions are tied: each group is oriented either
/// exactly as given or entirely reversed (a cycle kept as a circuit, say).
using DirectionTie = std::map<EdgeId, VertexId>;

struct DecideResult {
  Outcome outcome = Outcome::indeterminate;
  std::optional<Orientation> witness;  // present exactly when outcome is yes
  long nodes = 0;
};

/// Is there an orientation in which every edge of s is deletable? Enumerates
/// when the free choices fit limits.max_enum_edges, otherwise backtracks
/// with cut-based pruning. Witnesses are verified before they are returned.
DecideResult deletability_decide(const Multigraph& g, const EdgeSet& s, const SolveLimits& limits = {},
                                 const std::vector<DirectionTie>& ties = {});

}  // namespace frank
