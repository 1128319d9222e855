// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>

#include "frank/structures.hpp"

namespace frank {

/// Seven cycle packings of a cubic 3-edge-connected graph such that every
/// edge is special in some packing and lies in exactly four of them.
struct SevenPackings {
  Multigraph graph;
  std::array<CyclePacking, 7> packings;
  std::array<EdgeSet, 7> special;                  // special set of each packing
  std::map<EdgeId, std::array<bool, 7>> membership;  // edge -> in E(packing k)
  std::map<EdgeId, int> special_witness;            // edge -> smallest k with the edge special
  int splits = 0;                                   // 3-cut splits used on the way down
};

/// Builds the packings: split at a nontrivial 3-edge-cut and merge the two
/// halves, or (with no such cut) start from a perfect matching M, the cycles
/// of G - M, three T-joins of G/(G - M) and T_i-joins inside G - M. Both
/// properties are checked before returning.
SevenPackings seven_cycle_packings(const Multigraph& g);

/// Fills special, membership and special_witness from the packings and reports
/// whether both properties hold.
bool check_seven_packings(SevenPackings& sp);

}  // namespace frank
