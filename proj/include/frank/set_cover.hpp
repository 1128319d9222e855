// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace frank {

/// Greedy cover: repeatedly the set covering most uncovered elements (lowest index on ties).
std::optional<std::vector<int>> greedy_set_cover(const std::vector<std::uint64_t>& sets, std::uint64_t universe);

/// Minimum cover by branch and bound: branch on the uncovered element with the
/// fewest candidate sets, bound by the greedy cover and a size argument.
/// Returns sorted set indices, or nothing when the sets do not cover the universe.
std::optional<std::vector<int>> min_set_cover(const std::vector<std::uint64_t>& sets, std::uint64_t universe);

/// Sets not strictly contained in another, first occurrence kept among equals.
std::vector<int> maximal_sets(const std::vector<std::uint64_t>& sets);

}  // namespace frank
