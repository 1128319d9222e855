// SPDX-License-Identifier: Apache-2.0
#include "frank/set_cover.hpp"

#include <algorithm>
#include <bit>

namespace frank {

std::optional<std::vector<int>> greedy_set_cover(const std::vector<std::uint64_t>& sets, std::uint64_t universe) {
  std::vector<int> chosen;
  std::uint64_t left = universe;
  while (left) {
    int best = -1, gain = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      int g = std::popcount(sets[i] & left);
      if (g > gain) {
        gain = g;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) return std::nullopt;
    chosen.push_back(best);
    left &= ~sets[best];
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

struct Search {
  const std::vector<std::uint64_t>& sets;
  int max_size = 0;
  std::vector<int> current, best;

  void run(std::uint64_t left) {
    if (!left) {
      if (current.size() < best.size()) best = current;
      return;
    }
    const int lower = static_cast<int>(current.size()) + (std::popcount(left) + max_size - 1) / max_size;
    if (lower >= static_cast<int>(best.size())) return;
    int pivot = -1, fewest = 1 << 30;
    for (std::uint64_t rest = left; rest; rest &= rest - 1) {
      const std::uint64_t bit = rest & -rest;
      int count = 0;
      for (auto s : sets) count += (s & bit) != 0;
      if (count < fewest) {
        fewest = count;
        pivot = std::countr_zero(bit);
      }
    }
    if (fewest == 0) return;
    std::vector<int> options;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if ((sets[i] >> pivot) & 1) options.push_back(static_cast<int>(i));
    }
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return std::popcount(sets[a] & left) > std::popcount(sets[b] & left);
    });
    for (int i : options) {
      current.push_back(i);
      run(left & ~sets[i]);
      current.pop_back();
    }
  }
};

}  // namespace

std::optional<std::vector<int>> min_set_cover(const std::vector<std::uint64_t>& sets, std::uint64_t universe) {
  auto greedy = greedy_set_cover(sets, universe);
  if (!greedy) return std::nullopt;
  Search s{sets, 0, {}, {}};
  for (auto x : sets) s.max_size = std::max(s.max_size, std::popcount(x & universe));
  if (s.max_size == 0) return std::vector<int>{};
  s.best = *greedy;
  s.run(universe);
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

std::vector<int> maximal_sets(const std::vector<std::uint64_t>& sets) {
  std::vector<int> order(sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::popcount(sets[a]) > std::popcount(sets[b]); });
  std::vector<int> out;
  for (int i : order) {
    const bool dominated =
        std::any_of(out.begin(), out.end(), [&](int j) { return (sets[i] & ~sets[j]) == 0; });
    if (!dominated) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace frank
