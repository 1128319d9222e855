// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "frank/multigraph.hpp"

namespace frank::kernels {

/// Compressed adjacency of a digraph on dense vertices. Arc ids are the
/// caller's (usually dense edge indices); loops should be left out.
class Csr {
 public:
  Csr(int n, const std::vector<int>& tail, const std::vector<int>& head, const std::vector<int>& arc_ids);

  int size() const { return n_; }
  /// Vertices reachable from `from` (forward) or reaching it (backward), ignoring arc `skip`.
  std::vector<char> reach(int from, bool forward, int skip = -1) const;
  bool strongly_connected(int skip = -1) const;
  bool reaches(int from, int to, int skip = -1) const;

 private:
  int n_;
  std::vector<int> out_start_, out_to_, out_id_;
  std::vector<int> in_start_, in_from_, in_id_;
};

/// Bit-parallel strong connectivity and deletable-arc kernel for graphs with
/// at most 64 vertices and 64 edges. Orientations are masks over dense edge
/// indices; bit i set means edge i runs v -> u.
class MaskKernel {
 public:
  explicit MaskKernel(const Multigraph& g);

  int num_edges() const { return m_; }
  std::uint64_t all_edges() const { return all_; }

  bool strongly_connected(std::uint64_t reversed) const;

  /// Deletable arcs of a strongly connected orientation, as an edge mask.
  /// Loops are always reported deletable. Returns false (and leaves
  /// `deletable` untouched) when the orientation is not strongly connected.
  bool evaluate(std::uint64_t reversed, std::uint64_t& deletable) const;

  /// True iff the orientation is strongly connected and every edge in
  /// `required` is deletable. Stops at the first failing edge.
  bool makes_deletable(std::uint64_t reversed, std::uint64_t required) const;

 private:
  struct Adjacency {
    std::uint64_t out[64];
    std::uint64_t in[64];
  };
  void build(std::uint64_t reversed, Adjacency& adj) const;
  bool strong(const Adjacency& adj) const;
  std::uint64_t forward_reach(const Adjacency& adj, int from, int skip_tail, std::uint64_t skip_head_bit) const;
  bool arc_deletable(const Adjacency& adj, std::uint64_t reversed, int ei) const;

  int n_ = 0;
  int m_ = 0;
  std::uint64_t all_ = 0;
  std::uint64_t loops_ = 0;
  std::uint64_t vertices_ = 0;
  std::vector<int> eu_, ev_;
  std::vector<std::vector<int>> parallel_;  // other non-loop edges with the same endpoints
};

}  // namespace frank::kernels
