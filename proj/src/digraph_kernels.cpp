// SPDX-License-Identifier: Apache-2.0
#include "frank/digraph_kernels.hpp"

#include <bit>

#include "frank/error.hpp"

namespace frank::kernels {

Csr::Csr(int n, const std::vector<int>& tail, const std::vector<int>& head, const std::vector<int>& arc_ids)
    : n_(n), out_start_(n + 1, 0), in_start_(n + 1, 0) {
  const std::size_t a = tail.size();
  for (std::size_t i = 0; i < a; ++i) {
    ++out_start_[tail[i] + 1];
    ++in_start_[head[i] + 1];
  }
  for (int v = 0; v < n; ++v) {
    out_start_[v + 1] += out_start_[v];
    in_start_[v + 1] += in_start_[v];
  }
  out_to_.resize(a);
  out_id_.resize(a);
  in_from_.resize(a);
  in_id_.resize(a);
  std::vector<int> op(out_start_.begin(), out_start_.end() - 1);
  std::vector<int> ip(in_start_.begin(), in_start_.end() - 1);
  for (std::size_t i = 0; i < a; ++i) {
    int o = op[tail[i]]++;
    out_to_[o] = head[i];
    out_id_[o] = arc_ids[i];
    int p = ip[head[i]]++;
    in_from_[p] = tail[i];
    in_id_[p] = arc_ids[i];
  }
}

std::vector<char> Csr::reach(int from, bool forward, int skip) const {
  std::vector<char> seen(n_, 0);
  if (n_ == 0) return seen;
  const auto& start = forward ? out_start_ : in_start_;
  const auto& nbr = forward ? out_to_ : in_from_;
  const auto& ids = forward ? out_id_ : in_id_;
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int k = start[v]; k < start[v + 1]; ++k) {
      if (ids[k] == skip || seen[nbr[k]]) continue;
      seen[nbr[k]] = 1;
      stack.push_back(nbr[k]);
    }
  }
  return seen;
}

bool Csr::strongly_connected(int skip) const {
  if (n_ <= 1) return true;
  for (bool fwd : {true, false}) {
    auto seen = reach(0, fwd, skip);
    for (char s : seen) {
      if (!s) return false;
    }
  }
  return true;
}

bool Csr::reaches(int from, int to, int skip) const { return reach(from, true, skip)[to] != 0; }

MaskKernel::MaskKernel(const Multigraph& g)
    : n_(static_cast<int>(g.num_vertices())), m_(static_cast<int>(g.num_edges())) {
  require(n_ <= 64 && m_ <= 64, Errc::too_large, "mask kernel supports at most 64 vertices and 64 edges");
  all_ = m_ == 64 ? ~0ULL : ((1ULL << m_) - 1);
  vertices_ = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
  eu_.resize(m_);
  ev_.resize(m_);
  parallel_.resize(m_);
  for (int i = 0; i < m_; ++i) {
    eu_[i] = g.tail_index(i);
    ev_[i] = g.head_index(i);
    if (eu_[i] == ev_[i]) loops_ |= 1ULL << i;
  }
  for (int i = 0; i < m_; ++i) {
    if (eu_[i] == ev_[i]) continue;
    for (int j = 0; j < m_; ++j) {
      if (j != i && eu_[j] == eu_[i] && ev_[j] == ev_[i]) parallel_[i].push_back(j);
    }
  }
}

void MaskKernel::build(std::uint64_t reversed, Adjacency& adj) const {
  for (int v = 0; v < n_; ++v) adj.out[v] = adj.in[v] = 0;
  for (int i = 0; i < m_; ++i) {
    if ((loops_ >> i) & 1) continue;
    int t = eu_[i], h = ev_[i];
    if ((reversed >> i) & 1) std::swap(t, h);
    adj.out[t] |= 1ULL << h;
    adj.in[h] |= 1ULL << t;
  }
}

std::uint64_t MaskKernel::forward_reach(const Adjacency& adj, int from, int skip_tail,
                                        std::uint64_t skip_head_bit) const {
  std::uint64_t reach = 1ULL << from;
  std::uint64_t frontier = reach;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint64_t nb = adj.out[v];
      if (v == skip_tail) nb &= ~skip_head_bit;
      next |= nb;
    }
    frontier = next & ~reach;
    reach |= next;
  }
  return reach;
}

bool MaskKernel::strongly_connected(std::uint64_t reversed) const {
  Adjacency adj;
  build(reversed, adj);
  return strong(adj);
}

bool MaskKernel::strong(const Adjacency& adj) const {
  if (n_ <= 1) return true;
  if (forward_reach(adj, 0, -1, 0) != vertices_) return false;
  std::uint64_t reach = 1ULL, frontier = 1ULL;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj.in[v];
    }
    frontier = next & ~reach;
    reach |= next;
  }
  return reach == vertices_;
}

bool MaskKernel::arc_deletable(const Adjacency& adj, std::uint64_t reversed, int ei) const {
  if ((loops_ >> ei) & 1) return true;
  const bool rev = (reversed >> ei) & 1;
  for (int j : parallel_[ei]) {
    if ((((reversed >> j) & 1) != 0) == rev) return true;
  }
  int t = rev ? ev_[ei] : eu_[ei];
  int h = rev ? eu_[ei] : ev_[ei];
  return (forward_reach(adj, t, t, 1ULL << h) >> h) & 1;
}

bool MaskKernel::evaluate(std::uint64_t reversed, std::uint64_t& deletable) const {
  Adjacency adj;
  build(reversed, adj);
  if (!strong(adj)) return false;
  std::uint64_t out = 0;
  for (int i = 0; i < m_; ++i) {
    if (arc_deletable(adj, reversed, i)) out |= 1ULL << i;
  }
  deletable = out;
  return true;
}

bool MaskKernel::makes_deletable(std::uint64_t reversed, std::uint64_t required) const {
  Adjacency adj;
  build(reversed, adj);
  if (!strong(adj)) return false;
  while (required) {
    int i = std::countr_zero(required);
    required &= required - 1;
    if (!arc_deletable(adj, reversed, i)) return false;
  }
  return true;
}

}  // namespace frank::kernels
