// SPDX-License-Identifier: Apache-2.0
#include "frank/orientation.hpp"

#include <algorithm>

#include "frank/connectivity.hpp"
#include "frank/digraph_kernels.hpp"
#include "frank/error.hpp"

namespace frank {

Orientation::Orientation(GraphPtr graph, std::vector<std::uint8_t> forward)
    : graph_(std::move(graph)), forward_(std::move(forward)) {
  require(graph_ != nullptr, Errc::invalid_argument, "orientation without a graph");
  require(forward_.size() == graph_->num_edges(), Errc::invalid_argument,
          "orientation needs exactly one direction per edge");
  for (std::size_t i = 0; i < forward_.size(); ++i) {
    if (graph_->edge_at(static_cast<int>(i)).is_loop()) forward_[i] = 1;
  }
}

Orientation::Orientation(const Multigraph& g) : Orientation(std::make_shared<const Multigraph>(g)) {}

Orientation::Orientation(GraphPtr graph)
    : Orientation(graph, std::vector<std::uint8_t>(graph ? graph->num_edges() : 0, 1)) {}

Orientation Orientation::from_tails(GraphPtr graph, const std::map<EdgeId, VertexId>& tails) {
  std::vector<std::uint8_t> fwd(graph->num_edges(), 1);
  for (const auto& [e, t] : tails) {
    const Edge& edge = graph->edge(e);
    require(t == edge.u || t == edge.v, Errc::invalid_argument,
            "tail of edge " + std::to_string(e.value) + " is not one of its endpoints");
    fwd[graph->edge_index(e)] = (t == edge.u) ? 1 : 0;
  }
  for (std::size_t i = 0; i < graph->num_edges(); ++i) {
    const Edge& edge = graph->edge_at(static_cast<int>(i));
    require(edge.is_loop() || tails.contains(edge.id), Errc::invalid_argument,
            "missing direction for edge " + std::to_string(edge.id.value));
  }
  return Orientation(std::move(graph), std::move(fwd));
}

Orientation Orientation::from_mask(GraphPtr graph, std::uint64_t reversed) {
  require(graph->num_edges() <= 64, Errc::too_large, "mask orientations need at most 64 edges");
  std::vector<std::uint8_t> fwd(graph->num_edges());
  for (std::size_t i = 0; i < fwd.size(); ++i) fwd[i] = ((reversed >> i) & 1) ? 0 : 1;
  return Orientation(std::move(graph), std::move(fwd));
}

Orientation Orientation::with_tail(EdgeId e, VertexId t) const {
  const Edge& edge = graph_->edge(e);
  require(t == edge.u || t == edge.v, Errc::invalid_argument, "with_tail: not an endpoint");
  auto fwd = forward_;
  fwd[graph_->edge_index(e)] = (t == edge.u) ? 1 : 0;
  return Orientation(graph_, std::move(fwd));
}

std::map<EdgeId, VertexId> Orientation::tails() const {
  std::map<EdgeId, VertexId> out;
  for (std::size_t i = 0; i < forward_.size(); ++i) {
    const Edge& e = graph_->edge_at(static_cast<int>(i));
    if (!e.is_loop()) out[e.id] = forward_[i] ? e.u : e.v;
  }
  return out;
}

std::uint64_t Orientation::reversed_mask() const {
  require(forward_.size() <= 64, Errc::too_large, "mask orientations need at most 64 edges");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < forward_.size(); ++i) {
    if (!forward_[i] && !graph_->edge_at(static_cast<int>(i)).is_loop()) mask |= 1ULL << i;
  }
  return mask;
}

namespace {

kernels::Csr csr_of(const Orientation& d) {
  const Multigraph& g = d.graph();
  std::vector<int> tail, head, ids;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    int ei = static_cast<int>(i);
    if (g.edge_at(ei).is_loop()) continue;
    tail.push_back(d.tail_index(ei));
    head.push_back(d.head_index(ei));
    ids.push_back(ei);
  }
  return kernels::Csr(static_cast<int>(g.num_vertices()), tail, head, ids);
}

}  // namespace

ArcCut arc_cut(const Orientation& d, const VertexSet& x) {
  ArcCut cut;
  cut.side = x;
  for (EdgeId e : edge_cut(d.graph(), x)) {
    if (x.contains(d.tail(e))) {
      cut.out.insert(e);
    } else {
      cut.in.insert(e);
    }
  }
  return cut;
}

bool is_strongly_connected(const Orientation& d) { return csr_of(d).strongly_connected(); }

bool is_strongly_connected_without(const Orientation& d, EdgeId e) {
  return csr_of(d).strongly_connected(d.graph().edge_index(e));
}

int directed_local_connectivity(const Orientation& d, VertexId u, VertexId v) {
  const Multigraph& g = d.graph();
  int s = g.vertex_index(u), t = g.vertex_index(v);
  require(s != t, Errc::invalid_argument, "directed_local_connectivity: u == v");
  FlowNetwork net(static_cast<int>(g.num_vertices()));
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    int ei = static_cast<int>(i);
    if (g.edge_at(ei).is_loop()) continue;
    net.add_pair(d.tail_index(ei), d.head_index(ei), 1, 0);
  }
  return net.max_flow(s, t);
}

bool is_k_arc_connected(const Orientation& d, int k) {
  require(k >= 1, Errc::invalid_argument, "is_k_arc_connected: k must be positive");
  const Multigraph& g = d.graph();
  const int n = static_cast<int>(g.num_vertices());
  if (n <= 1) return true;
  auto flow_between = [&](int s, int t) {
    FlowNetwork net(n);
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      int ei = static_cast<int>(i);
      if (g.edge_at(ei).is_loop()) continue;
      net.add_pair(d.tail_index(ei), d.head_index(ei), 1, 0);
    }
    return net.max_flow(s, t, k);
  };
  // Every cut separates vertex 0 from some v in one of the two directions.
  for (int v = 1; v < n; ++v) {
    if (flow_between(0, v) < k || flow_between(v, 0) < k) return false;
  }
  return true;
}

EdgeSet deletable_arcs(const Orientation& d) {
  auto csr = csr_of(d);
  require(csr.strongly_connected(), Errc::precondition, "deletable_arcs: orientation is not strongly connected");
  const Multigraph& g = d.graph();
  EdgeSet out;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    int ei = static_cast<int>(i);
    const Edge& e = g.edge_at(ei);
    if (e.is_loop() || csr.reaches(d.tail_index(ei), d.head_index(ei), ei)) out.insert(e.id);
  }
  return out;
}

bool is_deletable_set(const Orientation& d, const EdgeSet& f) {
  auto csr = csr_of(d);
  if (!csr.strongly_connected()) return false;
  const Multigraph& g = d.graph();
  for (EdgeId e : f) {
    int ei = g.edge_index(e);
    if (g.edge_at(ei).is_loop()) continue;
    if (!csr.reaches(d.tail_index(ei), d.head_index(ei), ei)) return false;
  }
  return true;
}

bool cut_characterization_check(const Orientation& d, const EdgeSet& f, int max_vertices) {
  const Multigraph& g = d.graph();
  const int n = static_cast<int>(g.num_vertices());
  require(n <= max_vertices && n < 31, Errc::too_large, "cut_characterization_check: too many vertices to enumerate");
  for (EdgeId e : f) g.edge_index(e);
  std::vector<int> tail(g.num_edges()), head(g.num_edges());
  std::vector<char> in_f(g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    int ei = static_cast<int>(i);
    tail[i] = d.tail_index(ei);
    head[i] = d.head_index(ei);
    in_f[i] = f.contains(g.edge_at(ei).id);
  }
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t x = 1; x < full; ++x) {
    int entering = 0;
    bool outside_f = false;
    for (std::size_t i = 0; i < tail.size(); ++i) {
      if (!((x >> tail[i]) & 1) && ((x >> head[i]) & 1)) {
        ++entering;
        if (!in_f[i]) outside_f = true;
      }
    }
    if (!outside_f && entering < 2) return false;
  }
  return true;
}

Orientation reverse(const Orientation& d) {
  const Multigraph& g = d.graph();
  std::vector<std::uint8_t> fwd(g.num_edges());
  for (std::size_t i = 0; i < fwd.size(); ++i) fwd[i] = d.forward(static_cast<int>(i)) ? 0 : 1;
  return Orientation(d.graph_ptr(), std::move(fwd));
}

Orientation contract_orientation(const Orientation& d, const EdgeSet& f) {
  ContractionResult c = contract(d.graph(), f);
  auto q = std::make_shared<const Multigraph>(std::move(c.quotient));
  std::vector<std::uint8_t> fwd(q->num_edges(), 1);
  for (std::size_t i = 0; i < q->num_edges(); ++i) {
    const Edge& e = q->edge_at(static_cast<int>(i));
    if (e.is_loop()) continue;
    VertexId t = c.vertex_map.at(d.tail(e.id));
    fwd[i] = (t == e.u) ? 1 : 0;
  }
  return Orientation(q, std::move(fwd));
}

Orientation restrict_orientation(const Orientation& d, GraphPtr sub) {
  std::vector<std::uint8_t> fwd(sub->num_edges(), 1);
  for (std::size_t i = 0; i < sub->num_edges(); ++i) {
    const Edge& e = sub->edge_at(static_cast<int>(i));
    const Edge& orig = d.graph().edge(e.id);
    require(orig.u == e.u && orig.v == e.v, Errc::invalid_argument,
            "restrict_orientation: edge " + std::to_string(e.id.value) + " has different endpoints");
    fwd[i] = d.forward(d.graph().edge_index(e.id)) ? 1 : 0;
  }
  return Orientation(std::move(sub), std::move(fwd));
}

Orientation dfs_strong_orientation(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<int> disc(n, -1);
  std::vector<std::uint8_t> fwd(g.num_edges(), 1);
  std::vector<char> done(g.num_edges(), 0);
  int timer = 0;
  struct Frame {
    int v;
    std::size_t next;
  };
  auto orient = [&](int ei, int from) {
    fwd[ei] = (g.tail_index(ei) == from) ? 1 : 0;
    done[ei] = 1;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = timer++;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& fr = stack.back();
      auto inc = g.incident(fr.v);
      if (fr.next == inc.size()) {
        stack.pop_back();
        continue;
      }
      const Incidence& x = inc[fr.next++];
      if (done[x.edge] || x.other == fr.v) continue;
      if (disc[x.other] < 0) {
        orient(x.edge, fr.v);  // tree edge, downward
        disc[x.other] = timer++;
        stack.push_back({x.other, 0});
      } else {
        // Non-tree edges join a vertex to an ancestor; point them upward.
        orient(x.edge, disc[x.other] < disc[fr.v] ? fr.v : x.other);
      }
    }
  }
  return Orientation(std::make_shared<const Multigraph>(g), std::move(fwd));
}

std::vector<VertexSet> strong_components(const Orientation& d) {
  auto csr = csr_of(d);
  const Multigraph& g = d.graph();
  const int n = static_cast<int>(g.num_vertices());
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    auto fwd = csr.reach(v, true);
    auto bwd = csr.reach(v, false);
    VertexSet cls;
    for (int w = 0; w < n; ++w) {
      if (fwd[w] && bwd[w]) {
        comp[w] = static_cast<int>(out.size());
        cls.insert(g.vertex_at(w));
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace frank
