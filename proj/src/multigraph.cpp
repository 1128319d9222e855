// SPDX-License-Identifier: Apache-2.0
#include "frank/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frank/error.hpp"

namespace frank {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::unknown_vertex: return "unknown vertex";
    case Errc::unknown_edge: return "unknown edge";
    case Errc::parse_error: return "parse error";
    case Errc::graph6_multigraph: return "graph6 cannot encode loops or parallel edges";
    case Errc::precondition: return "precondition failed";
    case Errc::too_large: return "instance too large";
    case Errc::not_colorable: return "not 3-edge-colorable";
    case Errc::indeterminate: return "indeterminate";
    case Errc::internal: return "internal error";
  }
  return "?";
}

Multigraph::Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  require(std::adjacent_find(vertices_.begin(), vertices_.end()) == vertices_.end(),
          Errc::invalid_argument, "duplicate vertex id");
  for (auto& e : edges_) {
    if (e.v < e.u) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    require(edges_[i - 1].id != edges_[i].id, Errc::invalid_argument,
            "duplicate edge id " + std::to_string(edges_[i].id.value));
  }
  eu_.resize(edges_.size());
  ev_.resize(edges_.size());
  adjacency_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    require(has_vertex(e.u) && has_vertex(e.v), Errc::unknown_vertex,
            "edge " + std::to_string(e.id.value) + " references a missing vertex");
    eu_[i] = vertex_index(e.u);
    ev_[i] = vertex_index(e.v);
    adjacency_[eu_[i]].push_back({static_cast<int>(i), ev_[i]});
    adjacency_[ev_[i]].push_back({static_cast<int>(i), eu_[i]});
  }
}

Multigraph Multigraph::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<VertexId> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = VertexId{i};
  std::vector<Edge> es;
  es.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    es.push_back({EdgeId{static_cast<int>(i)}, VertexId{pairs[i].first}, VertexId{pairs[i].second}});
  }
  return Multigraph(std::move(vs), std::move(es));
}

bool Multigraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Multigraph::has_edge(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, EdgeId id) { return a.id < id; });
  return it != edges_.end() && it->id == e;
}

int Multigraph::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) fail(Errc::unknown_vertex, "unknown vertex " + std::to_string(v.value));
  return static_cast<int>(it - vertices_.begin());
}

int Multigraph::edge_index(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, EdgeId id) { return a.id < id; });
  if (it == edges_.end() || it->id != e) fail(Errc::unknown_edge, "unknown edge " + std::to_string(e.value));
  return static_cast<int>(it - edges_.begin());
}

VertexId Multigraph::max_vertex_id() const { return vertices_.empty() ? VertexId{-1} : vertices_.back(); }
EdgeId Multigraph::max_edge_id() const { return edges_.empty() ? EdgeId{-1} : edges_.back().id; }

VertexSet Multigraph::vertex_set() const { return VertexSet(vertices_.begin(), vertices_.end()); }

EdgeSet Multigraph::edge_set() const {
  EdgeSet s;
  for (const auto& e : edges_) s.insert(s.end(), e.id);
  return s;
}

int degree(const Multigraph& g, VertexId v) {
  return static_cast<int>(g.incident(g.vertex_index(v)).size());
}

bool is_cubic(const Multigraph& g) {
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (g.incident(static_cast<int>(i)).size() != 3) return false;
  }
  return true;
}

bool is_eulerian(const Multigraph& g) {
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (g.incident(static_cast<int>(i)).size() % 2 != 0) return false;
  }
  return true;
}

int min_degree(const Multigraph& g) {
  int best = -1;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    int d = static_cast<int>(g.incident(static_cast<int>(i)).size());
    if (best < 0 || d < best) best = d;
  }
  return best;
}

EdgeSet edge_cut(const Multigraph& g, const VertexSet& x) {
  require(!x.empty(), Errc::invalid_argument, "edge_cut: empty vertex set");
  for (VertexId v : x) g.vertex_index(v);
  require(x.size() < g.num_vertices(), Errc::invalid_argument, "edge_cut: set equals V");
  EdgeSet cut;
  for (const auto& e : g.edges()) {
    if (x.contains(e.u) != x.contains(e.v)) cut.insert(e.id);
  }
  return cut;
}

Multigraph remove_edges(const Multigraph& g, const EdgeSet& f) {
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (!f.contains(e.id)) es.push_back(e);
  }
  return Multigraph({g.vertices().begin(), g.vertices().end()}, std::move(es));
}

Multigraph keep_edges(const Multigraph& g, const EdgeSet& f) {
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (f.contains(e.id)) es.push_back(e);
  }
  return Multigraph({g.vertices().begin(), g.vertices().end()}, std::move(es));
}

Multigraph remove_vertex(const Multigraph& g, VertexId v) {
  g.vertex_index(v);
  std::vector<VertexId> vs;
  for (VertexId w : g.vertices()) {
    if (w != v) vs.push_back(w);
  }
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (e.u != v && e.v != v) es.push_back(e);
  }
  return Multigraph(std::move(vs), std::move(es));
}

Multigraph without_loops(const Multigraph& g) {
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (!e.is_loop()) es.push_back(e);
  }
  return Multigraph({g.vertices().begin(), g.vertices().end()}, std::move(es));
}

Multigraph induced_subgraph(const Multigraph& g, const VertexSet& x) {
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (x.contains(e.u) && x.contains(e.v)) es.push_back(e);
  }
  for (VertexId v : x) g.vertex_index(v);
  return Multigraph({x.begin(), x.end()}, std::move(es));
}

Multigraph shrink(const Multigraph& g, const VertexSet& x, VertexId label) {
  for (VertexId v : x) g.vertex_index(v);
  require(!g.has_vertex(label) || x.contains(label), Errc::invalid_argument,
          "shrink: label collides with a surviving vertex");
  std::vector<VertexId> vs{label};
  for (VertexId v : g.vertices()) {
    if (!x.contains(v)) vs.push_back(v);
  }
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    bool in_u = x.contains(e.u), in_v = x.contains(e.v);
    if (in_u && in_v) continue;
    es.push_back({e.id, in_u ? label : e.u, in_v ? label : e.v});
  }
  return Multigraph(std::move(vs), std::move(es));
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Keeps the smaller root so the class representative is its smallest index.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

ContractionResult contract(const Multigraph& g, const EdgeSet& f) {
  for (EdgeId e : f) g.edge_index(e);
  DisjointSets ds(g.num_vertices());
  for (EdgeId e : f) {
    int ei = g.edge_index(e);
    ds.unite(g.tail_index(ei), g.head_index(ei));
  }
  ContractionResult out;
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    int r = ds.find(static_cast<int>(i));
    out.vertex_map[g.vertex_at(static_cast<int>(i))] = g.vertex_at(r);
    if (r == static_cast<int>(i)) vs.push_back(g.vertex_at(r));
  }
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (f.contains(e.id)) {
      out.edge_status[e.id] = EdgeFate::contracted;
      continue;
    }
    Edge q{e.id, out.vertex_map[e.u], out.vertex_map[e.v]};
    out.edge_status[e.id] = (q.is_loop() && !e.is_loop()) ? EdgeFate::became_loop : EdgeFate::kept;
    es.push_back(q);
  }
  out.quotient = Multigraph(std::move(vs), std::move(es));
  return out;
}

std::vector<VertexSet> connected_components(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].insert(g.vertex_at(v));
      for (const auto& inc : g.incident(v)) {
        if (comp[inc.other] < 0) {
          comp[inc.other] = id;
          stack.push_back(inc.other);
        }
      }
    }
  }
  return out;
}

bool is_connected(const Multigraph& g) { return connected_components(g).size() <= 1; }

namespace {

// Iterative lowpoint DFS shared by the bridge and cut vertex searches.
struct LowpointDfs {
  std::vector<int> disc, low, parent_edge;
  std::vector<char> is_cut;
  EdgeSet bridge_set;

  explicit LowpointDfs(const Multigraph& g) {
    const int n = static_cast<int>(g.num_vertices());
    disc.assign(n, -1);
    low.assign(n, 0);
    parent_edge.assign(n, -1);
    is_cut.assign(n, 0);
    int timer = 0;
    struct Frame {
      int v;
      std::size_t next;
      int children;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
      if (disc[root] >= 0) continue;
      disc[root] = low[root] = timer++;
      stack.push_back({root, 0, 0});
      while (!stack.empty()) {
        Frame& fr = stack.back();
        auto inc = g.incident(fr.v);
        if (fr.next < inc.size()) {
          const Incidence& x = inc[fr.next++];
          if (x.other == fr.v || x.edge == parent_edge[fr.v]) continue;
          if (disc[x.other] < 0) {
            disc[x.other] = low[x.other] = timer++;
            parent_edge[x.other] = x.edge;
            ++fr.children;
            stack.push_back({x.other, 0, 0});
          } else {
            low[fr.v] = std::min(low[fr.v], disc[x.other]);
          }
          continue;
        }
        int v = fr.v;
        int children = fr.children;
        stack.pop_back();
        if (stack.empty()) {
          if (children >= 2) is_cut[v] = 1;
          continue;
        }
        int p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] > disc[p]) bridge_set.insert(g.edge_at(parent_edge[v]).id);
        if (low[v] >= disc[p] && stack.size() > 1) is_cut[p] = 1;
      }
    }
  }
};

}  // namespace

EdgeSet bridges(const Multigraph& g) { return LowpointDfs(g).bridge_set; }

std::vector<VertexSet> maximal_2ec_subgraphs(const Multigraph& g) {
  return connected_components(remove_edges(g, bridges(g)));
}

VertexSet cut_vertices(const Multigraph& g) {
  LowpointDfs dfs(g);
  VertexSet out;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (dfs.is_cut[i]) out.insert(g.vertex_at(static_cast<int>(i)));
  }
  return out;
}

std::string to_string(const Multigraph& g) {
  std::ostringstream os;
  os << "Multigraph(n=" << g.num_vertices() << ", m=" << g.num_edges() << ")";
  return os.str();
}

}  // namespace frank
