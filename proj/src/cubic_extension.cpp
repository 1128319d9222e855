// SPDX-License-Identifier: Apache-2.0
#include "frank/cubic_extension.hpp"

#include <algorithm>

#include "frank/error.hpp"

namespace frank {

EdgeSet CubicExtension::cycle_edges() const {
  EdgeSet out;
  for (const auto& [v, es] : cycles) out.insert(es.begin(), es.end());
  return out;
}

CubicExtension cubic_extension(const Multigraph& g) {
  require(g.num_vertices() == 0 || min_degree(g) >= 3, Errc::precondition,
          "cubic extension needs minimum degree 3");
  CubicExtension ext;
  int next_vertex = g.max_vertex_id().value + 1;
  int next_edge = g.max_edge_id().value + 1;

  // Endpoint slots per vertex, sorted by edge id; a loop contributes both ends.
  std::map<VertexId, std::vector<std::pair<EdgeId, int>>> slots;  // (edge, end 0 = u / 1 = v)
  for (const auto& e : g.edges()) {
    slots[e.u].push_back({e.id, 0});
    slots[e.v].push_back({e.id, 1});
  }
  std::map<std::pair<EdgeId, int>, VertexId> attach;
  std::vector<VertexId> host_vertices;
  std::vector<Edge> host_edges;
  for (VertexId v : g.vertices()) {
    auto& sl = slots[v];
    std::sort(sl.begin(), sl.end());
    if (sl.size() == 3) {
      ext.classes[v] = {v};
      ext.cycles[v] = {};
      ext.original_of[v] = v;
      host_vertices.push_back(v);
      for (const auto& s : sl) attach[s] = v;
      continue;
    }
    std::vector<VertexId> cls;
    for (std::size_t k = 0; k < sl.size(); ++k) {
      VertexId x{next_vertex++};
      cls.push_back(x);
      ext.original_of[x] = v;
      host_vertices.push_back(x);
      attach[sl[k]] = x;
    }
    std::vector<EdgeId> cyc;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      EdgeId id{next_edge++};
      host_edges.push_back({id, cls[k], cls[(k + 1) % cls.size()]});
      cyc.push_back(id);
    }
    ext.classes[v] = std::move(cls);
    ext.cycles[v] = std::move(cyc);
  }
  for (const auto& e : g.edges()) host_edges.push_back({e.id, attach.at({e.id, 0}), attach.at({e.id, 1})});
  ext.host = Multigraph(std::move(host_vertices), std::move(host_edges));
  require(is_cubic(ext.host), Errc::internal, "cubic extension is not cubic");
  return ext;
}

Orientation project_orientation(const CubicExtension& ext, GraphPtr original, const Orientation& host_d) {
  require(host_d.graph() == ext.host, Errc::invalid_argument, "orientation is not on the extension host");
  std::map<EdgeId, VertexId> tails;
  for (const auto& e : original->edges()) {
    if (e.is_loop()) continue;
    tails[e.id] = ext.original_of.at(host_d.tail(e.id));
  }
  return Orientation::from_tails(std::move(original), tails);
}

}  // namespace frank
