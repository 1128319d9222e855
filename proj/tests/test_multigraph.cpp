// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "frank/connectivity.hpp"
#include "frank/error.hpp"
#include "frank/named_graphs.hpp"
#include "oracles.hpp"

using namespace frank;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

}  // namespace

TEST_CASE("construction keeps identifiers sorted and rejects bad input") {
  const Multigraph g({VertexId{5}, VertexId{2}}, {{EdgeId{9}, VertexId{5}, VertexId{2}}, {EdgeId{3}, VertexId{2}, VertexId{2}}});
  CHECK(g.vertex_at(0) == VertexId{2});
  CHECK(g.edge_at(0).id == EdgeId{3});
  CHECK(degree(g, VertexId{2}) == 3);  // a loop counts twice
  CHECK(g.incident(0).size() == 3);
  CHECK(code_of([] { Multigraph({VertexId{0}}, {{EdgeId{0}, VertexId{0}, VertexId{1}}}); }) == Errc::unknown_vertex);
  CHECK(code_of([&] { g.edge_index(EdgeId{4}); }) == Errc::unknown_edge);
  CHECK(Multigraph().max_vertex_id() == VertexId{-1});
}

TEST_CASE("degrees and simple predicates") {
  CHECK(is_cubic(named_graph("petersen")));
  CHECK(!is_cubic(named_graph("k5")));
  CHECK(is_eulerian(named_graph("k5")));
  CHECK(min_degree(named_graph("w4")) == 3);
  const Multigraph k4 = named_graph("k4");
  CHECK(edge_cut(k4, {VertexId{0}}).size() == 3);
  CHECK(edge_cut(k4, {VertexId{0}, VertexId{1}}).size() == 4);
}

TEST_CASE("subgraphs keep identifiers") {
  const Multigraph k4 = named_graph("k4");
  const Multigraph h = remove_edges(k4, {EdgeId{0}});
  CHECK(h.num_edges() == 5);
  CHECK(!h.has_edge(EdgeId{0}));
  CHECK(keep_edges(k4, {EdgeId{0}}).num_vertices() == 4);
  const Multigraph r = remove_vertex(k4, VertexId{3});
  CHECK(r.num_vertices() == 3);
  CHECK(r.num_edges() == 3);
  const Multigraph loops = Multigraph::from_pairs(2, {{0, 0}, {0, 1}});
  CHECK(without_loops(loops).num_edges() == 1);
  CHECK(induced_subgraph(k4, {VertexId{0}, VertexId{1}}).num_edges() == 1);
}

TEST_CASE("shrink identifies a set and drops its inner edges") {
  const Multigraph prism = named_graph("prism3");
  const Multigraph s = shrink(prism, {VertexId{0}, VertexId{1}, VertexId{2}}, VertexId{0});
  CHECK(s.num_vertices() == 4);
  CHECK(s.num_edges() == 6);
  CHECK(degree(s, VertexId{0}) == 3);
  CHECK(code_of([&] { shrink(prism, {VertexId{0}}, VertexId{4}); }) == Errc::invalid_argument);
}

TEST_CASE("contraction maps classes to their smallest vertex and reports edge fates") {
  const Multigraph c4 = Multigraph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  const ContractionResult r = contract(c4, {EdgeId{0}, EdgeId{1}});
  CHECK(r.quotient.num_vertices() == 2);
  CHECK(r.vertex_map.at(VertexId{2}) == VertexId{0});
  CHECK(r.edge_status.at(EdgeId{0}) == EdgeFate::contracted);
  CHECK(r.edge_status.at(EdgeId{4}) == EdgeFate::became_loop);
  CHECK(r.edge_status.at(EdgeId{2}) == EdgeFate::kept);
}

TEST_CASE("components, bridges, 2-edge-connected pieces and cut vertices") {
  // Two triangles joined by a bridge, plus an isolated vertex.
  const Multigraph g = Multigraph::from_pairs(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(connected_components(g).size() == 2);
  CHECK(!is_connected(g));
  CHECK(bridges(g) == EdgeSet{EdgeId{3}});
  CHECK(maximal_2ec_subgraphs(g).size() == 3);
  CHECK(cut_vertices(g) == VertexSet{VertexId{2}, VertexId{3}});
  const Multigraph doubled = Multigraph::from_pairs(2, {{0, 1}, {0, 1}});
  CHECK(bridges(doubled).empty());
}

TEST_CASE("edge connectivity matches brute-force cuts on the corpus") {
  for (const auto& name : corpus_names()) {
    const Multigraph g = named_graph(name);
    if (g.num_vertices() > 14) continue;
    CAPTURE(name);
    CHECK(edge_connectivity(g) == oracle::global_min_cut(g));
    CHECK(is_essentially_4ec(g) == oracle::essentially_4ec(g));
    const auto lam = all_pairs_connectivity(g);
    for (int s = 0; s < static_cast<int>(g.num_vertices()); s += 3) {
      for (int t = s + 1; t < static_cast<int>(g.num_vertices()); t += 2) {
        CHECK(lam[s][t] == oracle::local_min_cut(g, s, t));
      }
    }
  }
}

TEST_CASE("corpus sizes") {
  CHECK(named_graph("petersen").num_edges() == 15);
  CHECK(named_graph("dodecahedron").num_vertices() == 20);
  CHECK(named_graph("heawood").num_edges() == 21);
  CHECK(named_graph("moebius_kantor").num_vertices() == 16);
  CHECK(named_graph("k33_truncated").num_vertices() == 8);
  CHECK(named_graph("petersen_truncated").num_edges() == 18);
  CHECK(code_of([] { named_graph("nope"); }) == Errc::invalid_argument);
}

TEST_CASE("nontrivial 3-edge-cuts") {
  const auto cut = find_nontrivial_3_cut(named_graph("prism3"));
  REQUIRE(cut.has_value());
  CHECK(cut->size() == 3);
  CHECK(edge_cut(named_graph("prism3"), *cut).size() == 3);
  CHECK(!find_nontrivial_3_cut(named_graph("petersen")).has_value());
  CHECK(is_essentially_4ec(named_graph("k4")));
  CHECK(!is_essentially_4ec(named_graph("k33_truncated")));
}

TEST_CASE("truncation replaces a vertex by a triangle") {
  const Multigraph t = truncate_vertex(named_graph("k4"), VertexId{0});
  CHECK(t.num_vertices() == 6);
  CHECK(is_cubic(t));
  CHECK(edge_connectivity(t) == 3);
  CHECK(code_of([] { truncate_vertex(named_graph("k5"), VertexId{0}); }) == Errc::precondition);
}
