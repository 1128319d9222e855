// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "frank/connectivity.hpp"
#include "frank/cubic_extension.hpp"
#include "frank/error.hpp"
#include "frank/named_graphs.hpp"
#include "frank/seven_packings.hpp"
#include "frank/structures.hpp"
#include "oracles.hpp"

using namespace frank;

namespace {

bool is_perfect_matching(const Multigraph& g, const EdgeSet& m) {
  std::map<VertexId, int> hit;
  for (EdgeId e : m) {
    const auto& ed = g.edge(e);
    if (ed.u == ed.v) return false;
    ++hit[ed.u];
    ++hit[ed.v];
  }
  if (hit.size() != g.num_vertices()) return false;
  for (const auto& [v, c] : hit)
    if (c != 1) return false;
  return true;
}

EdgeSet all_edges(const Multigraph& g) {
  EdgeSet s;
  for (const auto& e : g.edges()) s.insert(e.id);
  return s;
}

bool is_spanning_tree(const Multigraph& g, const EdgeSet& t) {
  return t.size() + 1 == g.num_vertices() && is_connected(keep_edges(g, t));
}

}  // namespace

TEST_CASE("perfect matchings against the counting oracle") {
  for (const std::string name : {"k4", "k33", "prism3", "petersen", "cube", "w4", "theta3"}) {
    const Multigraph g = named_graph(name);
    CAPTURE(name);
    const auto all = enumerate_perfect_matchings(g);
    CHECK(static_cast<long>(all.size()) == oracle::count_perfect_matchings(g));
    for (const auto& m : all) CHECK(is_perfect_matching(g, m));
    const auto one = perfect_matching(g);
    CHECK(one.has_value() == !all.empty());
  }
  CHECK(enumerate_perfect_matchings(named_graph("petersen")).size() == 6);
  CHECK(enumerate_perfect_matchings(named_graph("petersen"), 2).size() == 2);
}

TEST_CASE("3-edge-colorings against the oracle") {
  for (const auto& name : corpus_names()) {
    const Multigraph g = named_graph(name);
    if (!is_cubic(g)) continue;
    CAPTURE(name);
    const auto c = proper_3_edge_coloring(g);
    if (g.num_edges() <= 24) CHECK(c.has_value() == oracle::three_edge_colorable(g));
    if (c) {
      EdgeSet all;
      for (const auto& m : *c) {
        CHECK(is_perfect_matching(g, m));
        all.insert(m.begin(), m.end());
      }
      CHECK(all.size() == g.num_edges());
    }
  }
  CHECK(!proper_3_edge_coloring(named_graph("petersen")).has_value());
  CHECK_THROWS_AS(proper_3_edge_coloring(named_graph("k5")), Error);
}

TEST_CASE("double covers by six perfect matchings") {
  for (const std::string name : {"petersen", "k4", "k33", "prism3"}) {
    const Multigraph g = named_graph(name);
    CAPTURE(name);
    const DoubleCover bf = berge_fulkerson_cover(g);
    REQUIRE(bf.outcome == Outcome::yes);
    REQUIRE(bf.matchings.size() == 6);
    std::map<EdgeId, int> count;
    for (const auto& m : bf.matchings) {
      CHECK(is_perfect_matching(g, m));
      for (EdgeId e : m) ++count[e];
    }
    for (const auto& e : g.edges()) CHECK(count[e.id] == 2);
  }
  CHECK(berge_fulkerson_cover(named_graph("petersen"), 1).outcome == Outcome::indeterminate);
}

TEST_CASE("T-joins") {
  const Multigraph g = named_graph("petersen");
  const VertexSet t = {VertexId{0}, VertexId{3}, VertexId{5}, VertexId{9}};
  const auto j = t_join(g, t);
  REQUIRE(j.has_value());
  CHECK(odd_vertices(g, *j) == t);
  CHECK(!t_join(g, {VertexId{0}}).has_value());
  CHECK(t_join(g, {})->empty());
  const Multigraph loops = Multigraph::from_pairs(2, {{0, 0}, {0, 1}});
  CHECK(odd_vertices(loops, {EdgeId{0}}).empty());
}

TEST_CASE("edge-disjoint spanning trees and three T-joins") {
  for (const std::string name : {"k5", "octahedron", "c4_doubled"}) {
    const Multigraph g = named_graph(name);
    CAPTURE(name);
    const auto trees = two_edge_disjoint_spanning_trees(g);
    REQUIRE(trees.has_value());
    CHECK(is_spanning_tree(g, trees->first));
    CHECK(is_spanning_tree(g, trees->second));
    for (EdgeId e : trees->first) CHECK(!trees->second.count(e));
    if (edge_connectivity(g) >= 4) {
      const auto parts = partition_into_three_tjoins(g);
      const VertexSet odd = odd_vertices(g, all_edges(g));
      std::size_t total = 0;
      for (const auto& p : parts) {
        CHECK(odd_vertices(g, p) == odd);
        total += p.size();
      }
      CHECK(total == g.num_edges());
    }
  }
  CHECK(!two_edge_disjoint_spanning_trees(named_graph("petersen")).has_value());
}

TEST_CASE("packings and special sets against the oracle") {
  const Multigraph g = named_graph("petersen");
  const EdgeSet m = *perfect_matching(g);
  EdgeSet rest;
  for (const auto& e : g.edges())
    if (!m.count(e.id)) rest.insert(e.id);
  const CyclePacking p = packing_from_edges(g, rest);
  CHECK(is_valid_packing(g, p));
  CHECK(p.cycles.size() == 2);
  CHECK(p.edge_set() == rest);
  CHECK(special_set(g, p) == oracle::special_set(g, rest));
  CHECK(special_set(g, CyclePacking{}) == oracle::special_set(g, {}));
  CHECK_THROWS_AS(packing_from_edges(g, m), Error);
  CyclePacking bad = p;
  bad.cycles[0].edges.pop_back();
  CHECK(!is_valid_packing(g, bad));
}

TEST_CASE("circuits and deletable arcs on them") {
  for (const std::string name : {"petersen", "k4", "prism3", "cube"}) {
    const auto g = std::make_shared<const Multigraph>(named_graph(name));
    const EdgeSet m = *perfect_matching(*g);
    EdgeSet rest;
    for (const auto& e : g->edges())
      if (!m.count(e.id)) rest.insert(e.id);
    const CyclePacking p = packing_from_edges(*g, rest);
    const Orientation d = orient_cycles_as_circuits(dfs_strong_orientation(*g), p);
    CAPTURE(name);
    for (const auto& c : p.cycles) CHECK(is_circuit(d, c));
    CHECK(circuit_ties(p).size() == p.cycles.size());
    if (!is_strongly_connected(d)) continue;
    for (const auto& c : p.cycles) {
      const EdgeId a = find_deletable_arc_on_circuit(d, c);
      CHECK(std::find(c.edges.begin(), c.edges.end(), a) != c.edges.end());
      CHECK(is_deletable_set(d, {a}));
    }
  }
}

TEST_CASE("paths split into two matchings") {
  const Multigraph path = Multigraph::from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
  const auto [a, b] = paths_to_two_matchings(path, all_edges(path));
  CHECK(a == EdgeSet{EdgeId{0}, EdgeId{2}, EdgeId{3}});
  CHECK(b == EdgeSet{EdgeId{1}});
}

TEST_CASE("seven packings on cubic graphs") {
  for (const std::string name : {"k4", "k33", "prism3", "petersen", "cube", "k33_truncated"}) {
    const Multigraph g = named_graph(name);
    CAPTURE(name);
    SevenPackings sp = seven_cycle_packings(g);
    CHECK(check_seven_packings(sp));
    for (const auto& e : g.edges()) {
      const auto& in = sp.membership.at(e.id);
      CHECK(std::count(in.begin(), in.end(), true) == 4);
      CHECK(sp.special[sp.special_witness.at(e.id)].count(e.id));
    }
    for (int k = 0; k < 7; ++k) {
      CHECK(is_valid_packing(g, sp.packings[k]));
      CHECK(sp.special[k] == oracle::special_set(g, sp.packings[k].edge_set()));
    }
  }
  CHECK(seven_cycle_packings(named_graph("prism3")).splits > 0);
  CHECK_THROWS_AS(seven_cycle_packings(named_graph("k5")), Error);
}

TEST_CASE("cubic extensions and projections") {
  const auto g = std::make_shared<const Multigraph>(named_graph("k5"));
  const CubicExtension ext = cubic_extension(*g);
  CHECK(is_cubic(ext.host));
  CHECK(ext.host.num_vertices() == 20);
  CHECK(edge_connectivity(ext.host) >= 3);
  for (const auto& e : g->edges()) CHECK(ext.host.has_edge(e.id));
  CHECK(ext.cycle_edges().size() == 20);
  const Orientation hd = dfs_strong_orientation(ext.host);
  const Orientation d = project_orientation(ext, g, hd);
  for (const auto& e : g->edges()) CHECK(d.tail(e.id) == ext.original_of.at(hd.tail(e.id)));
  CHECK(is_strongly_connected(d));
  const CubicExtension same = cubic_extension(named_graph("petersen"));
  CHECK(same.host == named_graph("petersen"));
  CHECK_THROWS_AS(cubic_extension(Multigraph::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}})), Error);
}
