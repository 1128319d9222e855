// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "frank/connectivity.hpp"
#include "frank/error.hpp"
#include "frank/named_graphs.hpp"
#include "frank/orientation.hpp"
#include "oracles.hpp"

using namespace frank;

namespace {

GraphPtr share(const Multigraph& g) { return std::make_shared<const Multigraph>(g); }

// Arcs given as (tail, head) pairs; edge i is the i-th arc.
Orientation directed(int n, const std::vector<std::pair<int, int>>& arcs) {
  const auto g = share(Multigraph::from_pairs(n, arcs));
  std::map<EdgeId, VertexId> tails;
  for (std::size_t i = 0; i < arcs.size(); ++i) tails[EdgeId{static_cast<int>(i)}] = VertexId{arcs[i].first};
  return Orientation::from_tails(g, tails);
}

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
Orientation directed_cycle(int n) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) p.push_back({i, (i + 1) % n});
  return directed(n, p);
}

}  // namespace

TEST_CASE("tails, masks and reversal") {
  const auto g = share(named_graph("k4"));
  const Orientation d = Orientation::from_mask(g, 0b000011);
  CHECK(d.tail(EdgeId{0}) == g->edge(EdgeId{0}).v);
  CHECK(d.tail(EdgeId{2}) == g->edge(EdgeId{2}).u);
  CHECK(d.reversed_mask() == 0b000011);
  CHECK(Orientation::from_tails(g, d.tails()) == d);
  const Orientation r = reverse(d);
  for (const auto& e : g->edges()) CHECK(r.tail(e.id) == d.head(e.id));
  CHECK(d.with_tail(EdgeId{0}, g->edge(EdgeId{0}).u).reversed_mask() == 0b000010);
  CHECK_THROWS_AS(Orientation::from_tails(g, {}), Error);
}

TEST_CASE("directed cycles are strong and have no deletable arc") {
  const Orientation c = directed_cycle(5);
  CHECK(is_strongly_connected(c));
  CHECK(deletable_arcs(c).empty());
  CHECK(is_deletable_set(c, {}));
  CHECK(!is_deletable_set(c, {EdgeId{0}}));
  CHECK(!is_strongly_connected_without(c, EdgeId{2}));
  CHECK(directed_local_connectivity(c, VertexId{0}, VertexId{3}) == 1);
  CHECK(is_k_arc_connected(c, 1));
  CHECK(!is_k_arc_connected(c, 2));
  CHECK_THROWS_AS(deletable_arcs(reverse(Orientation::from_mask(share(named_graph("k4")), 0))), Error);
}

TEST_CASE("arc cuts") {
  const Orientation c = directed_cycle(4);
  const ArcCut cut = arc_cut(c, {VertexId{0}, VertexId{1}});
  CHECK(cut.out == EdgeSet{EdgeId{1}});
  CHECK(cut.in == EdgeSet{EdgeId{3}});
}

TEST_CASE("deletability agrees with the cut characterization and brute force on corpus orientations") {
  for (const std::string name : {"k4", "k33", "prism3", "w4", "theta3", "c4_doubled", "k5"}) {
    const auto g = share(named_graph(name));
    const int m = static_cast<int>(g->num_edges());
    CAPTURE(name);
    for (std::uint64_t mask = 0; mask < (1ULL << m); mask += 1 + (mask % 7)) {
      const Orientation d = Orientation::from_mask(g, mask);
      const bool strong = is_strongly_connected(d);
      CHECK(strong == oracle::strongly_connected(static_cast<int>(g->num_vertices()), oracle::arcs_of(d)));
      EdgeSet del;
      for (const auto& e : g->edges()) {
        const bool one = is_deletable_set(d, {e.id});
        CHECK(one == oracle::deletable(d, {e.id}));
        CHECK(one == cut_characterization_check(d, {e.id}));
        if (one) del.insert(e.id);
      }
      if (strong) {
        CHECK(deletable_arcs(d) == del);
        CHECK(is_deletable_set(reverse(d), del));
      }
      CHECK(is_deletable_set(d, del) == strong);
    }
  }
}

TEST_CASE("directed connectivity against brute-force arc cuts") {
  const auto g = share(named_graph("k5"));
  for (std::uint64_t mask : {0ULL, 0b1010011011ULL, 0b0110101100ULL}) {
    const Orientation d = Orientation::from_mask(g, mask);
    const int n = static_cast<int>(g->num_vertices());
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (s == t) continue;
        int best = 1 << 30;
        for (std::uint32_t x = 0; x < (1U << n); ++x) {
          if (!(x >> s & 1U) || (x >> t & 1U)) continue;
          int out = 0;
          for (const auto& a : oracle::arcs_of(d)) out += (x >> a.tail & 1U) && !(x >> a.head & 1U);
          best = std::min(best, out);
        }
        CHECK(directed_local_connectivity(d, g->vertex_at(s), g->vertex_at(t)) == best);
      }
    }
  }
}

TEST_CASE("contraction and restriction of orientations") {
  const auto g = share(named_graph("prism3"));
  const Orientation d = dfs_strong_orientation(*g);
  CHECK(is_strongly_connected(d));
  const Orientation q = contract_orientation(d, {EdgeId{0}, EdgeId{1}});
  CHECK(q.graph().num_vertices() == 4);
  CHECK(is_strongly_connected(q));
  const auto sub = share(remove_edges(*g, {EdgeId{0}}));
  const Orientation r = restrict_orientation(d, sub);
  for (const auto& e : sub->edges()) CHECK(r.tail(e.id) == d.tail(e.id));
}

TEST_CASE("depth-first strong orientations of 2-edge-connected graphs") {
  for (const auto& name : corpus_names()) {
    const Multigraph g = named_graph(name);
    CAPTURE(name);
    CHECK(is_strongly_connected(dfs_strong_orientation(g)));
  }
}

TEST_CASE("strong components") {
  // 0 -> 1 -> 2 -> 0 and 2 -> 3.
  const Orientation d = directed(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  const auto comps = strong_components(d);
  CHECK(comps.size() == 2);
  CHECK(!is_strongly_connected(d));
}

TEST_CASE("loops are always deletable in a strong orientation") {
  const Orientation d = directed(2, {{0, 1}, {1, 0}, {0, 0}});
  CHECK(is_strongly_connected(d));
  CHECK(is_deletable_set(d, {EdgeId{2}}));
  CHECK(cut_characterization_check(d, {EdgeId{2}}));
}
