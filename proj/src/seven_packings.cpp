// SPDX-License-Identifier: Apache-2.0
#include "frank/seven_packings.hpp"

#include <algorithm>
#include <numeric>

#include "frank/connectivity.hpp"
#include "frank/error.hpp"

namespace frank {

bool check_seven_packings(SevenPackings& sp) {
  const Multigraph& g = sp.graph;
  bool ok = true;
  for (int k = 0; k < 7; ++k) {
    if (!is_valid_packing(g, sp.packings[k])) return false;
    sp.special[k] = special_set(g, sp.packings[k]);
  }
  sp.membership.clear();
  sp.special_witness.clear();
  for (const auto& e : g.edges()) {
    std::array<bool, 7> in{};
    int count = 0;
    for (int k = 0; k < 7; ++k) {
      in[k] = sp.packings[k].edge_set().contains(e.id);
      count += in[k];
      if (!sp.special_witness.contains(e.id) && sp.special[k].contains(e.id)) sp.special_witness[e.id] = k;
    }
    sp.membership[e.id] = in;
    if (count != 4 || !sp.special_witness.contains(e.id)) ok = false;
  }
  return ok;
}

namespace {

SevenPackings base_case(const Multigraph& g) {
  auto m = perfect_matching(g);
  require(m.has_value(), Errc::internal, "cubic 3-edge-connected graph without a perfect matching");
  const EdgeSet& matching = *m;
  EdgeSet rest;  // E - M
  for (const auto& e : g.edges()) {
    if (!matching.contains(e.id)) rest.insert(e.id);
  }
  SevenPackings sp;
  sp.graph = g;
  sp.packings[0] = packing_from_edges(g, rest);

  ContractionResult c = contract(g, rest);
  const auto f = partition_into_three_tjoins(c.quotient);
  const Multigraph g_minus_m = keep_edges(g, rest);
  for (int i = 0; i < 3; ++i) {
    VertexSet covered;
    for (EdgeId e : f[i]) {
      covered.insert(g.edge(e).u);
      covered.insert(g.edge(e).v);
    }
    VertexSet t_i;
    for (VertexId v : g.vertices()) {
      if (!covered.contains(v)) t_i.insert(v);
    }
    auto n_i = t_join(g_minus_m, t_i);
    require(n_i.has_value(), Errc::internal, "T_i has odd parity on a cycle of G - M");
    EdgeSet s_even = f[i], s_odd = f[i];
    s_even.insert(n_i->begin(), n_i->end());
    for (EdgeId e : rest) {
      if (!n_i->contains(e)) s_odd.insert(e);
    }
    for (int j = 0; j < 2; ++j) {
      const EdgeSet& s = j == 0 ? s_even : s_odd;
      require(odd_vertices(g, s) == g.vertex_set(), Errc::internal, "S_j is not a V-join");
      EdgeSet complement;
      for (const auto& e : g.edges()) {
        if (!s.contains(e.id)) complement.insert(e.id);
      }
      sp.packings[1 + 2 * i + j] = packing_from_edges(g, complement);
    }
  }
  return sp;
}

// Packing k contains the vertex when one of its cycles passes through it.
bool packing_touches(const CyclePacking& p, VertexId v) { return p.vertex_set().contains(v); }

// Reorders the packings of one side: index 0 avoids the contracted vertex and
// indices 2j-1, 2j (j = 1..3) hold cut - {e_j}, the first with e_j special.
std::array<int, 7> relabel(const SevenPackings& side, VertexId contracted, const std::array<EdgeId, 3>& cut) {
  std::array<int, 7> order{};
  std::vector<int> avoid;
  for (int k = 0; k < 7; ++k) {
    if (!packing_touches(side.packings[k], contracted)) avoid.push_back(k);
  }
  require(avoid.size() == 1, Errc::internal, "expected exactly one packing avoiding the contracted vertex");
  order[0] = avoid[0];
  for (int j = 0; j < 3; ++j) {
    std::vector<int> pair;
    for (int k = 0; k < 7; ++k) {
      const EdgeSet es = side.packings[k].edge_set();
      bool match = !es.contains(cut[j]);
      for (int i = 0; i < 3; ++i) {
        if (i != j && !es.contains(cut[i])) match = false;
      }
      if (match) pair.push_back(k);
    }
    require(pair.size() == 2, Errc::internal, "expected two packings through each pair of cut edges");
    // The lower index with e_j special goes first.
    if (!side.special[pair[0]].contains(cut[j])) std::swap(pair[0], pair[1]);
    require(side.special[pair[0]].contains(cut[j]), Errc::internal, "cut edge special in neither packing");
    order[1 + 2 * j] = pair[0];
    order[2 + 2 * j] = pair[1];
  }
  return order;
}

SevenPackings build(const Multigraph& g) {
  auto cut = find_nontrivial_3_cut(g);
  SevenPackings sp;
  if (!cut) {
    sp = base_case(g);
  } else {
    const VertexSet& a1 = *cut;
    VertexSet a2;
    for (VertexId v : g.vertices()) {
      if (!a1.contains(v)) a2.insert(v);
    }
    const EdgeSet cut_edges = edge_cut(g, a1);
    require(cut_edges.size() == 3, Errc::internal, "split cut is not a 3-edge-cut");
    const std::array<EdgeId, 3> f{*cut_edges.begin(), *std::next(cut_edges.begin()), *cut_edges.rbegin()};
    const VertexId label{g.max_vertex_id().value + 1};
    // Side i keeps A_i and contracts the other side to `label`.
    const Multigraph g1 = shrink(g, a2, label);
    const Multigraph g2 = shrink(g, a1, label);
    SevenPackings s1 = build(g1);
    SevenPackings s2 = build(g2);
    const auto o1 = relabel(s1, label, f);
    const auto o2 = relabel(s2, label, f);
    sp.graph = g;
    sp.splits = 1 + s1.splits + s2.splits;
    for (int k = 0; k < 7; ++k) {
      EdgeSet es = s1.packings[o1[k]].edge_set();
      const EdgeSet e2 = s2.packings[o2[k]].edge_set();
      es.insert(e2.begin(), e2.end());
      sp.packings[k] = packing_from_edges(g, es);
    }
  }
  sp.graph = g;
  require(check_seven_packings(sp), Errc::internal, "seven cycle packings failed their postcondition");
  return sp;
}

}  // namespace

SevenPackings seven_cycle_packings(const Multigraph& g) {
  require(is_cubic(g), Errc::precondition, "seven cycle packings need a cubic graph");
  require(g.num_vertices() >= 2 && is_k_edge_connected(g, 3), Errc::precondition,
          "seven cycle packings need a 3-edge-connected graph");
  return build(g);
}

}  // namespace frank
