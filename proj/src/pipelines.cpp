// SPDX-License-Identifier: Apache-2.0
#include "frank/pipelines.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>

#include "frank/connectivity.hpp"
#include "frank/cubic_extension.hpp"
#include "frank/error.hpp"
#include "frank/seven_packings.hpp"

namespace frank {

namespace {

GraphPtr share(const Multigraph& g) { return std::make_shared<const Multigraph>(g); }

std::string vname(VertexId v) { return std::to_string(v.value); }

EdgeSet complement_of(const Multigraph& g, const EdgeSet& f) {
  EdgeSet out;
  for (const auto& e : g.edges()) {
    if (!f.contains(e.id)) out.insert(e.id);
  }
  return out;
}

// Tail in g of an edge directed in a quotient: the endpoint mapped to the quotient tail.
VertexId lifted_tail(const Edge& e, const std::map<VertexId, VertexId>& vmap, VertexId quotient_tail) {
  return vmap.at(e.u) == quotient_tail ? e.u : e.v;
}

// Orientation of g from one of g/f: kept edges follow the quotient, edges that
// became loops run u -> v, and contracted edges are set by the caller.
std::map<EdgeId, VertexId> lift_tails(const Multigraph& g, const ContractionResult& c, const Orientation& dq) {
  std::map<EdgeId, VertexId> tails;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    switch (c.edge_status.at(e.id)) {
      case EdgeFate::kept:
        tails[e.id] = lifted_tail(e, c.vertex_map, dq.tail(e.id));
        break;
      case EdgeFate::became_loop:
      case EdgeFate::contracted:
        tails[e.id] = e.u;
        break;
    }
  }
  return tails;
}

void check_matching(const Multigraph& g, const EdgeSet& m) {
  VertexSet seen;
  for (EdgeId e : m) {
    const Edge& edge = g.edge(e);
    require(!edge.is_loop(), Errc::invalid_argument, "matching contains a loop");
    require(seen.insert(edge.u).second && seen.insert(edge.v).second, Errc::invalid_argument,
            "edge set is not a matching");
  }
}

Orientation matching_deletable_impl(const Multigraph& g, const EdgeSet& m, const CyclePacking& p,
                                    const PipelineLimits& limits) {
  const GraphPtr gp = share(g);
  const EdgeSet rest = complement_of(g, m);
  const Multigraph gm = keep_edges(g, rest);
  const EdgeSet forest = bridges(gm);
  EdgeSet inner;  // edges of the 2-edge-connected pieces of g - m
  for (EdgeId e : rest) {
    if (!forest.contains(e)) inner.insert(e);
  }
  for (EdgeId e : p.edge_set()) {
    require(inner.contains(e), Errc::invalid_argument, "packing edge outside the 2-edge-connected part of g - m");
  }

  // Pieces: strong orientation of (pieces)/p lifted with the cycles as circuits.
  const Multigraph pieces = keep_edges(g, inner);
  const ContractionResult pc = contract(pieces, p.edge_set());
  const Orientation pd = dfs_strong_orientation(pc.quotient);
  std::map<EdgeId, VertexId> piece_tails = lift_tails(pieces, pc, pd);

  // Quotient by the pieces; its non-matching edges form a forest.
  const ContractionResult qc = contract(g, inner);
  const Multigraph& q = qc.quotient;
  EulerConstraints cons;
  for (VertexId x : q.vertices()) {
    if (degree(q, x) != 3) continue;
    std::vector<EdgeId> choice;
    for (const auto& inc : q.incident(q.vertex_index(x))) {
      const Edge& e = q.edge_at(inc.edge);
      if (!e.is_loop() && !m.contains(e.id)) choice.push_back(e.id);
    }
    std::sort(choice.begin(), choice.end());
    if (choice.size() >= 2) cons[x] = {choice[0], choice[1]};
  }

  const int n = static_cast<int>(q.num_vertices());
  std::vector<int> odd;
  for (int v = 0; v < n; ++v) {
    if (degree(q, q.vertex_at(v)) % 2) odd.push_back(v);
  }
  const auto lambda = all_pairs_connectivity(q);

  auto combine = [&](const Orientation& dh) {
    std::map<EdgeId, VertexId> tails = piece_tails;
    for (const auto& e : g.edges()) {
      if (e.is_loop() || inner.contains(e.id)) continue;
      const int qi = q.edge_index(e.id);
      if (q.edge_at(qi).is_loop()) {
        tails[e.id] = e.u;
      } else {
        tails[e.id] = lifted_tail(e, qc.vertex_map, q.vertex_at(dh.tail_index(qi)));
      }
    }
    return orient_cycles_as_circuits(Orientation::from_tails(gp, tails), p);
  };

  long tried = 0;
  std::vector<char> paired(n, 0);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::optional<Orientation> found;
  std::function<void()> search = [&]() {
    if (found || tried >= limits.pairing_budget) return;
    auto first = std::find_if(odd.begin(), odd.end(), [&](int v) { return !paired[v]; });
    if (first == odd.end()) {
      ++tried;
      // Added edges get ids above q's, so dense indices of q's edges are unchanged.
      const Multigraph h = add_pairing(q, pairs);
      Orientation dh = eulerian_orientation_constrained(h, cons);
      Orientation d = combine(dh);
      if (is_deletable_set(d, m)) found = d;
      return;
    }
    const int a = *first;
    std::vector<int> partners;
    for (int b : odd) {
      if (b != a && !paired[b]) partners.push_back(b);
    }
    std::stable_sort(partners.begin(), partners.end(), [&](int x, int y) { return lambda[a][x] > lambda[a][y]; });
    paired[a] = 1;
    for (int b : partners) {
      paired[b] = 1;
      pairs.push_back({q.vertex_at(a), q.vertex_at(b)});
      search();
      pairs.pop_back();
      paired[b] = 0;
      if (found) break;
    }
    paired[a] = 0;
  };
  search();
  if (found) return *found;

  const DecideResult r = deletability_decide(g, m, limits.fallback, circuit_ties(p));
  if (r.outcome == Outcome::yes) return *r.witness;
  require(r.outcome != Outcome::no, Errc::internal, "no orientation makes the matching deletable");
  fail(Errc::indeterminate, "matching orientation search exhausted its budget");
}

// ---------------------------------------------------------------------------
// Certificate plumbing.

struct Built {
  std::vector<Orientation> orientations;
  std::map<EdgeId, int> cover;
  std::vector<std::string> provenance;
};

using Certifier = std::function<Built(const Multigraph&)>;

Orientation transfer(const GraphPtr& target, const Orientation& d) {
  std::map<EdgeId, VertexId> tails;
  for (const auto& e : target->edges()) {
    if (!e.is_loop()) tails[e.id] = d.tail(e.id);
  }
  return Orientation::from_tails(target, tails);
}

// Loops are deletable in any strongly connected orientation: certify the
// loopless graph and cover every loop by the first orientation.
Built strip_loops(const Multigraph& g, const Certifier& inner) {
  const Multigraph g0 = without_loops(g);
  Built b;
  if (g0.num_edges() == 0) {
    b.orientations.push_back(Orientation(g));
    b.provenance.push_back("trivial orientation of a graph without proper edges");
  } else if (g0.num_edges() == g.num_edges()) {
    return inner(g);
  } else {
    b = inner(g0);
    const GraphPtr gp = share(g);
    for (auto& d : b.orientations) d = transfer(gp, d);
  }
  for (const auto& e : g.edges()) {
    if (e.is_loop()) b.cover[e.id] = 0;
  }
  return b;
}

// Pads to `k` orientations by repeating the first one.
void pad(Built& b, std::size_t k) {
  while (b.orientations.size() < k) {
    b.orientations.push_back(b.orientations.front());
    b.provenance.push_back(b.provenance.front() + " (repeated)");
  }
}

// Splits at a cut vertex, certifies both sides and merges them index by index.
Built split_at_cut_vertex(const Multigraph& g, VertexId v, const Certifier& self) {
  const auto comps = connected_components(remove_vertex(g, v));
  VertexSet s1 = comps[0], s2;
  for (std::size_t i = 1; i < comps.size(); ++i) s2.insert(comps[i].begin(), comps[i].end());
  s1.insert(v);
  s2.insert(v);
  Built b1 = self(induced_subgraph(g, s1));
  Built b2 = self(induced_subgraph(g, s2));
  const std::size_t k = std::max(b1.orientations.size(), b2.orientations.size());
  pad(b1, k);
  pad(b2, k);
  const GraphPtr gp = share(g);
  Built out;
  for (std::size_t j = 0; j < k; ++j) {
    std::map<EdgeId, VertexId> tails = b1.orientations[j].tails();
    for (const auto& [e, t] : b2.orientations[j].tails()) tails[e] = t;
    out.orientations.push_back(Orientation::from_tails(gp, tails));
    out.provenance.push_back("union at cut vertex " + vname(v) + " of [" + b1.provenance[j] + "] and [" +
                             b2.provenance[j] + "]");
  }
  out.cover = b1.cover;
  out.cover.insert(b2.cover.begin(), b2.cover.end());
  return out;
}

// Certifies the cubic extension and contracts the expansion cycles back.
Built through_extension(const Multigraph& g, const Certifier& cubic) {
  const CubicExtension ext = cubic_extension(g);
  Built h = cubic(ext.host);
  const GraphPtr gp = share(g);
  Built out;
  for (std::size_t j = 0; j < h.orientations.size(); ++j) {
    out.orientations.push_back(project_orientation(ext, gp, h.orientations[j]));
    out.provenance.push_back("contraction of the cubic extension: " + h.provenance[j]);
  }
  for (const auto& e : g.edges()) out.cover[e.id] = h.cover.at(e.id);
  return out;
}

std::optional<VertexId> first_cut_vertex(const Multigraph& g) {
  const VertexSet cv = cut_vertices(g);
  if (cv.empty()) return std::nullopt;
  return *cv.begin();
}

PipelineReport finish(const Multigraph& g, std::string name, std::vector<std::string> pre, Built b) {
  PipelineReport r;
  r.pipeline = std::move(name);
  r.preconditions = std::move(pre);
  r.certificate.orientations = std::move(b.orientations);
  r.certificate.cover = std::move(b.cover);
  r.provenance = std::move(b.provenance);
  const CertificateCheck chk = verify_certificate(g, r.certificate);
  require(chk.ok, Errc::internal, r.pipeline + ": produced certificate fails verification");
  return r;
}

// ---------------------------------------------------------------------------
// Cubic constructions.

Built cubic_upper7(const Multigraph& g, const PipelineLimits& limits) {
  const SevenPackings sp = seven_cycle_packings(g);
  Built b;
  for (int k = 0; k < 7; ++k) {
    b.orientations.push_back(orient_special_set_deletable(g, sp.packings[k], limits));
    b.provenance.push_back("special set of cycle packing " + std::to_string(k) + " (" +
                           std::to_string(sp.packings[k].cycles.size()) + " cycles, " +
                           std::to_string(sp.splits) + " cut splits)");
  }
  for (const auto& [e, k] : sp.special_witness) b.cover[e] = k;
  return b;
}

// One orientation per perfect matching whose complement is a packing with
// the matching inside its special set.
Built from_matchings(const Multigraph& g, const std::vector<EdgeSet>& ms, const std::string& what,
                     const PipelineLimits& limits) {
  Built b;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const CyclePacking p = packing_from_edges(g, complement_of(g, ms[i]));
    b.orientations.push_back(orient_special_set_deletable(g, p, limits));
    b.provenance.push_back(what + " " + std::to_string(i) + " deletable via its complementary cycles");
    for (EdgeId e : ms[i]) {
      if (!b.cover.contains(e)) b.cover[e] = static_cast<int>(i);
    }
  }
  return b;
}

Built cubic_esse4(const Multigraph& g, const PipelineLimits& limits) {
  const auto m1 = perfect_matching(g);
  require(m1.has_value(), Errc::internal, "cubic 3-edge-connected graph without a perfect matching");
  const CyclePacking c = packing_from_edges(g, complement_of(g, *m1));
  Built b;
  const Orientation d1 = matching_deletable_impl(g, *m1, c, limits);
  EdgeSet paths = complement_of(g, *m1);
  for (EdgeId e : *m1) b.cover[e] = 0;
  for (const auto& cyc : c.cycles) {
    const EdgeId e = find_deletable_arc_on_circuit(d1, cyc);
    b.cover[e] = 0;
    paths.erase(e);
  }
  const auto [m2, m3] = paths_to_two_matchings(g, paths);
  b.orientations.push_back(d1);
  b.provenance.push_back("perfect matching and one arc per complementary circuit deletable");
  b.orientations.push_back(matching_deletable_impl(g, m2, {}, limits));
  b.provenance.push_back("first matching of the remaining paths deletable");
  b.orientations.push_back(matching_deletable_impl(g, m3, {}, limits));
  b.provenance.push_back("second matching of the remaining paths deletable");
  for (EdgeId e : m2) b.cover[e] = 1;
  for (EdgeId e : m3) b.cover[e] = 2;
  return b;
}

// Moves the orientation covering e0 to index 0.
void bring_to_front(Built& b, EdgeId e0) {
  const int j = b.cover.at(e0);
  if (j == 0) return;
  std::swap(b.orientations[0], b.orientations[j]);
  std::swap(b.provenance[0], b.provenance[j]);
  for (auto& [e, k] : b.cover) {
    if (k == j) {
      k = 0;
    } else if (k == 0) {
      k = j;
    }
  }
}

// g - v is connected with a bridge e0 = u1u2 separating A1 from A2. Side i
// contracts A_(3-i) + v into v, e0 is brought to index 0 on both sides, side
// two is reversed where e0 disagrees, and the sides are merged.
Built split_at_bridge(const Multigraph& g, VertexId v, EdgeId e0, const Certifier& self) {
  const Multigraph gv = remove_vertex(g, v);
  const auto comps = connected_components(remove_edges(gv, {e0}));
  require(comps.size() == 2, Errc::internal, "bridge split expects two sides");
  VertexSet a1 = comps[0], a2 = comps[1];
  VertexSet x1 = a2, x2 = a1;  // contracted on side 1 / side 2
  x1.insert(v);
  x2.insert(v);
  const Multigraph g1 = shrink(g, x1, v);
  const Multigraph g2 = shrink(g, x2, v);
  Built b1 = self(g1);
  Built b2 = self(g2);
  bring_to_front(b1, e0);
  bring_to_front(b2, e0);
  const std::size_t k = std::max(b1.orientations.size(), b2.orientations.size());
  pad(b1, k);
  pad(b2, k);

  const Edge& e0e = g.edge(e0);
  // Actual tail of an edge of side i, given the tail seen on that side.
  auto actual = [&](const Edge& e, const VertexSet& kept, VertexId side_tail) {
    if (side_tail != v) return side_tail;
    return kept.contains(e.u) ? e.v : e.u;
  };
  const GraphPtr gp = share(g);
  Built out;
  for (std::size_t j = 0; j < k; ++j) {
    const Orientation& d1 = b1.orientations[j];
    Orientation d2 = b2.orientations[j];
    const VertexId t1 = actual(e0e, a1, d1.tail(e0));
    if (actual(e0e, a2, d2.tail(e0)) != t1) d2 = reverse(d2);
    std::map<EdgeId, VertexId> tails;
    for (const auto& e : g1.edges()) tails[e.id] = actual(g.edge(e.id), a1, d1.tail(e.id));
    for (const auto& e : g2.edges()) {
      if (e.id != e0) tails[e.id] = actual(g.edge(e.id), a2, d2.tail(e.id));
    }
    out.orientations.push_back(Orientation::from_tails(gp, tails));
    out.provenance.push_back("merge across bridge " + std::to_string(e0.value) + " of G - " + vname(v) + ": [" +
                             b1.provenance[j] + "] and [" + b2.provenance[j] + "]");
  }
  out.cover = b1.cover;
  for (const auto& [e, j] : b2.cover) {
    if (e != e0) out.cover[e] = j;
  }
  out.cover[e0] = 0;
  return out;
}

Built esse4_general(const Multigraph& g, const PipelineLimits& limits) {
  const Certifier self = [&](const Multigraph& h) { return esse4_general(h, limits); };
  if (auto v = first_cut_vertex(g)) return split_at_cut_vertex(g, *v, self);
  for (VertexId v : g.vertices()) {
    const EdgeSet br = bridges(remove_vertex(g, v));
    if (!br.empty()) return split_at_bridge(g, v, *br.begin(), self);
  }
  const Certifier cubic = [&](const Multigraph& h) { return cubic_esse4(h, limits); };
  if (is_cubic(g)) return cubic(g);
  return through_extension(g, cubic);
}

Built upper7_general(const Multigraph& g, const PipelineLimits& limits) {
  const Certifier self = [&](const Multigraph& h) { return upper7_general(h, limits); };
  if (auto v = first_cut_vertex(g)) return split_at_cut_vertex(g, *v, self);
  const Certifier cubic = [&](const Multigraph& h) { return cubic_upper7(h, limits); };
  if (is_cubic(g)) return cubic(g);
  return through_extension(g, cubic);
}

void require_3ec(const Multigraph& g, std::vector<std::string>& pre) {
  require(g.num_vertices() >= 1, Errc::precondition, "graph is empty");
  require(is_k_edge_connected(g, 3), Errc::precondition, "graph is not 3-edge-connected");
  pre.push_back("3-edge-connected");
}

void require_cubic(const Multigraph& g, std::vector<std::string>& pre) {
  require(is_cubic(g), Errc::precondition, "graph is not cubic");
  pre.push_back("cubic");
}

}  // namespace

Orientation orient_special_set_deletable(const Multigraph& g, const CyclePacking& p, const PipelineLimits& limits) {
  require(is_valid_packing(g, p), Errc::invalid_argument, "not a cycle packing of the graph");
  const ContractionResult c = contract(g, p.edge_set());
  const Orientation dq = well_balanced_orientation(c.quotient, limits.well_balanced);
  const Orientation d = orient_cycles_as_circuits(Orientation::from_tails(share(g), lift_tails(g, c, dq)), p);
  require(is_deletable_set(d, special_set(g, p)), Errc::internal, "special set is not deletable in the lift");
  return d;
}

Orientation orient_matching_deletable(const Multigraph& g, const EdgeSet& m, const CyclePacking& p,
                                      const PipelineLimits& limits) {
  require(is_essentially_4ec(g), Errc::precondition, "graph is not essentially 4-edge-connected");
  check_matching(g, m);
  require(is_valid_packing(g, p), Errc::invalid_argument, "not a cycle packing of the graph");
  for (EdgeId e : p.edge_set()) {
    require(!m.contains(e), Errc::invalid_argument, "packing uses a matching edge");
  }
  return matching_deletable_impl(g, m, p, limits);
}

PipelineReport certify_upper7(const Multigraph& g, const PipelineLimits& limits) {
  std::vector<std::string> pre;
  require_3ec(g, pre);
  Built b = strip_loops(g, [&](const Multigraph& h) { return upper7_general(h, limits); });
  require(b.orientations.size() <= 7, Errc::internal, "upper7 produced more than 7 orientations");
  return finish(g, "upper7", pre, std::move(b));
}

PipelineReport certify_color3(const Multigraph& g, const PipelineLimits& limits) {
  std::vector<std::string> pre;
  require_3ec(g, pre);
  require_cubic(g, pre);
  const auto col = proper_3_edge_coloring(g);
  require(col.has_value(), Errc::not_colorable, "graph is not 3-edge-colorable");
  pre.push_back("3-edge-colorable");
  return finish(g, "color3", pre, from_matchings(g, {(*col)[0], (*col)[1], (*col)[2]}, "colour class", limits));
}

PipelineReport certify_bf5(const Multigraph& g, const PipelineLimits& limits) {
  std::vector<std::string> pre;
  require_3ec(g, pre);
  require_cubic(g, pre);
  const DoubleCover dc = berge_fulkerson_cover(g, limits.double_cover_budget);
  require(dc.outcome != Outcome::no, Errc::internal, "no six-matching double cover exists");
  require(dc.outcome == Outcome::yes, Errc::indeterminate, "double cover search exhausted its budget");
  pre.push_back("six-matching double cover found");
  const std::vector<EdgeSet> five(dc.matchings.begin(), dc.matchings.begin() + 5);
  return finish(g, "bf5", pre, from_matchings(g, five, "double cover matching", limits));
}

PipelineReport certify_esse4(const Multigraph& g, const PipelineLimits& limits) {
  std::vector<std::string> pre;
  require_3ec(g, pre);
  require(is_essentially_4ec(g), Errc::precondition, "graph is not essentially 4-edge-connected");
  pre.push_back("essentially 4-edge-connected");
  Built b = strip_loops(g, [&](const Multigraph& h) { return esse4_general(h, limits); });
  require(b.orientations.size() <= 3, Errc::internal, "esse4 produced more than 3 orientations");
  return finish(g, "esse4", pre, std::move(b));
}

}  // namespace frank
