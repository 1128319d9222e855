// SPDX-License-Identifier: Apache-2.0
// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frank/cli.hpp"
#include "frank/connectivity.hpp"
#include "frank/error.hpp"
#include "frank/eulerian.hpp"
#include "frank/exact.hpp"
#include "frank/named_graphs.hpp"
#include "frank/pipelines.hpp"
#include "frank/reduction.hpp"
#include "frank/seven_packings.hpp"
#include "frank/structures.hpp"
#include "oracles.hpp"

using namespace frank;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Records the first failure and keeps going so the detail names it.
struct Check {
  Verdict v;
  void expect(bool cond, const std::string& what) {
    if (!cond && v.pass) {
      v.pass = false;
      v.detail = what;
    }
  }
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GraphPtr share(const Multigraph& g) { return std::make_shared<const Multigraph>(g); }

std::vector<std::string> cubic_corpus() {
  std::vector<std::string> out;
  for (const auto& name : corpus_names()) {
    if (is_cubic(named_graph(name))) out.push_back(name);
  }
  return out;
}

int run_cli_capture(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  out = o.str() + e.str();
  return code;
}

SolveLimits wide_limits() {
  SolveLimits l;
  l.max_enum_edges = 32;
  l.time_budget_s = 600;
  l.node_budget = 1L << 40;
  return l;
}

Verdict c1_petersen_exact() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const Multigraph g = named_graph("petersen");
  const FrankResult r = frank_number_exact(g);
  const double dt = since(t0);
  c.expect(r.value == 3, "exact value " + std::to_string(r.value) + " != 3");
  c.expect(verify_certificate(g, r.certificate).ok, "certificate does not verify");
  c.expect(r.certificate.orientations.size() == 3, "certificate size differs from 3");
  c.expect(dt < 60.0, "took " + std::to_string(dt) + " s");
  std::string out;
  const int code = run_cli_capture({"frank", "frank", "--exact", "corpus:petersen"}, out);
  c.expect(code == 0 && out.find("f = 3") != std::string::npos, "CLI did not report f = 3");
  if (c.v.pass) c.v.detail = "f(Petersen) = 3, certificate verified, " + std::to_string(dt) + " s";
  return c.v;
}

Verdict c2_lower_bounds() {
  Check c;
  std::string seen;
  for (const auto& name : cubic_corpus()) {
    const Multigraph g = named_graph(name);
    c.expect(frank_lower_bound(g) == 2, name + ": lower bound is not 2");
    const FrankResult r = frank_number_exact(g, wide_limits());
    c.expect(r.value >= 2, name + ": exact value below 2");
    c.expect(verify_certificate(g, r.certificate).ok, name + ": certificate does not verify");
    seen += " " + name + "=" + std::to_string(r.value);
  }
  const Multigraph k5 = named_graph("k5");
  const FrankResult r = frank_number_exact(k5);
  c.expect(r.value == 1, "K5 exact value is not 1");
  c.expect(r.certificate.orientations.size() == 1 && is_k_arc_connected(r.certificate.orientations[0], 2),
           "K5 orientation is not 2-arc-connected");
  c.expect(verify_certificate(k5, r.certificate).ok, "K5 certificate does not verify");
  if (c.v.pass) c.v.detail = "cubic:" + seen + "; K5=1 (2-arc-connected)";
  return c.v;
}

Verdict c3_esse4() {
  Check c;
  std::string seen;
  for (const std::string name : {"petersen", "k4", "w4"}) {
    const Multigraph g = named_graph(name);
    const auto t0 = std::chrono::steady_clock::now();
    const PipelineReport r = certify_esse4(g);
    const double dt = since(t0);
    c.expect(r.certificate.orientations.size() <= 3, name + ": more than 3 orientations");
    c.expect(verify_certificate(g, r.certificate).ok, name + ": certificate does not verify");
    c.expect(dt < 30.0, name + ": took " + std::to_string(dt) + " s");
    seen += " " + name + "=" + std::to_string(r.certificate.orientations.size());
  }
  c.expect(!is_cubic(named_graph("w4")), "W4 should exercise the non-cubic path");
  if (c.v.pass) c.v.detail = "orientations:" + seen;
  return c.v;
}

Verdict c4_color3() {
  Check c;
  for (const std::string name : {"k4", "k33", "prism3"}) {
    const Multigraph g = named_graph(name);
    const PipelineReport r = certify_color3(g);
    c.expect(r.certificate.orientations.size() <= 3, name + ": more than 3 orientations");
    c.expect(verify_certificate(g, r.certificate).ok, name + ": certificate does not verify");
  }
  bool refused = false;
  try {
    certify_color3(named_graph("petersen"));
  } catch (const Error& e) {
    refused = e.code() == Errc::not_colorable;
  }
  c.expect(refused, "Petersen was not refused as not 3-edge-colorable");
  c.expect(!oracle::three_edge_colorable(named_graph("petersen")), "oracle finds a Petersen colouring");
  if (c.v.pass) c.v.detail = "K4, K3,3, prism3 certified with 3; Petersen refused";
  return c.v;
}

std::vector<std::string> small_cubic_3ec() {
  std::vector<std::string> out;
  for (const auto& name : cubic_corpus()) {
    const Multigraph g = named_graph(name);
    if (g.num_vertices() <= 14 && is_k_edge_connected(g, 3)) out.push_back(name);
  }
  return out;
}

Verdict c5_seven_packings() {
  Check c;
  int splits = 0;
  std::string seen;
  for (const auto& name : small_cubic_3ec()) {
    const Multigraph g = named_graph(name);
    SevenPackings sp = seven_cycle_packings(g);
    splits += sp.splits;
    seen += " " + name;
    // Independent recount: membership and special sets from the raw packings.
    std::map<EdgeId, int> count;
    EdgeSet special_somewhere;
    for (int k = 0; k < 7; ++k) {
      c.expect(is_valid_packing(g, sp.packings[k]), name + ": packing " + std::to_string(k) + " invalid");
      const EdgeSet pe = sp.packings[k].edge_set();
      for (EdgeId e : pe) ++count[e];
      const EdgeSet sk = oracle::special_set(g, pe);
      c.expect(sk == sp.special[k], name + ": special set " + std::to_string(k) + " differs from brute force");
      special_somewhere.insert(sk.begin(), sk.end());
    }
    for (const auto& e : g.edges()) {
      c.expect(count[e.id] == 4, name + ": edge " + std::to_string(e.id.value) + " not in exactly 4 packings");
      c.expect(special_somewhere.contains(e.id), name + ": edge " + std::to_string(e.id.value) + " never special");
    }
  }
  c.expect(splits > 0, "no corpus graph exercised the 3-edge-cut recursion");
  if (c.v.pass) c.v.detail = "graphs:" + seen + "; 3-cut splits used: " + std::to_string(splits);
  return c.v;
}

Verdict c6_upper7() {
  Check c;
  std::string seen;
  for (const auto& name : small_cubic_3ec()) {
    const Multigraph g = named_graph(name);
    const PipelineReport r = certify_upper7(g);
    c.expect(r.certificate.orientations.size() <= 7, name + ": more than 7 orientations");
    c.expect(verify_certificate(g, r.certificate).ok, name + ": certificate does not verify");
    if (g.num_edges() <= 22) {
      const int f = frank_number_exact(g).value;
      c.expect(f <= 7, name + ": exact value above 7");
      seen += " " + name + "(f=" + std::to_string(f) + ")";
    } else {
      seen += " " + name;
    }
  }
  if (c.v.pass) c.v.detail = "at most 7 verified orientations on:" + seen;
  return c.v;
}

Verdict c7_bf5() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const Multigraph g = named_graph("petersen");
  const DoubleCover dc = berge_fulkerson_cover(g);
  c.expect(dc.outcome == Outcome::yes && dc.matchings.size() == 6, "no six-matching double cover found");
  std::map<EdgeId, int> times;
  for (const auto& m : dc.matchings) {
    std::map<VertexId, int> deg;
    for (EdgeId e : m) {
      ++times[e];
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    for (VertexId v : g.vertices()) c.expect(deg[v] == 1, "a cover member is not a perfect matching");
  }
  for (const auto& e : g.edges()) c.expect(times[e.id] == 2, "an edge is not covered exactly twice");
  const PipelineReport r = certify_bf5(g);
  c.expect(r.certificate.orientations.size() <= 5, "more than 5 orientations");
  c.expect(verify_certificate(g, r.certificate).ok, "certificate does not verify");
  const double dt = since(t0);
  c.expect(dt < 60.0, "took " + std::to_string(dt) + " s");
  if (c.v.pass) c.v.detail = "double cover found, " + std::to_string(r.certificate.orientations.size()) +
                             " verified orientations, " + std::to_string(dt) + " s";
  return c.v;
}

const char* kExample = "x1 x2 x3\nx1 x2 x4\nx1 x3 x4\n";

Verdict c8_gadget_structure() {
  Check c;
  const GadgetInstance inst = build_gadget(parse_formula(kExample));
  c.expect(inst.g.num_vertices() == 30, "vertex count is not 30");
  c.expect(inst.g.num_edges() == 45, "edge count is not 45");
  c.expect(is_cubic(inst.g), "gadget is not cubic");
  c.expect(edge_connectivity(inst.g) == 3, "gadget is not 3-edge-connected");
  std::vector<std::size_t> lengths;
  for (const auto& kc : inst.variable_cycles) lengths.push_back(kc.edges.size());
  c.expect(lengths == std::vector<std::size_t>{6, 4, 4, 4}, "variable cycle lengths differ from 6,4,4,4");
  c.expect(inst.clause_cycle.size() == 9, "clause cycle length is not 9");
  std::string out;
  const int code = run_cli_capture({"frank", "reduce", "nae3sat", oracle::fixture("example.cnf3")}, out);
  c.expect(code == 0 && out.find("30 vertices, 45 edges") != std::string::npos, "CLI reduce summary differs");
  if (c.v.pass) c.v.detail = "30 vertices, 45 edges, cubic, edge connectivity 3";
  return c.v;
}

Verdict c9_gadget_semantics() {
  Check c;
  const NaeFormula f = parse_formula(kExample);
  const GadgetInstance inst = build_gadget(f);
  int feasible = 0;
  for (int mask = 0; mask < 16; ++mask) {
    Assignment a(4);
    for (int v = 0; v < 4; ++v) a[v] = (mask >> v) & 1;
    if (!nae_feasible(f, a)) {
      bool refused = false;
      try {
        assignment_to_orientation(inst, a);
      } catch (const Error& e) {
        refused = e.code() == Errc::precondition;
      }
      c.expect(refused, "infeasible assignment " + std::to_string(mask) + " was not refused");
      continue;
    }
    ++feasible;
    const Orientation d = assignment_to_orientation(inst, a);
    c.expect(oracle::deletable(d, inst.s), "forward map of assignment " + std::to_string(mask) + " fails S");
    const Assignment back = orientation_to_assignment(inst, d);
    c.expect(back == a, "round trip changed assignment " + std::to_string(mask));
  }
  c.expect(feasible > 0, "example has no feasible assignment");
  SolveLimits limits;
  limits.time_budget_s = 120;
  const DecideResult r = deletability_decide(inst.g, inst.s, limits);
  c.expect(r.outcome != Outcome::no, "solver claims S is not deletable on a feasible instance");
  std::string solver = to_string(r.outcome);
  if (r.outcome == Outcome::yes) {
    const Assignment a = orientation_to_assignment(inst, *r.witness);
    c.expect(nae_feasible(f, a), "assignment read off the solver witness is infeasible");
    solver += ", witness maps to a feasible assignment";
  }
  if (c.v.pass) c.v.detail = std::to_string(feasible) + " feasible assignments round-trip; solver: " + solver;
  return c.v;
}

Verdict c10_exhaustive() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  long graphs = 0, orientations = 0, checks = 0, ec3 = 0, cut_pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    oracle::for_each_multigraph(n, 9, true, [&](const Multigraph& g) {
      ++graphs;
      if (!c.v.pass) return;
      const GraphPtr gp = share(g);
      const int m = static_cast<int>(g.num_edges());
      // Connectivity against brute-force minimum cuts.
      if (n >= 2) {
        for (int s = 0; s < n; ++s) {
          for (int t = s + 1; t < n; ++t) {
            c.expect(local_edge_connectivity(g, g.vertex_at(s), g.vertex_at(t)) == oracle::local_min_cut(g, s, t),
                     "local connectivity mismatch on " + oracle::describe(g));
          }
        }
        const int lambda = oracle::global_min_cut(g);
        c.expect(edge_connectivity(g) == lambda, "edge connectivity mismatch on " + oracle::describe(g));
        c.expect(is_k_edge_connected(g, 3) == (lambda >= 3), "3-edge-connectivity mismatch on " + oracle::describe(g));
        if (lambda >= 3) {
          ++ec3;
          const auto cuts = oracle::three_cuts(g);
          const std::uint32_t all = (1U << n) - 1;
          for (std::size_t i = 0; i < cuts.size(); ++i) {
            for (std::size_t j = i + 1; j < cuts.size(); ++j) {
              ++cut_pairs;
              c.expect(!oracle::crossing(cuts[i], cuts[j], all), "crossing 3-edge-cuts in " + oracle::describe(g));
            }
          }
        }
      }
      // Deletability against the cut characterization, over every orientation.
      std::uint64_t proper = 0;
      for (int i = 0; i < m; ++i) {
        if (!g.edge_at(i).is_loop()) proper |= 1ULL << i;
      }
      std::uint64_t sub = 0;
      do {
        ++orientations;
        const Orientation d = Orientation::from_mask(gp, sub);
        std::vector<EdgeSet> sets{{}, g.edge_set()};
        for (const auto& e : g.edges()) sets.push_back({e.id});
        EdgeSet del;
        for (const auto& e : g.edges()) {
          if (oracle::deletable(d, {e.id})) del.insert(e.id);
        }
        sets.push_back(del);
        for (const auto& f : sets) {
          ++checks;
          const bool lib = is_deletable_set(d, f);
          const bool cuts = cut_characterization_check(d, f);
          const bool brute = oracle::deletable(d, f);
          if (lib != cuts || lib != brute) {
            c.expect(false, "deletability mismatch on " + oracle::describe(g));
            return;
          }
        }
        sub = (sub - proper) & proper;
      } while (sub != 0);
    });
  }
  const double dt = since(t0);
  c.expect(dt < 600.0, "took " + std::to_string(dt) + " s");
  if (c.v.pass) {
    c.v.detail = std::to_string(graphs) + " multigraphs (" + std::to_string(ec3) + " 3-edge-connected, " +
                 std::to_string(cut_pairs) + " 3-cut pairs), " + std::to_string(orientations) + " orientations, " +
                 std::to_string(checks) + " set checks, " + std::to_string(dt) + " s";
  }
  return c.v;
}

Verdict c11_constrained_euler() {
  Check c;
  // Eulerian multigraphs with at least one constrainable vertex, 100 spread evenly.
  std::vector<Multigraph> pool;
  for (int n = 2; n <= 6; ++n) {
    oracle::for_each_multigraph(n, 8, true, [&](const Multigraph& g) {
      if (!is_eulerian(g) || g.num_edges() == 0) return;
      for (VertexId v : g.vertices()) {
        int proper = 0;
        for (const auto& inc : g.incident(g.vertex_index(v))) proper += !g.edge_at(inc.edge).is_loop();
        if (proper >= 2) {
          pool.push_back(g);
          return;
        }
      }
    });
  }
  c.expect(pool.size() >= 100, "fewer than 100 candidate graphs");
  int constrained = 0;
  for (int k = 0; k < 100 && c.v.pass; ++k) {
    const Multigraph& g = pool[k * pool.size() / 100];
    EulerConstraints cons;
    for (int vi = 0; vi < static_cast<int>(g.num_vertices()); ++vi) {
      std::vector<EdgeId> es;
      for (const auto& inc : g.incident(vi)) {
        const Edge& e = g.edge_at(inc.edge);
        if (!e.is_loop()) es.push_back(e.id);
      }
      if (es.size() < 2) continue;
      const std::size_t j = (vi + k) % es.size();
      cons[g.vertex_at(vi)] = {es[j], es[(j + 1) % es.size()]};
      ++constrained;
    }
    const Orientation d = eulerian_orientation_constrained(g, cons);
    std::vector<int> in(g.num_vertices(), 0), out(g.num_vertices(), 0);
    for (const auto& a : oracle::arcs_of(d)) {
      ++out[a.tail];
      ++in[a.head];
    }
    c.expect(in == out, "in-degree differs from out-degree on " + oracle::describe(g));
    for (const auto& [v, pair] : cons) {
      const int entering = (d.head(pair.first) == v) + (d.head(pair.second) == v);
      c.expect(entering == 1, "constraint at vertex " + std::to_string(v.value) + " violated on " + oracle::describe(g));
    }
  }
  if (c.v.pass) c.v.detail = "100 graphs, " + std::to_string(constrained) + " constrained vertices, no violations";
  return c.v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"exact Frank number of the Petersen graph", c1_petersen_exact},
      {"lower bounds on cubic graphs and K5", c2_lower_bounds},
      {"three orientations for essentially 4-edge-connected graphs", c3_esse4},
      {"three orientations from 3-edge-colorings", c4_color3},
      {"seven cycle packings", c5_seven_packings},
      {"seven orientations for 3-edge-connected graphs", c6_upper7},
      {"five orientations from a double cover", c7_bf5},
      {"gadget structure", c8_gadget_structure},
      {"gadget semantics", c9_gadget_semantics},
      {"exhaustive oracle equivalence", c10_exhaustive},
      {"constrained Eulerian orientations", c11_constrained_euler},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.contains(id)) continue;
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s %2d  %s: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                v.detail.c_str(), since(t0));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
