// SPDX-License-Identifier: Apache-2.0
#include "frank/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

#include "frank/connectivity.hpp"
#include "frank/error.hpp"

namespace frank {

NaeFormula parse_formula(std::string_view text) {
  NaeFormula f;
  std::map<std::string, int> index;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    require(tokens.size() == 3, Errc::parse_error, where + "a clause needs exactly 3 variables");
    std::array<int, 3> c{};
    for (int k = 0; k < 3; ++k) {
      const std::string& t = tokens[k];
      require(t[0] != '-' && t[0] != '!' && t[0] != '~', Errc::parse_error, where + "negated variable " + t);
      auto [it, fresh] = index.try_emplace(t, static_cast<int>(f.variables.size()));
      if (fresh) f.variables.push_back(t);
      c[k] = it->second;
    }
    std::sort(c.begin(), c.end());
    require(c[0] != c[1] && c[1] != c[2], Errc::parse_error, where + "repeated variable in a clause");
    f.clauses.push_back(c);
  }
  return f;
}

std::string format_formula(const NaeFormula& f) {
  std::string out;
  for (const auto& c : f.clauses) {
    out += f.variables[c[0]] + " " + f.variables[c[1]] + " " + f.variables[c[2]] + "\n";
  }
  return out;
}

bool nae_feasible(const NaeFormula& f, const Assignment& a) {
  require(a.size() == f.variables.size(), Errc::invalid_argument, "assignment size does not match the formula");
  for (const auto& c : f.clauses) {
    const int trues = a[c[0]] + a[c[1]] + a[c[2]];
    if (trues == 0 || trues == 3) return false;
  }
  return true;
}

namespace {

// Keeps the listed clauses and the variables they use, renumbered in order.
NaeFormula restrict_to(const NaeFormula& f, const std::vector<int>& clause_ids) {
  std::vector<int> remap(f.variables.size(), -1);
  std::vector<char> used(f.variables.size(), 0);
  for (int ci : clause_ids) {
    for (int v : f.clauses[ci]) used[v] = 1;
  }
  NaeFormula out;
  for (std::size_t v = 0; v < f.variables.size(); ++v) {
    if (!used[v]) continue;
    remap[v] = static_cast<int>(out.variables.size());
    out.variables.push_back(f.variables[v]);
  }
  for (int ci : clause_ids) {
    const auto& c = f.clauses[ci];
    out.clauses.push_back({remap[c[0]], remap[c[1]], remap[c[2]]});
  }
  return out;
}

}  // namespace

NaeFormula preprocess(const NaeFormula& f) {
  std::vector<char> alive(f.clauses.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> count(f.variables.size(), 0), last(f.variables.size(), -1);
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
      if (!alive[ci]) continue;
      for (int v : f.clauses[ci]) {
        ++count[v];
        last[v] = static_cast<int>(ci);
      }
    }
    for (std::size_t v = 0; v < f.variables.size(); ++v) {
      if (count[v] == 1) {
        alive[last[v]] = 0;
        changed = true;
        break;
      }
    }
  }
  std::vector<int> keep;
  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    if (alive[ci]) keep.push_back(static_cast<int>(ci));
  }
  return restrict_to(f, keep);
}

std::vector<NaeFormula> decompose_connected(const NaeFormula& f) {
  const int n = static_cast<int>(f.variables.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& c : f.clauses) {
    for (int k = 1; k < 3; ++k) parent[find(c[k])] = find(c[0]);
  }
  std::map<int, int> part_of_root;  // root -> part index, in order of smallest variable
  std::vector<std::vector<int>> vars;
  for (int v = 0; v < n; ++v) {
    auto [it, fresh] = part_of_root.try_emplace(find(v), static_cast<int>(vars.size()));
    if (fresh) vars.emplace_back();
    vars[it->second].push_back(v);
  }
  std::vector<std::vector<int>> clauses(vars.size());
  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    clauses[part_of_root.at(find(f.clauses[ci][0]))].push_back(static_cast<int>(ci));
  }
  std::vector<NaeFormula> out;
  for (std::size_t p = 0; p < vars.size(); ++p) {
    if (clauses[p].empty()) {
      // A variable in no clause is a component of its own.
      NaeFormula lone;
      lone.variables.push_back(f.variables[vars[p][0]]);
      out.push_back(std::move(lone));
    } else {
      out.push_back(restrict_to(f, clauses[p]));
    }
  }
  return out;
}

std::optional<Assignment> nae_solve_bruteforce(const NaeFormula& f) {
  const int n = static_cast<int>(f.variables.size());
  require(n <= 24, Errc::too_large, "brute force handles at most 24 variables");
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    Assignment a(n);
    for (int v = 0; v < n; ++v) a[v] = (mask >> v) & 1U;
    if (nae_feasible(f, a)) return a;
  }
  return std::nullopt;
}

GadgetInstance build_gadget(const NaeFormula& f) {
  require(!f.clauses.empty(), Errc::precondition, "gadget needs at least one clause");
  require(decompose_connected(f).size() == 1, Errc::precondition, "formula is not connected");
  const int nv = static_cast<int>(f.variables.size());
  std::vector<std::vector<int>> occ(nv);  // variable -> clauses containing it, sorted
  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    for (int v : f.clauses[ci]) occ[v].push_back(static_cast<int>(ci));
  }
  for (int v = 0; v < nv; ++v) {
    require(occ[v].size() >= 2, Errc::precondition,
            "variable " + f.variables[v] + " occurs in fewer than 2 clauses (preprocess first)");
  }

  GadgetInstance inst;
  inst.formula = f;
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  int next_v = 0, next_e = 0;
  auto new_vertex = [&]() {
    vertices.push_back(VertexId{next_v});
    return VertexId{next_v++};
  };
  auto new_edge = [&](VertexId a, VertexId b) {
    edges.push_back({EdgeId{next_e}, std::min(a, b), std::max(a, b)});
    return EdgeId{next_e++};
  };

  for (int v = 0; v < nv; ++v) {
    VariableCycle kc;
    kc.occurrences = static_cast<int>(occ[v].size());
    for (int k = 0; k < 2 * kc.occurrences; ++k) {
      const VertexId x = new_vertex();
      kc.vertices.push_back(x);
      (k % 2 == 0 ? kc.a : kc.b).insert(x);
    }
    for (std::size_t k = 0; k < kc.vertices.size(); ++k) {
      const EdgeId e = new_edge(kc.vertices[k], kc.vertices[(k + 1) % kc.vertices.size()]);
      kc.edges.push_back(e);
      inst.s.insert(e);
    }
    inst.variable_cycles.push_back(std::move(kc));
  }
  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) inst.clause_vertices.push_back(new_vertex());
  for (std::size_t k = 0; k < 3 * f.clauses.size(); ++k) inst.clause_cycle.push_back(new_vertex());

  // Clause vertices of x_i in clause order against A_i in vertex order.
  for (int v = 0; v < nv; ++v) {
    const auto& a = inst.variable_cycles[v].a;
    auto it = a.begin();
    for (int ci : occ[v]) new_edge(inst.clause_vertices[ci], *it++);
  }
  // All B sides in vertex order against the clause cycle in cycle order.
  std::size_t pos = 0;
  for (const auto& kc : inst.variable_cycles) {
    for (VertexId b : kc.b) new_edge(b, inst.clause_cycle[pos++]);
  }
  const auto& kv = inst.clause_cycle;
  for (std::size_t k = 0; k < kv.size(); ++k) inst.clause_cycle_edges.push_back(new_edge(kv[k], kv[(k + 1) % kv.size()]));

  inst.g = Multigraph(std::move(vertices), std::move(edges));
  const std::size_t nc = f.clauses.size();
  require(inst.g.num_vertices() == 10 * nc && inst.g.num_edges() == 15 * nc, Errc::internal,
          "gadget size differs from 10|C| vertices and 15|C| edges");
  require(is_cubic(inst.g), Errc::internal, "gadget is not cubic");
  require(is_k_edge_connected(inst.g, 3), Errc::internal, "gadget is not 3-edge-connected");
  return inst;
}

Orientation assignment_to_orientation(const GadgetInstance& inst, const Assignment& a) {
  require(nae_feasible(inst.formula, a), Errc::precondition, "assignment is not feasible");
  // Layers A1 = 0, clauses = 1, A2 = 2, B2 = 3, clause cycle = 4, B1 = 5.
  std::map<VertexId, int> layer;
  for (std::size_t v = 0; v < inst.variable_cycles.size(); ++v) {
    const auto& kc = inst.variable_cycles[v];
    for (VertexId x : kc.a) layer[x] = a[v] ? 0 : 2;
    for (VertexId x : kc.b) layer[x] = a[v] ? 5 : 3;
  }
  for (VertexId x : inst.clause_vertices) layer[x] = 1;
  for (VertexId x : inst.clause_cycle) layer[x] = 4;

  std::map<EdgeId, VertexId> tails;
  const EdgeSet cycle_edges(inst.clause_cycle_edges.begin(), inst.clause_cycle_edges.end());
  for (const auto& e : inst.g.edges()) {
    if (cycle_edges.contains(e.id)) continue;
    const int lu = layer.at(e.u), lv = layer.at(e.v);
    if ((lu + 1) % 6 == lv) {
      tails[e.id] = e.u;
    } else {
      require((lv + 1) % 6 == lu, Errc::internal, "edge joins non-consecutive layers");
      tails[e.id] = e.v;
    }
  }
  const auto& kv = inst.clause_cycle;
  for (std::size_t k = 0; k < kv.size(); ++k) tails[inst.clause_cycle_edges[k]] = kv[k];
  Orientation d = Orientation::from_tails(std::make_shared<const Multigraph>(inst.g), tails);

  // Each clause vertex has an in-neighbour among A1 and an out-neighbour among A2.
  for (VertexId c : inst.clause_vertices) {
    bool in_a1 = false, out_a2 = false;
    for (const auto& inc : inst.g.incident(inst.g.vertex_index(c))) {
      const EdgeId e = inst.g.edge_at(inc.edge).id;
      const VertexId other = inst.g.vertex_at(inc.other);
      if (d.head(e) == c && layer.at(other) == 0) in_a1 = true;
      if (d.tail(e) == c && layer.at(other) == 2) out_a2 = true;
    }
    require(in_a1 && out_a2, Errc::internal, "clause vertex lacks an A1 in-neighbour or an A2 out-neighbour");
  }
  require(is_deletable_set(d, inst.s), Errc::internal, "constructed orientation does not make S deletable");
  return d;
}

Assignment orientation_to_assignment(const GadgetInstance& inst, const Orientation& d) {
  require(d.graph() == inst.g, Errc::invalid_argument, "orientation is not on the gadget graph");
  require(is_deletable_set(d, inst.s), Errc::invalid_argument, "orientation does not make S deletable");
  Assignment a(inst.variable_cycles.size());
  for (std::size_t v = 0; v < inst.variable_cycles.size(); ++v) {
    const auto& kc = inst.variable_cycles[v];
    int from_b = 0;
    for (EdgeId e : kc.edges) from_b += kc.b.contains(d.tail(e));
    require(from_b == 0 || from_b == static_cast<int>(kc.edges.size()), Errc::internal,
            "arcs of variable cycle " + inst.formula.variables[v] + " are not uniformly directed");
    a[v] = from_b != 0;
  }
  require(nae_feasible(inst.formula, a), Errc::internal, "extracted assignment is not feasible");
  return a;
}

}  // namespace frank
