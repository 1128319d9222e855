// SPDX-License-Identifier: Apache-2.0
#include "frank/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <deque>

#include "frank/connectivity.hpp"
#include "frank/digraph_kernels.hpp"
#include "frank/error.hpp"
#include "frank/set_cover.hpp"

namespace frank {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::yes: return "yes";
    case Outcome::no: return "no";
    case Outcome::indeterminate: return "indeterminate";
  }
  return "?";
}

CertificateCheck verify_certificate(const Multigraph& g, const FrankCertificate& cert) {
  for (const auto& d : cert.orientations) {
    require(d.graph() == g, Errc::invalid_argument, "certificate orientation refers to a different graph");
  }
  std::vector<std::optional<EdgeSet>> deletable(cert.orientations.size());
  for (std::size_t i = 0; i < cert.orientations.size(); ++i) {
    if (is_strongly_connected(cert.orientations[i])) deletable[i] = deletable_arcs(cert.orientations[i]);
  }
  CertificateCheck out;
  for (const auto& e : g.edges()) {
    auto it = cert.cover.find(e.id);
    bool good = it != cert.cover.end() && it->second >= 0 &&
                it->second < static_cast<int>(cert.orientations.size()) && deletable[it->second] &&
                deletable[it->second]->contains(e.id);
    if (!good) out.uncovered.insert(e.id);
  }
  for (const auto& [e, idx] : cert.cover) {
    if (!g.has_edge(e)) fail(Errc::invalid_argument, "certificate covers unknown edge " + std::to_string(e.value));
  }
  out.ok = out.uncovered.empty();
  return out;
}

namespace {

int first_free_edge(const Multigraph& g) {
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (!g.edge_at(static_cast<int>(i)).is_loop()) return static_cast<int>(i);
  }
  return -1;
}

// Direction search over non-loop edges in breadth-first vertex order. A vertex
// is checked for an entering and a leaving arc as soon as its last edge is set.
class PrunedEnumerator {
 public:
  explicit PrunedEnumerator(const Multigraph& g) : g_(g), kernel_(g) {
    const int n = static_cast<int>(g.num_vertices());
    fixed_ = first_free_edge(g);
    std::vector<char> listed(g.num_edges(), 0), seen(n, 0);
    for (int root = 0; root < n; ++root) {
      if (seen[root]) continue;
      std::deque<int> queue{root};
      seen[root] = 1;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& inc : g.incident(v)) {
          if (inc.other == v || listed[inc.edge]) continue;
          listed[inc.edge] = 1;
          if (inc.edge != fixed_) order_.push_back(inc.edge);
          if (!seen[inc.other]) {
            seen[inc.other] = 1;
            queue.push_back(inc.other);
          }
        }
      }
    }
    // Vertices completed after each position; the fixed edge counts as set before all others.
    completes_.assign(order_.size() + 1, {});
    std::vector<int> last(n, -1);
    for (std::size_t k = 0; k < order_.size(); ++k) {
      last[g.tail_index(order_[k])] = static_cast<int>(k);
      last[g.head_index(order_[k])] = static_cast<int>(k);
    }
    for (int v = 0; v < n; ++v) {
      if (last[v] >= 0) {
        completes_[last[v]].push_back(v);
      } else {
        completes_[order_.size()].push_back(v);
      }
    }
    hopeless_ = false;
    if (n > 1) {
      for (int v = 0; v < n; ++v) {
        bool has_edge = false;
        for (const auto& inc : g.incident(v)) has_edge |= inc.other != v;
        if (!has_edge) hopeless_ = true;
      }
    }
  }

  std::size_t free_edges() const { return order_.size(); }

  /// Explores every completion of the first `depth` decisions given by `prefix`.
  void run_prefix(std::uint64_t prefix, int depth, DeletableSets& out) const {
    if (hopeless_) return;
    if (g_.num_vertices() <= 1) {
      if (prefix == 0) record(0, out);
      return;
    }
    State st;
    st.in.assign(g_.num_vertices(), 0);
    st.out.assign(g_.num_vertices(), 0);
    if (fixed_ >= 0) apply(st, fixed_, false);
    for (int k = 0; k < depth; ++k) {
      bool rev = (prefix >> k) & 1;
      apply(st, order_[k], rev);
      if (!vertices_ok(st, k)) return;
    }
    dfs(st, depth, out);
  }

 private:
  struct State {
    std::vector<int> in, out;
    std::uint64_t reversed = 0;
  };

  void apply(State& st, int ei, bool rev) const {
    int t = g_.tail_index(ei), h = g_.head_index(ei);
    if (rev) {
      std::swap(t, h);
      st.reversed |= 1ULL << ei;
    } else {
      st.reversed &= ~(1ULL << ei);
    }
    ++st.out[t];
    ++st.in[h];
  }

  void undo(State& st, int ei) const {
    int t = g_.tail_index(ei), h = g_.head_index(ei);
    if ((st.reversed >> ei) & 1) std::swap(t, h);
    --st.out[t];
    --st.in[h];
    st.reversed &= ~(1ULL << ei);
  }

  bool vertices_ok(const State& st, int k) const {
    for (int v : completes_[k]) {
      if (st.in[v] == 0 || st.out[v] == 0) return false;
    }
    return true;
  }

  void record(std::uint64_t mask, DeletableSets& out) const {
    std::uint64_t del = 0;
    if (!kernel_.evaluate(mask, del)) return;
    ++out.strong_orientations;
    auto [it, inserted] = out.min_mask.emplace(del, mask);
    if (!inserted && mask < it->second) it->second = mask;
  }

  void dfs(State& st, int k, DeletableSets& out) const {
    if (k == static_cast<int>(order_.size())) {
      if (vertices_ok(st, k)) record(st.reversed, out);
      return;
    }
    for (bool rev : {false, true}) {
      apply(st, order_[k], rev);
      if (vertices_ok(st, k)) dfs(st, k + 1, out);
      undo(st, order_[k]);
    }
  }

  const Multigraph& g_;
  kernels::MaskKernel kernel_;
  int fixed_ = -1;
  bool hopeless_ = false;
  std::vector<int> order_;
  std::vector<std::vector<int>> completes_;
};

void merge_into(DeletableSets& into, const DeletableSets& from) {
  into.strong_orientations += from.strong_orientations;
  for (const auto& [set, mask] : from.min_mask) {
    auto [it, inserted] = into.min_mask.emplace(set, mask);
    if (!inserted && mask < it->second) it->second = mask;
  }
}

int split_depth(std::size_t free_edges) { return static_cast<int>(std::min<std::size_t>(free_edges, 10)); }

}  // namespace

DeletableSets enumerate_deletable_sets_reference(const Multigraph& g) {
  require(g.num_edges() < 64, Errc::too_large, "reference enumeration needs fewer than 64 edges");
  kernels::MaskKernel kernel(g);
  const int fixed = first_free_edge(g);
  std::uint64_t skip = fixed >= 0 ? (1ULL << fixed) : 0;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (g.edge_at(static_cast<int>(i)).is_loop()) skip |= 1ULL << i;  // loops carry no direction
  }
  DeletableSets out;
  for (std::uint64_t mask = 0; mask < (1ULL << g.num_edges()); ++mask) {
    if (mask & skip) continue;
    std::uint64_t del = 0;
    if (!kernel.evaluate(mask, del)) continue;
    ++out.strong_orientations;
    out.min_mask.emplace(del, mask);  // masks ascend, so the first is the smallest
  }
  return out;
}

DeletableSets enumerate_deletable_sets_serial(const Multigraph& g) {
  PrunedEnumerator en(g);
  const int depth = split_depth(en.free_edges());
  DeletableSets out;
  for (std::uint64_t p = 0; p < (1ULL << depth); ++p) en.run_prefix(p, depth, out);
  return out;
}

DeletableSets enumerate_deletable_sets_parallel(const Multigraph& g) {
  PrunedEnumerator en(g);
  const int depth = split_depth(en.free_edges());
  const long prefixes = 1L << depth;
  DeletableSets out;
#pragma omp parallel
  {
    DeletableSets local;
#pragma omp for schedule(dynamic, 4)
    for (long p = 0; p < prefixes; ++p) en.run_prefix(static_cast<std::uint64_t>(p), depth, local);
#pragma omp critical
    merge_into(out, local);
  }
  return out;
}

int frank_lower_bound(const Multigraph& g) {
  require(g.num_vertices() >= 2 && is_k_edge_connected(g, 3), Errc::precondition,
          "graph is not 3-edge-connected");
  return edge_connectivity(g) == 3 ? 2 : 1;
}

FrankResult frank_number_exact(const Multigraph& g, const SolveLimits& limits, bool parallel) {
  require(g.num_vertices() >= 2 && is_k_edge_connected(g, 3), Errc::precondition,
          "graph is not 3-edge-connected");
  require(static_cast<int>(g.num_edges()) <= limits.max_enum_edges && g.num_edges() <= 64 &&
              g.num_vertices() <= 64,
          Errc::too_large,
          "exact solver: " + std::to_string(g.num_edges()) + " edges exceeds the enumeration limit of " +
              std::to_string(limits.max_enum_edges));
  DeletableSets all = parallel ? enumerate_deletable_sets_parallel(g) : enumerate_deletable_sets_serial(g);
  std::vector<std::uint64_t> sets, masks;
  for (const auto& [set, mask] : all.min_mask) {
    sets.push_back(set);
    masks.push_back(mask);
  }
  std::vector<int> keep = maximal_sets(sets);
  std::vector<std::uint64_t> kept_sets, kept_masks;
  for (int i : keep) {
    kept_sets.push_back(sets[i]);
    kept_masks.push_back(masks[i]);
  }
  const std::uint64_t universe = g.num_edges() == 64 ? ~0ULL : ((1ULL << g.num_edges()) - 1);
  auto cover = min_set_cover(kept_sets, universe);
  require(cover.has_value(), Errc::internal, "deletable sets do not cover a 3-edge-connected graph");

  std::vector<std::uint64_t> chosen_masks;
  std::vector<std::uint64_t> chosen_sets;
  for (int i : *cover) {
    chosen_masks.push_back(kept_masks[i]);
    chosen_sets.push_back(kept_sets[i]);
  }
  std::vector<int> by_mask(chosen_masks.size());
  for (std::size_t i = 0; i < by_mask.size(); ++i) by_mask[i] = static_cast<int>(i);
  std::sort(by_mask.begin(), by_mask.end(), [&](int a, int b) { return chosen_masks[a] < chosen_masks[b]; });

  FrankResult res;
  auto gp = std::make_shared<const Multigraph>(g);
  for (int i : by_mask) res.certificate.orientations.push_back(Orientation::from_mask(gp, chosen_masks[i]));
  for (std::size_t ei = 0; ei < g.num_edges(); ++ei) {
    for (std::size_t k = 0; k < by_mask.size(); ++k) {
      if ((chosen_sets[by_mask[k]] >> ei) & 1) {
        res.certificate.cover[g.edge_at(static_cast<int>(ei)).id] = static_cast<int>(k);
        break;
      }
    }
  }
  require(verify_certificate(g, res.certificate).ok, Errc::internal, "exact certificate failed verification");
  res.value = static_cast<int>(res.certificate.orientations.size());
  res.strong_orientations = all.strong_orientations;
  res.distinct_sets = sets.size();
  res.maximal_sets = kept_sets.size();
  return res;
}

// ---------------------------------------------------------------------------
// Deletability decision.

namespace {

struct Variable {
  std::vector<int> edges;
  std::vector<std::uint8_t> forward;  // direction of each edge when the variable is false
};

std::vector<Variable> build_variables(const Multigraph& g, const std::vector<DirectionTie>& ties,
                                      std::vector<int>& var_of_edge) {
  var_of_edge.assign(g.num_edges(), -1);
  std::vector<Variable> vars;
  for (const auto& tie : ties) {
    Variable var;
    for (const auto& [e, tail] : tie) {
      const int ei = g.edge_index(e);
      const Edge& edge = g.edge_at(ei);
      require(tail == edge.u || tail == edge.v, Errc::invalid_argument,
              "tie gives edge " + std::to_string(e.value) + " a tail that is not an endpoint");
      require(var_of_edge[ei] < 0, Errc::invalid_argument,
              "edge " + std::to_string(e.value) + " appears in two ties");
      if (edge.is_loop()) continue;
      var_of_edge[ei] = static_cast<int>(vars.size());
      var.edges.push_back(ei);
      var.forward.push_back(tail == edge.u ? 1 : 0);
    }
    if (!var.edges.empty()) vars.push_back(std::move(var));
  }
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const int ei = static_cast<int>(i);
    if (var_of_edge[ei] >= 0 || g.edge_at(ei).is_loop()) continue;
    var_of_edge[ei] = static_cast<int>(vars.size());
    vars.push_back({{ei}, {1}});
  }
  return vars;
}

struct CutCheck {
  std::vector<int> edges;
  std::vector<char> u_inside;  // stored u endpoint on the checked side
};

// Every bond with at most three edges, each recorded from both sides.
std::vector<CutCheck> small_bonds(const Multigraph& g) {
  std::vector<CutCheck> out;
  const int m = static_cast<int>(g.num_edges());
  if (m > 160) return out;
  std::set<std::vector<int>> seen;
  auto record = [&](std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    if (!seen.insert(idx).second) return;
    EdgeSet ids;
    for (int ei : idx) ids.insert(g.edge_at(ei).id);
    auto comps = connected_components(remove_edges(g, ids));
    if (comps.size() != 2) return;
    const VertexSet& side = comps[0];
    for (int ei : idx) {
      const Edge& e = g.edge_at(ei);
      if (side.contains(e.u) == side.contains(e.v)) return;
    }
    for (bool inside : {true, false}) {
      CutCheck c;
      for (int ei : idx) {
        c.edges.push_back(ei);
        c.u_inside.push_back(side.contains(g.edge_at(ei).u) == inside);
      }
      out.push_back(std::move(c));
    }
  };
  if (!is_connected(g)) return out;
  for (EdgeId b : bridges(g)) record({g.edge_index(b)});
  for (int i = 0; i < m; ++i) {
    if (g.edge_at(i).is_loop()) continue;
    Multigraph gi = remove_edges(g, {g.edge_at(i).id});
    for (EdgeId b : bridges(gi)) record({i, g.edge_index(b)});
    for (int j = i + 1; j < m; ++j) {
      if (g.edge_at(j).is_loop()) continue;
      Multigraph gij = remove_edges(gi, {g.edge_at(j).id});
      for (EdgeId b : bridges(gij)) {
        int k = g.edge_index(b);
        if (k > j) record({i, j, k});
      }
    }
  }
  return out;
}

class Backtracker {
 public:
  Backtracker(const Multigraph& g, const EdgeSet& s, const SolveLimits& limits, std::vector<Variable> vars,
              const std::vector<int>& var_of_edge)
      : g_(g), limits_(limits), vars_(std::move(vars)), var_of_edge_(var_of_edge) {
    const int n = static_cast<int>(g.num_vertices());
    const int m = static_cast<int>(g.num_edges());
    in_s_.assign(m, 0);
    for (EdgeId e : s) {
      int ei = g.edge_index(e);
      if (!g.edge_at(ei).is_loop()) in_s_[ei] = 1;
    }
    state_.assign(m, -1);
    for (int ei = 0; ei < m; ++ei) {
      if (g.edge_at(ei).is_loop()) state_[ei] = 1;
    }
    // Vertex cuts from both sides, then small bonds.
    for (int v = 0; v < n; ++v) {
      for (bool inside : {true, false}) {
        CutCheck c;
        for (const auto& inc : g.incident(v)) {
          if (inc.other == v) continue;
          c.edges.push_back(inc.edge);
          c.u_inside.push_back((g.tail_index(inc.edge) == v) == inside);
        }
        cuts_.push_back(std::move(c));
      }
    }
    for (auto& c : small_bonds(g)) cuts_.push_back(std::move(c));
    cuts_of_edge_.assign(m, {});
    for (std::size_t c = 0; c < cuts_.size(); ++c) {
      for (int ei : cuts_[c].edges) cuts_of_edge_[ei].push_back(static_cast<int>(c));
    }
    // Variable order: breadth-first from an endpoint of the first edge of s.
    int root = 0;
    if (!s.empty()) root = g.tail_index(g.edge_index(*s.begin()));
    std::vector<char> seen(n, 0), placed(vars_.size(), 0);
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(v)) {
        int var = var_of_edge_[inc.edge];
        if (var >= 0 && !placed[var]) {
          placed[var] = 1;
          order_.push_back(var);
        }
        if (!seen[inc.other]) {
          seen[inc.other] = 1;
          queue.push_back(inc.other);
        }
      }
    }
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (!placed[v]) order_.push_back(static_cast<int>(v));
    }
    start_ = std::chrono::steady_clock::now();
  }

  DecideResult run() {
    DecideResult res;
    if (!order_.empty()) {
      // Reversal symmetry: the first variable keeps its given direction.
      set_var(order_[0], false);
      if (consistent(order_[0])) search(1);
      unset_var(order_[0]);
    } else {
      search(0);
    }
    res.nodes = nodes_;
    if (found_) {
      res.outcome = Outcome::yes;
      res.witness = found_;
    } else {
      res.outcome = aborted_ ? Outcome::indeterminate : Outcome::no;
    }
    return res;
  }

 private:
  void set_var(int var, bool flip) {
    const auto& v = vars_[var];
    for (std::size_t k = 0; k < v.edges.size(); ++k) state_[v.edges[k]] = flip ? !v.forward[k] : v.forward[k];
  }
  void unset_var(int var) {
    for (int ei : vars_[var].edges) state_[ei] = -1;
  }

  bool cut_feasible(const CutCheck& c) const {
    int in_decided = 0, in_outside_s = 0;
    std::vector<int> open;
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
      int ei = c.edges[k];
      if (state_[ei] < 0) {
        open.push_back(static_cast<int>(k));
        continue;
      }
      // Enters the side when its head is inside: forward arcs have head v.
      bool enters = state_[ei] ? !c.u_inside[k] : c.u_inside[k];
      if (enters) {
        ++in_decided;
        if (!in_s_[ei]) ++in_outside_s;
      }
    }
    if (in_outside_s >= 1 || in_decided >= 2) return true;
    if (open.size() > 12) return true;
    for (std::uint32_t pick = 0; pick < (1u << open.size()); ++pick) {
      int in = in_decided, outside = in_outside_s;
      for (std::size_t j = 0; j < open.size(); ++j) {
        if ((pick >> j) & 1) {
          ++in;
          if (!in_s_[c.edges[open[j]]]) ++outside;
        }
      }
      if (outside >= 1 || in >= 2) return true;
    }
    return false;
  }

  // Reachability where undecided edges may be used both ways.
  std::vector<char> mixed_reach(int from, bool forward, int skip) const {
    std::vector<char> seen(g_.num_vertices(), 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& inc : g_.incident(v)) {
        if (inc.edge == skip || inc.other == v || seen[inc.other]) continue;
        int st = state_[inc.edge];
        if (st >= 0) {
          int tail = st ? g_.tail_index(inc.edge) : g_.head_index(inc.edge);
          if ((tail == v) != forward) continue;
        }
        seen[inc.other] = 1;
        stack.push_back(inc.other);
      }
    }
    return seen;
  }

  bool relaxation_ok() const {
    const int n = static_cast<int>(g_.num_vertices());
    if (n <= 1) return true;
    for (bool fwd : {true, false}) {
      auto seen = mixed_reach(0, fwd, -1);
      if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
    }
    for (std::size_t ei = 0; ei < in_s_.size(); ++ei) {
      if (!in_s_[ei] || state_[ei] < 0) continue;
      int t = state_[ei] ? g_.tail_index(static_cast<int>(ei)) : g_.head_index(static_cast<int>(ei));
      int h = state_[ei] ? g_.head_index(static_cast<int>(ei)) : g_.tail_index(static_cast<int>(ei));
      if (!mixed_reach(t, true, static_cast<int>(ei))[h]) return false;
    }
    return true;
  }

  bool consistent(int var) const {
    for (int ei : vars_[var].edges) {
      for (int c : cuts_of_edge_[ei]) {
        if (!cut_feasible(cuts_[c])) return false;
      }
    }
    return relaxation_ok();
  }

  bool out_of_budget() {
    if (++nodes_ > limits_.node_budget) return true;
    if ((nodes_ & 1023) == 0) {
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (secs > limits_.time_budget_s) return true;
    }
    return false;
  }

  void search(std::size_t k) {
    if (found_ || aborted_) return;
    if (out_of_budget()) {
      aborted_ = true;
      return;
    }
    if (k == order_.size()) {
      std::vector<std::uint8_t> fwd(g_.num_edges());
      for (std::size_t i = 0; i < fwd.size(); ++i) fwd[i] = static_cast<std::uint8_t>(state_[i]);
      found_ = Orientation(std::make_shared<const Multigraph>(g_), std::move(fwd));
      return;
    }
    const int var = order_[k];
    for (bool flip : {false, true}) {
      set_var(var, flip);
      if (consistent(var)) search(k + 1);
      unset_var(var);
      if (found_ || aborted_) return;
    }
  }

  const Multigraph& g_;
  SolveLimits limits_;
  std::vector<Variable> vars_;
  std::vector<int> var_of_edge_;
  std::vector<char> in_s_;
  std::vector<int> state_;  // -1 undecided, 1 stored direction, 0 reversed
  std::vector<CutCheck> cuts_;
  std::vector<std::vector<int>> cuts_of_edge_;
  std::vector<int> order_;
  long nodes_ = 0;
  bool aborted_ = false;
  std::optional<Orientation> found_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

DecideResult deletability_decide(const Multigraph& g, const EdgeSet& s, const SolveLimits& limits,
                                 const std::vector<DirectionTie>& ties) {
  require(is_connected(g), Errc::precondition, "deletability_decide: graph is not connected");
  for (EdgeId e : s) g.edge_index(e);
  std::vector<int> var_of_edge;
  std::vector<Variable> vars = build_variables(g, ties, var_of_edge);

  DecideResult res;
  const int k = static_cast<int>(vars.size());
  if (k <= limits.max_enum_edges && g.num_edges() <= 64 && g.num_vertices() <= 64) {
    kernels::MaskKernel kernel(g);
    std::uint64_t required = 0;
    for (EdgeId e : s) required |= 1ULL << g.edge_index(e);
    // The first variable keeps its given direction (reversal symmetry).
    const std::uint64_t count = k == 0 ? 1 : (1ULL << (k - 1));
    for (std::uint64_t pick = 0; pick < count; ++pick) {
      std::uint64_t reversed = 0;
      for (int v = 0; v < k; ++v) {
        const bool flip = v > 0 && ((pick >> (v - 1)) & 1);
        for (std::size_t j = 0; j < vars[v].edges.size(); ++j) {
          if (vars[v].forward[j] == flip) reversed |= 1ULL << vars[v].edges[j];
        }
      }
      ++res.nodes;
      if (kernel.makes_deletable(reversed, required)) {
        res.outcome = Outcome::yes;
        res.witness = Orientation::from_mask(std::make_shared<const Multigraph>(g), reversed);
        break;
      }
    }
    if (!res.witness) res.outcome = Outcome::no;
  } else {
    res = Backtracker(g, s, limits, std::move(vars), var_of_edge).run();
  }
  if (res.witness) {
    require(is_deletable_set(*res.witness, s), Errc::internal, "deletability witness failed verification");
  }
  return res;
}

}  // namespace frank
