// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frank/orientation.hpp"

namespace frank {

/// Monotone not-all-equal 3-SAT formula: every clause holds three distinct
/// variables (by index into `variables`), none negated.
struct NaeFormula {
  std::vector<std::string> variables;
  std::vector<std::array<int, 3>> clauses;  // each sorted
  bool operator==(const NaeFormula&) const = default;
};

using Assignment = std::vector<bool>;

/// One clause per line as three variable tokens; '#' starts a comment and
/// blank lines are skipped. Variables are numbered by first appearance.
NaeFormula parse_formula(std::string_view text);
std::string format_formula(const NaeFormula& f);

/// Every clause has a true and a false variable.
bool nae_feasible(const NaeFormula& f, const Assignment& a);

/// Removes a variable occurring in at most one clause together with that
/// clause until every remaining variable occurs at least twice. Feasibility
/// is unchanged.
NaeFormula preprocess(const NaeFormula& f);

/// Connected components of the variable-clause incidence graph, listed by
/// smallest variable index.
std::vector<NaeFormula> decompose_connected(const NaeFormula& f);

/// First feasible assignment in binary counting order (variable 0 is the
/// lowest bit). Throws too_large above 24 variables.
std::optional<Assignment> nae_solve_bruteforce(const NaeFormula& f);

struct VariableCycle {
  std::vector<VertexId> vertices;  // cycle order, starting at the lowest id
  std::vector<EdgeId> edges;       // edges[k] joins vertices[k] and vertices[k+1]
  VertexSet a, b;                  // a holds the even positions
  int occurrences = 0;
};

/// The deletability instance built from a formula: a cycle of length 2p per
/// variable (p = occurrences), a vertex per clause matched to the A side of
/// its variables' cycles, and a clause cycle of length 3|clauses| matched to
/// all B sides. S is the union of the variable cycles.
struct GadgetInstance {
  NaeFormula formula;
  Multigraph g;
  EdgeSet s;
  std::vector<VariableCycle> variable_cycles;
  std::vector<VertexId> clause_vertices;
  std::vector<VertexId> clause_cycle;
  std::vector<EdgeId> clause_cycle_edges;
};

/// Requires a nonempty connected formula in which every variable occurs at
/// least twice. The result is checked cubic and 3-edge-connected.
GadgetInstance build_gadget(const NaeFormula& f);

/// For a feasible assignment: true cycles (A1, B1) and false cycles (A2, B2)
/// give the layer order A1, clauses, A2, B2, clause cycle, B1, A1, every edge
/// runs forward in that order and the clause cycle is a circuit. S
/// deletability is verified.
Orientation assignment_to_orientation(const GadgetInstance& inst, const Assignment& a);

/// Reads a variable as true when its cycle edges run from B to A. Requires
/// an orientation in which all of S is deletable; the result is checked
/// feasible.
Assignment orientation_to_assignment(const GadgetInstance& inst, const Orientation& d);

}  // namespace frank
