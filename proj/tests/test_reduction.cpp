// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "frank/connectivity.hpp"
#include "frank/error.hpp"
#include "frank/json_io.hpp"
#include "frank/reduction.hpp"
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

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("formula parsing") {
  const NaeFormula f = parse_formula("# comment\nb a c\n\na b d  # trailing\n");
  CHECK(f.variables == std::vector<std::string>{"b", "a", "c", "d"});
  CHECK(f.clauses == std::vector<std::array<int, 3>>{{0, 1, 2}, {0, 1, 3}});
  CHECK(parse_formula(format_formula(f)) == f);
  CHECK(code_of([] { parse_formula("a b\n"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_formula("a b c d\n"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_formula("a -b c\n"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_formula("a a c\n"); }) == Errc::parse_error);
}

TEST_CASE("preprocessing and decomposition") {
  const NaeFormula f = parse_formula("a b c\na b d\nx y z\n");
  const NaeFormula p = preprocess(f);
  CHECK(p.clauses.empty());
  const NaeFormula ex = parse_formula(read(oracle::fixture("example.cnf3")));
  CHECK(preprocess(ex).clauses.size() == 3);
  const auto parts = decompose_connected(parse_formula("a b c\nx y z\na b c\n"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].variables == std::vector<std::string>{"a", "b", "c"});
  CHECK(parts[0].clauses.size() == 2);
}

TEST_CASE("brute-force solving") {
  const NaeFormula ex = parse_formula(read(oracle::fixture("example.cnf3")));
  const auto a = nae_solve_bruteforce(ex);
  REQUIRE(a.has_value());
  CHECK(nae_feasible(ex, *a));
  const NaeFormula fano = parse_formula(read(oracle::fixture("fano.cnf3")));
  CHECK(fano.clauses.size() == 7);
  CHECK(!nae_solve_bruteforce(fano).has_value());
}

TEST_CASE("gadget shape") {
  const NaeFormula ex = parse_formula(read(oracle::fixture("example.cnf3")));
  const GadgetInstance inst = build_gadget(ex);
  CHECK(inst.g.num_vertices() == 30);
  CHECK(inst.g.num_edges() == 45);
  CHECK(is_cubic(inst.g));
  CHECK(edge_connectivity(inst.g) == 3);
  CHECK(inst.s.size() == 18);
  CHECK(inst.clause_cycle.size() == 9);
  for (const auto& vc : inst.variable_cycles) CHECK(vc.vertices.size() == 2 * static_cast<std::size_t>(vc.occurrences));

  const GadgetInstance fano = build_gadget(parse_formula(read(oracle::fixture("fano.cnf3"))));
  CHECK(fano.g.num_vertices() == 70);
  CHECK(fano.g.num_edges() == 105);
  CHECK(edge_connectivity(fano.g) == 3);

  CHECK(code_of([] { build_gadget(parse_formula("a b c\n")); }) == Errc::precondition);
}

TEST_CASE("every feasible assignment round trips") {
  const NaeFormula ex = parse_formula(read(oracle::fixture("example.cnf3")));
  const GadgetInstance inst = build_gadget(ex);
  const int n = static_cast<int>(ex.variables.size());
  int feasible = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Assignment a(n);
    for (int i = 0; i < n; ++i) a[i] = mask >> i & 1;
    if (!nae_feasible(ex, a)) {
      CHECK(code_of([&] { assignment_to_orientation(inst, a); }) == Errc::precondition);
      continue;
    }
    ++feasible;
    const Orientation d = assignment_to_orientation(inst, a);
    CHECK(is_deletable_set(d, inst.s));
    CHECK(orientation_to_assignment(inst, d) == a);
    CHECK(orientation_to_assignment(inst, reverse(d)) != a);
  }
  CHECK(feasible > 0);
  CHECK(code_of([&] { orientation_to_assignment(inst, dfs_strong_orientation(inst.g)); }) == Errc::invalid_argument);
}

TEST_CASE("gadget and assignment JSON") {
  const NaeFormula ex = parse_formula(read(oracle::fixture("example.cnf3")));
  const GadgetInstance inst = build_gadget(ex);
  const GadgetInstance back = gadget_from_json(gadget_to_json(inst));
  CHECK(back.g == inst.g);
  CHECK(back.s == inst.s);
  const Assignment a = *nae_solve_bruteforce(ex);
  CHECK(assignment_from_json(ex, assignment_to_json(ex, a)) == a);
  CHECK(code_of([&] { assignment_from_json(ex, R"({"x1": true})"); }) == Errc::parse_error);
}
