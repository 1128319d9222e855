// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "frank/connectivity.hpp"
#include "frank/error.hpp"
#include "frank/named_graphs.hpp"
#include "frank/pipelines.hpp"
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

void check_report(const Multigraph& g, const PipelineReport& r, std::size_t cap) {
  CHECK(verify_certificate(g, r.certificate).ok);
  CHECK(r.certificate.orientations.size() <= cap);
  CHECK(r.certificate.cover.size() == g.num_edges());
  CHECK(!r.preconditions.empty());
  for (const auto& d : r.certificate.orientations) CHECK(is_strongly_connected(d));
}

}  // namespace

TEST_CASE("every pipeline certifies every corpus graph meeting its preconditions") {
  for (const auto& name : corpus_names()) {
    const Multigraph g = named_graph(name);
    if (edge_connectivity(g) < 3) continue;
    CAPTURE(name);
    check_report(g, certify_upper7(g), 7);
    if (!is_cubic(g)) continue;
    check_report(g, certify_bf5(g), 5);
    if (proper_3_edge_coloring(g)) check_report(g, certify_color3(g), 3);
    if (is_essentially_4ec(g)) check_report(g, certify_esse4(g), 3);
  }
}

TEST_CASE("pipeline preconditions") {
  const Multigraph cycle = Multigraph::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(code_of([&] { certify_upper7(cycle); }) == Errc::precondition);
  CHECK(code_of([] { certify_color3(named_graph("k5")); }) == Errc::precondition);
  CHECK(code_of([] { certify_color3(named_graph("petersen")); }) == Errc::not_colorable);
  CHECK(code_of([] { certify_esse4(named_graph("prism3")); }) == Errc::precondition);
  PipelineLimits starved;
  starved.double_cover_budget = 1;
  CHECK(code_of([&] { certify_bf5(named_graph("petersen"), starved); }) == Errc::indeterminate);
}

TEST_CASE("pipelines are deterministic") {
  for (const std::string name : {"petersen", "k5", "w4"}) {
    const Multigraph g = named_graph(name);
    const auto a = certify_upper7(g);
    const auto b = certify_upper7(g);
    CHECK(a.certificate.cover == b.certificate.cover);
    CHECK(a.certificate.orientations == b.certificate.orientations);
  }
}

TEST_CASE("the building blocks meet their contracts") {
  const Multigraph g = named_graph("petersen");
  const EdgeSet m = *perfect_matching(g);
  EdgeSet rest;
  for (const auto& e : g.edges())
    if (!m.count(e.id)) rest.insert(e.id);
  const CyclePacking p = packing_from_edges(g, rest);

  const Orientation d = orient_matching_deletable(g, m, p);
  CHECK(is_deletable_set(d, m));
  for (const auto& c : p.cycles) CHECK(is_circuit(d, c));

  const Orientation s = orient_special_set_deletable(g, p);
  CHECK(is_deletable_set(s, special_set(g, p)));
  for (const auto& c : p.cycles) CHECK(is_circuit(s, c));
}

TEST_CASE("graphs with loops, cut vertices and bridges after a vertex deletion") {
  // Two K5 copies sharing vertex 0, plus a loop.
  std::vector<std::pair<int, int>> pairs;
  for (int off : {0, 4}) {
    std::vector<int> vs = {0, off + 1, off + 2, off + 3, off + 4};
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) pairs.push_back({vs[i], vs[j]});
  }
  pairs.push_back({3, 3});
  const Multigraph g = Multigraph::from_pairs(9, pairs);
  REQUIRE(edge_connectivity(g) >= 3);
  check_report(g, certify_upper7(g), 7);
  if (is_essentially_4ec(g)) check_report(g, certify_esse4(g), 3);
}
