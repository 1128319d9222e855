// SPDX-License-Identifier: Apache-2.0
#include "frank/json_io.hpp"

#include <memory>

#include "frank/error.hpp"
#include "json.hpp"

namespace frank {

using nlohmann::json;

namespace {

std::string emit(const json& j) { return j.dump(2) + "\n"; }

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

// Typed field access that reports schema problems as parse errors.
template <class T>
T field(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), Errc::parse_error, std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("bad JSON field '") + key + "': " + e.what());
  }
}

json graph_json(const Multigraph& g) {
  json vs = json::array(), es = json::array();
  for (VertexId v : g.vertices()) vs.push_back(v.value);
  for (const auto& e : g.edges()) es.push_back({{"id", e.id.value}, {"u", e.u.value}, {"v", e.v.value}});
  return {{"vertices", vs}, {"edges", es}};
}

Multigraph graph_of(const json& j) {
  require(j.is_object(), Errc::parse_error, "graph must be a JSON object");
  std::vector<VertexId> vs;
  for (int v : field<std::vector<int>>(j, "vertices")) vs.push_back(VertexId{v});
  std::vector<Edge> es;
  for (const auto& e : field<json>(j, "edges")) {
    es.push_back({EdgeId{field<int>(e, "id")}, VertexId{field<int>(e, "u")}, VertexId{field<int>(e, "v")}});
  }
  return Multigraph(std::move(vs), std::move(es));
}

json tails_json(const Orientation& d) {
  json t = json::object();
  for (const auto& [e, v] : d.tails()) t[std::to_string(e.value)] = v.value;
  return t;
}

int parse_id(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    require(used == s.size(), Errc::parse_error, "bad id '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(Errc::parse_error, "bad id '" + s + "'");
  }
}

Orientation orientation_of(const GraphPtr& g, const json& tails) {
  require(tails.is_object(), Errc::parse_error, "tails must be a JSON object");
  std::map<EdgeId, VertexId> t;
  for (const auto& [k, v] : tails.items()) {
    require(v.is_number_integer(), Errc::parse_error, "tail of edge " + k + " is not an integer");
    t[EdgeId{parse_id(k)}] = VertexId{v.get<int>()};
  }
  return Orientation::from_tails(g, t);
}

json certificate_json(const Multigraph& g, const FrankCertificate& cert) {
  json os = json::array();
  for (const auto& d : cert.orientations) os.push_back({{"tails", tails_json(d)}});
  json cover = json::object();
  for (const auto& [e, k] : cert.cover) cover[std::to_string(e.value)] = k;
  return {{"graph", graph_json(g)}, {"orientations", os}, {"cover", cover}};
}

json ids(const auto& range) {
  json a = json::array();
  for (const auto& x : range) a.push_back(x.value);
  return a;
}

}  // namespace

std::string graph_to_json(const Multigraph& g) { return emit(graph_json(g)); }

Multigraph graph_from_json(std::string_view text) {
  const json j = parse(text);
  // A document wrapping a graph (orientation, certificate, gadget) is accepted too.
  if (j.is_object() && j.contains("graph")) return graph_of(j.at("graph"));
  return graph_of(j);
}

std::string orientation_to_json(const Orientation& d) {
  return emit({{"graph", graph_json(d.graph())}, {"tails", tails_json(d)}});
}

Orientation orientation_from_json(std::string_view text) {
  const json j = parse(text);
  auto g = std::make_shared<const Multigraph>(graph_of(field<json>(j, "graph")));
  return orientation_of(g, field<json>(j, "tails"));
}

std::string certificate_to_json(const Multigraph& g, const FrankCertificate& cert) {
  return emit(certificate_json(g, cert));
}

LoadedCertificate certificate_from_json(std::string_view text) {
  json j = parse(text);
  if (j.is_object() && j.contains("certificate")) j = j.at("certificate");
  LoadedCertificate out;
  out.graph = graph_of(field<json>(j, "graph"));
  auto g = std::make_shared<const Multigraph>(out.graph);
  for (const auto& o : field<json>(j, "orientations")) {
    out.certificate.orientations.push_back(orientation_of(g, field<json>(o, "tails")));
  }
  const json cover = field<json>(j, "cover");
  for (const auto& [k, v] : cover.items()) {
    require(v.is_number_integer(), Errc::parse_error, "cover index of edge " + k + " is not an integer");
    out.certificate.cover[EdgeId{parse_id(k)}] = v.get<int>();
  }
  return out;
}

std::string report_to_json(const Multigraph& g, const PipelineReport& r) {
  return emit({{"pipeline", r.pipeline},
               {"preconditions", r.preconditions},
               {"provenance", r.provenance},
               {"certificate", certificate_json(g, r.certificate)}});
}

std::string frank_result_to_json(const Multigraph& g, const FrankResult& r) {
  return emit({{"value", r.value},
               {"strongOrientations", r.strong_orientations},
               {"distinctDeletableSets", r.distinct_sets},
               {"maximalDeletableSets", r.maximal_sets},
               {"certificate", certificate_json(g, r.certificate)}});
}

std::string seven_packings_to_json(const SevenPackings& sp) {
  json packings = json::array();
  for (int k = 0; k < 7; ++k) {
    json cycles = json::array();
    for (const auto& c : sp.packings[k].cycles) cycles.push_back(ids(c.vertices));
    packings.push_back({{"cycles", cycles}, {"special", ids(sp.special[k])}});
  }
  json edges = json::object();
  for (const auto& [e, in] : sp.membership) {
    json m = json::array();
    for (bool b : in) m.push_back(b ? 1 : 0);
    edges[std::to_string(e.value)] = {{"membership", m}, {"specialWitness", sp.special_witness.at(e)}};
  }
  return emit({{"graph", graph_json(sp.graph)}, {"packings", packings}, {"edges", edges}, {"splits", sp.splits}});
}

std::string gadget_to_json(const GadgetInstance& inst) {
  json cycles = json::array();
  for (std::size_t v = 0; v < inst.variable_cycles.size(); ++v) {
    const auto& kc = inst.variable_cycles[v];
    cycles.push_back({{"variable", inst.formula.variables[v]},
                      {"vertices", ids(kc.vertices)},
                      {"edges", ids(kc.edges)},
                      {"A", ids(kc.a)},
                      {"B", ids(kc.b)}});
  }
  json labels = {{"variableCycles", cycles},
                 {"clauseVertices", ids(inst.clause_vertices)},
                 {"clauseCycle", {{"vertices", ids(inst.clause_cycle)}, {"edges", ids(inst.clause_cycle_edges)}}},
                 {"S", ids(inst.s)}};
  return emit({{"formula", format_formula(inst.formula)}, {"graph", graph_json(inst.g)}, {"labels", labels}});
}

GadgetInstance gadget_from_json(std::string_view text) {
  const json j = parse(text);
  GadgetInstance inst = build_gadget(parse_formula(field<std::string>(j, "formula")));
  require(graph_of(field<json>(j, "graph")) == inst.g, Errc::parse_error,
          "stored gadget graph does not match its formula");
  return inst;
}

std::string assignment_to_json(const NaeFormula& f, const Assignment& a) {
  require(a.size() == f.variables.size(), Errc::invalid_argument, "assignment size does not match the formula");
  json j = json::object();
  for (std::size_t v = 0; v < a.size(); ++v) j[f.variables[v]] = static_cast<bool>(a[v]);
  return emit(j);
}

Assignment assignment_from_json(const NaeFormula& f, std::string_view text) {
  const json j = parse(text);
  Assignment a(f.variables.size());
  for (std::size_t v = 0; v < a.size(); ++v) a[v] = field<bool>(j, f.variables[v].c_str());
  return a;
}

}  // namespace frank
