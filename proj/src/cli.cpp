// SPDX-License-Identifier: Apache-2.0
#include "frank/cli.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "frank/connectivity.hpp"
#include "frank/error.hpp"
#include "frank/eulerian.hpp"
#include "frank/exact.hpp"
#include "frank/graph_io.hpp"
#include "frank/json_io.hpp"
#include "frank/named_graphs.hpp"
#include "frank/pipelines.hpp"
#include "frank/reduction.hpp"
#include "frank/seven_packings.hpp"
#include "json.hpp"

namespace frank {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::invalid_argument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Multigraph load_graph(const std::string& source, const std::string& input_format) {
  constexpr std::string_view scheme = "corpus:";
  if (source.starts_with(scheme)) return named_graph(source.substr(scheme.size()));
  const std::string text = read_file(source);
  std::string fmt = input_format;
  if (fmt == "auto") {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      fmt = "json";
    } else if (source.ends_with(".g6")) {
      fmt = "graph6";
    } else {
      fmt = "edges";
    }
  }
  if (fmt == "json") return graph_from_json(text);
  if (fmt == "graph6") return parse_graph6(text);
  return parse_edge_list(text);
}

std::string join_ids(const auto& range) {
  std::string s;
  for (const auto& x : range) s += (s.empty() ? "" : " ") + std::to_string(x.value);
  return s;
}

EdgeSet parse_edge_ids(const Multigraph& g, const std::string& text) {
  if (text == "all") return g.edge_set();
  EdgeSet out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      const int id = std::stoi(tok, &used);
      require(used == tok.size(), Errc::parse_error, "bad edge id '" + tok + "'");
      require(g.has_edge(EdgeId{id}), Errc::unknown_edge, "unknown edge " + tok);
      out.insert(EdgeId{id});
    } catch (const std::logic_error&) {
      fail(Errc::parse_error, "bad edge id '" + tok + "'");
    }
  }
  return out;
}

// Shared output handling: the JSON artifact goes to -o when given, and
// stdout carries either the summary (text) or the artifact (json).
struct Output {
  std::string format = "text";
  std::string path;

  void emit(std::ostream& out, const std::string& json, const std::string& summary) const {
    if (!path.empty()) {
      std::ofstream f(path, std::ios::binary);
      require(f.good(), Errc::invalid_argument, "cannot write " + path);
      f << json;
      require(f.good(), Errc::invalid_argument, "write to " + path + " failed");
    }
    out << (format == "json" ? json : summary);
  }
};

void add_output_options(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("-o,--output", o.path, "write the JSON artifact to this file");
}

void verify_or_fail(const Multigraph& g, const FrankCertificate& cert) {
  const CertificateCheck chk = verify_certificate(g, cert);
  require(chk.ok, Errc::internal, "certificate failed re-verification on edges " + join_ids(chk.uncovered));
}

std::string bound_statement(const std::string& pipeline) {
  if (pipeline == "upper7") return "at most 7 orientations for every 3-edge-connected graph";
  if (pipeline == "color3") return "at most 3 orientations for 3-edge-colorable cubic graphs";
  if (pipeline == "bf5") return "at most 5 orientations for cubic graphs with a six-matching double cover";
  return "at most 3 orientations for essentially 4-edge-connected graphs";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orientations of 3-edge-connected multigraphs: Frank numbers, certificates and the not-all-equal 3-SAT gadget"};
  app.name(args.empty() ? "frank" : args[0]);
  app.require_subcommand(1);
  std::string input_format = "auto";
  app.add_option("--input-format", input_format, "graph input format")
      ->check(CLI::IsMember({"auto", "edges", "graph6", "json"}));

  Output o_conn, o_frank, o_del, o_orient, o_reduce, o_map, o_verify, o_corpus, o_pack;

  std::string graph_arg;
  auto* conn = app.add_subcommand("connectivity", "edge connectivity and essential 4-edge-connectivity");
  conn->add_option("graph", graph_arg, "graph file or corpus:<name>")->required();
  add_output_options(conn, o_conn);

  bool exact = false, serial = false;
  std::string pipeline;
  SolveLimits limits;
  PipelineLimits plimits;
  auto* frank_cmd = app.add_subcommand("frank", "exact Frank number or a certifying upper-bound construction");
  frank_cmd->add_option("graph", graph_arg, "graph file or corpus:<name>")->required();
  auto* exact_opt = frank_cmd->add_flag("--exact", exact, "exhaustive search and minimum set cover");
  auto* pipe_opt = frank_cmd->add_option("--pipeline", pipeline, "certifying construction")
                       ->check(CLI::IsMember({"seven", "upper7", "color3", "bf5", "esse4"}));
  exact_opt->excludes(pipe_opt);
  frank_cmd->add_option("--max-edges", limits.max_enum_edges, "largest graph for exhaustive search");
  frank_cmd->add_option("--time-budget", limits.time_budget_s, "seconds before the search gives up");
  frank_cmd->add_flag("--serial", serial, "single-threaded enumeration");
  add_output_options(frank_cmd, o_frank);

  std::string set_arg;
  auto* del = app.add_subcommand("deletable", "is there an orientation in which a given edge set is deletable");
  del->add_option("graph", graph_arg, "graph file or corpus:<name>")->required();
  del->add_option("--set", set_arg, "comma-separated edge ids or 'all'")->required();
  del->add_option("--budget", limits.node_budget, "search nodes before giving up");
  del->add_option("--time-budget", limits.time_budget_s, "seconds before giving up");
  del->add_option("--max-edges", limits.max_enum_edges, "free choices handled by plain enumeration");
  add_output_options(del, o_del);

  bool well_balanced = false;
  auto* orient = app.add_subcommand("orient", "orientations with connectivity guarantees");
  orient->add_option("graph", graph_arg, "graph file or corpus:<name>")->required();
  orient->add_flag("--well-balanced", well_balanced, "directed local connectivity at least half the undirected")
      ->required();
  add_output_options(orient, o_orient);

  std::string problem, formula_path;
  int part = -1;
  auto* reduce = app.add_subcommand("reduce", "build the deletability instance of a formula");
  reduce->add_option("problem", problem, "source problem")->required()->check(CLI::IsMember({"nae3sat"}));
  reduce->add_option("formula", formula_path, "one clause of three variables per line")->required();
  reduce->add_option("--part", part, "connected part to build when the formula splits");
  add_output_options(reduce, o_reduce);

  std::string gadget_path, to_orientation, to_assignment;
  auto* map_cmd = app.add_subcommand("map", "translate between assignments and gadget orientations");
  map_cmd->add_option("gadget", gadget_path, "gadget JSON from 'reduce'")->required();
  auto* to_o = map_cmd->add_option("--to-orientation", to_orientation, "assignment JSON to map forward");
  auto* to_a = map_cmd->add_option("--to-assignment", to_assignment, "orientation JSON to map back");
  to_o->excludes(to_a);
  add_output_options(map_cmd, o_map);

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "re-check a certificate or pipeline report");
  verify->add_option("certificate", cert_path, "certificate JSON")->required();
  add_output_options(verify, o_verify);

  std::string corpus_name;
  auto* corpus = app.add_subcommand("corpus", "list the named graphs or print one");
  corpus->add_option("name", corpus_name, "graph name");
  add_output_options(corpus, o_corpus);

  auto* packings = app.add_subcommand("packings", "seven cycle packings of a cubic 3-edge-connected graph");
  packings->add_option("graph", graph_arg, "graph file or corpus:<name>")->required();
  add_output_options(packings, o_pack);

  try {
    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    if (*conn) {
      const Multigraph g = load_graph(graph_arg, input_format);
      nlohmann::json j;
      std::ostringstream s;
      const int lambda = g.num_vertices() >= 2 ? edge_connectivity(g) : 0;
      const bool ec3 = g.num_vertices() >= 2 && lambda >= 3;
      j["vertices"] = g.num_vertices();
      j["edges"] = g.num_edges();
      j["edgeConnectivity"] = lambda;
      j["cubic"] = is_cubic(g);
      j["threeEdgeConnected"] = ec3;
      s << "vertices " << g.num_vertices() << ", edges " << g.num_edges() << "\n";
      s << "edge connectivity " << lambda << (is_cubic(g) ? ", cubic" : "") << "\n";
      if (ec3) {
        const auto cut = find_nontrivial_3_cut(g);
        j["essentially4EdgeConnected"] = !cut.has_value();
        j["nontrivialThreeCut"] = cut ? nlohmann::json(nlohmann::json::array()) : nlohmann::json(nullptr);
        if (cut) {
          for (VertexId v : *cut) j["nontrivialThreeCut"].push_back(v.value);
          s << "not essentially 4-edge-connected: nontrivial 3-edge-cut around {" << join_ids(*cut) << "}\n";
        } else {
          s << "essentially 4-edge-connected\n";
        }
        s << "lower bound on the Frank number: " << frank_lower_bound(g) << "\n";
      } else {
        s << "not 3-edge-connected\n";
      }
      o_conn.emit(out, j.dump(2) + "\n", s.str());
      return exit_ok;
    }

    if (*frank_cmd) {
      require(exact || !pipeline.empty(), Errc::invalid_argument, "choose --exact or --pipeline");
      const Multigraph g = load_graph(graph_arg, input_format);
      std::ostringstream s;
      if (exact) {
        const FrankResult r = frank_number_exact(g, limits, !serial);
        verify_or_fail(g, r.certificate);
        s << "f = " << r.value << "\n";
        s << "lower bound " << frank_lower_bound(g) << ", certificate with " << r.certificate.orientations.size()
          << " orientations verified\n";
        s << r.strong_orientations << " strongly connected orientations (one edge fixed), " << r.distinct_sets
          << " distinct deletable sets, " << r.maximal_sets << " maximal\n";
        o_frank.emit(out, frank_result_to_json(g, r), s.str());
        return exit_ok;
      }
      if (pipeline == "seven") pipeline = "upper7";
      PipelineReport r;
      if (pipeline == "upper7") r = certify_upper7(g, plimits);
      if (pipeline == "color3") r = certify_color3(g, plimits);
      if (pipeline == "bf5") r = certify_bf5(g, plimits);
      if (pipeline == "esse4") r = certify_esse4(g, plimits);
      verify_or_fail(g, r.certificate);
      s << "pipeline " << r.pipeline << ": " << r.certificate.orientations.size()
        << " orientations, certificate verified\n";
      s << "bound: " << bound_statement(r.pipeline) << "\n";
      s << "preconditions:";
      for (const auto& p : r.preconditions) s << " [" << p << "]";
      s << "\n";
      for (std::size_t k = 0; k < r.provenance.size(); ++k) s << "  " << k << ": " << r.provenance[k] << "\n";
      o_frank.emit(out, report_to_json(g, r), s.str());
      return exit_ok;
    }

    if (*del) {
      const Multigraph g = load_graph(graph_arg, input_format);
      const EdgeSet set = parse_edge_ids(g, set_arg);
      const DecideResult r = deletability_decide(g, set, limits);
      std::ostringstream s;
      nlohmann::json j;
      j["outcome"] = to_string(r.outcome);
      j["set"] = nlohmann::json::array();
      for (EdgeId e : set) j["set"].push_back(e.value);
      j["nodes"] = r.nodes;
      s << "set {" << join_ids(set) << "}: " << to_string(r.outcome) << " (" << r.nodes << " search nodes)\n";
      if (r.witness) {
        j["witness"] = nlohmann::json::parse(orientation_to_json(*r.witness));
        s << "witness orientation verified\n";
      }
      o_del.emit(out, j.dump(2) + "\n", s.str());
      return r.outcome == Outcome::indeterminate ? exit_indeterminate : exit_ok;
    }

    if (*orient) {
      const Multigraph g = load_graph(graph_arg, input_format);
      const Orientation d = well_balanced_orientation(g);
      require(is_well_balanced(d), Errc::internal, "orientation failed re-verification");
      o_orient.emit(out, orientation_to_json(d), "well-balanced orientation found and verified\n");
      return exit_ok;
    }

    if (*reduce) {
      const NaeFormula f = parse_formula(read_file(formula_path));
      const NaeFormula pre = preprocess(f);
      const auto parts = decompose_connected(pre);
      std::ostringstream s;
      s << f.clauses.size() << " clauses, " << f.variables.size() << " variables; after removing variables in a "
        << "single clause: " << pre.clauses.size() << " clauses in " << parts.size() << " connected parts\n";
      if (parts.empty()) {
        s << "nothing left to build: the formula is feasible\n";
        o_reduce.emit(out, "{}\n", s.str());
        return exit_ok;
      }
      require(parts.size() == 1 || part >= 0, Errc::precondition,
              "formula is not connected; pick a part with --part 0.." + std::to_string(parts.size() - 1));
      const int pick = parts.size() == 1 ? 0 : part;
      require(pick < static_cast<int>(parts.size()), Errc::invalid_argument, "no such part");
      const GadgetInstance inst = build_gadget(parts[pick]);
      s << "gadget: " << inst.g.num_vertices() << " vertices, " << inst.g.num_edges()
        << " edges, cubic, 3-edge-connected\n";
      s << "S: " << inst.s.size() << " variable-cycle edges; cycle lengths";
      for (const auto& kc : inst.variable_cycles) s << " " << kc.edges.size();
      s << "; clause cycle length " << inst.clause_cycle.size() << "\n";
      o_reduce.emit(out, gadget_to_json(inst), s.str());
      return exit_ok;
    }

    if (*map_cmd) {
      require(!to_orientation.empty() || !to_assignment.empty(), Errc::invalid_argument,
              "choose --to-orientation or --to-assignment");
      const GadgetInstance inst = gadget_from_json(read_file(gadget_path));
      if (!to_orientation.empty()) {
        const Assignment a = assignment_from_json(inst.formula, read_file(to_orientation));
        const Orientation d = assignment_to_orientation(inst, a);
        o_map.emit(out, orientation_to_json(d), "orientation with S deletable built and verified\n");
      } else {
        const Orientation d = orientation_from_json(read_file(to_assignment));
        const Assignment a = orientation_to_assignment(inst, d);
        std::ostringstream s;
        s << "feasible assignment:";
        for (std::size_t v = 0; v < a.size(); ++v) s << " " << inst.formula.variables[v] << "=" << (a[v] ? 1 : 0);
        s << "\n";
        o_map.emit(out, assignment_to_json(inst.formula, a), s.str());
      }
      return exit_ok;
    }

    if (*verify) {
      const LoadedCertificate lc = certificate_from_json(read_file(cert_path));
      const CertificateCheck chk = verify_certificate(lc.graph, lc.certificate);
      nlohmann::json j;
      j["ok"] = chk.ok;
      j["orientations"] = lc.certificate.orientations.size();
      j["uncovered"] = nlohmann::json::array();
      for (EdgeId e : chk.uncovered) j["uncovered"].push_back(e.value);
      std::ostringstream s;
      if (chk.ok) {
        s << "certificate valid: " << lc.certificate.orientations.size() << " orientations cover all "
          << lc.graph.num_edges() << " edges\n";
      } else {
        s << "certificate INVALID: edges without a deleting orientation: " << join_ids(chk.uncovered) << "\n";
      }
      o_verify.emit(out, j.dump(2) + "\n", s.str());
      return chk.ok ? exit_ok : exit_error;
    }

    if (*corpus) {
      if (corpus_name.empty()) {
        nlohmann::json j = nlohmann::json::array();
        std::ostringstream s;
        for (const auto& name : corpus_names()) {
          const Multigraph g = named_graph(name);
          j.push_back({{"name", name}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()}});
          s << name << " " << g.num_vertices() << " " << g.num_edges() << "\n";
        }
        o_corpus.emit(out, j.dump(2) + "\n", s.str());
      } else {
        const Multigraph g = named_graph(corpus_name);
        o_corpus.emit(out, graph_to_json(g), format_edge_list(g));
      }
      return exit_ok;
    }

    if (*packings) {
      const Multigraph g = load_graph(graph_arg, input_format);
      const SevenPackings sp = seven_cycle_packings(g);
      std::ostringstream s;
      s << "seven cycle packings, " << sp.splits << " 3-edge-cut splits; every edge lies in 4 packings and is "
        << "special in one\n";
      for (int k = 0; k < 7; ++k) {
        s << "  " << k << ": " << sp.packings[k].cycles.size() << " cycles, " << sp.special[k].size()
          << " special edges\n";
      }
      o_pack.emit(out, seven_packings_to_json(sp), s.str());
      return exit_ok;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == Errc::indeterminate ? exit_indeterminate : exit_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}

}  // namespace frank
