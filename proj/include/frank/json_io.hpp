// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "frank/exact.hpp"
#include "frank/pipelines.hpp"
#include "frank/reduction.hpp"
#include "frank/seven_packings.hpp"

namespace frank {

// All emitters produce indented JSON with sorted keys and a trailing newline.

/// {"vertices": [...], "edges": [{"id", "u", "v"}, ...]}
std::string graph_to_json(const Multigraph& g);
Multigraph graph_from_json(std::string_view text);

/// {"graph": <graph>, "tails": {"<edge id>": <vertex id>}}
std::string orientation_to_json(const Orientation& d);
Orientation orientation_from_json(std::string_view text);

struct LoadedCertificate {
  Multigraph graph;
  FrankCertificate certificate;
};

/// {"graph": <graph>, "orientations": [{"tails": {...}}, ...], "cover": {"<edge id>": index}}
std::string certificate_to_json(const Multigraph& g, const FrankCertificate& cert);
/// Accepts a certificate document or a pipeline report (its "certificate" member).
LoadedCertificate certificate_from_json(std::string_view text);

/// The certificate document plus "pipeline", "preconditions" and "provenance".
std::string report_to_json(const Multigraph& g, const PipelineReport& r);

/// Exact solver output: the certificate document plus "value" and search counts.
std::string frank_result_to_json(const Multigraph& g, const FrankResult& r);

/// {"packings": [{"cycles": [[v, ...]], "special": [e, ...]}],
///  "edges": {"<edge id>": {"membership": [0/1 x 7], "specialWitness": k}}, "splits": n}
std::string seven_packings_to_json(const SevenPackings& sp);

/// The gadget graph with "formula" (clause text) and
/// "labels": {"variableCycles", "clauseVertices", "clauseCycle", "S"}.
std::string gadget_to_json(const GadgetInstance& inst);
/// Rebuilds the gadget from its formula and checks the stored graph matches.
GadgetInstance gadget_from_json(std::string_view text);

/// {"<variable name>": true/false}
std::string assignment_to_json(const NaeFormula& f, const Assignment& a);
Assignment assignment_from_json(const NaeFormula& f, std::string_view text);

}  // namespace frank
