#pragma once

#include <string>

#include <json.hpp>

#include "mcut/graph.hpp"
#include "mcut/oracle.hpp"
#include "mcut/reductions.hpp"
#include "mcut/solvers.hpp"

namespace mcut {

// JSON shapes are a stable contract: answers are "yes"/"no" strings, values
// integers, colourings the R/B string, undefined numeric fields null.

nlohmann::json structural_report_json(const Graph& g);
nlohmann::json solve_result_json(const SolveResult& r);
nlohmann::json oracle_report_json(const OracleReport& r);
nlohmann::json cut_certificate_json(const CutCertificate& c);

// Instance files: {"vars": n, "clauses": [[...], ...]} and
// {"universe": 3q, "sets": [[a,b,c], ...]}, variables and elements 1-based.
nlohmann::json instance_json(const NaeSatInstance& inst);
nlohmann::json instance_json(const X3cInstance& inst);
NaeSatInstance nae_instance_from_json(const nlohmann::json& j);
X3cInstance x3c_instance_from_json(const nlohmann::json& j);

// Sidecar for a generated graph: {"labels": {"0": ..., ...}, "meta": {...}}.
nlohmann::json sidecar_json(const LabelledGraph& lg);
LabelledGraph sidecar_attach(Graph g, const nlohmann::json& sidecar);

// Malformed content raises std::invalid_argument; I/O failure std::runtime_error.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
nlohmann::json read_json_file(const std::string& path);

}  // namespace mcut
