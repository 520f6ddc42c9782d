#pragma once

// Per-graph analysis: runs selected checks and renders THEOREM / CONJECTURE
// rows. THEOREM rows hold for every input; a failure there is a defect.
// CONJECTURE rows are open statements checked on one graph.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tricub/graph.hpp"

namespace tricub {

enum class RowKind { theorem, conjecture };
enum class Outcome { pass, fail, inconclusive, skipped };

const char* to_string(RowKind k);
const char* to_string(Outcome o);

struct ReportRow {
  std::string id;
  RowKind kind = RowKind::theorem;
  std::string statement;
  std::string lhs;
  std::string rhs;
  Outcome outcome = Outcome::skipped;
  std::string note;
};

/// Exit codes shared by the library API and the CLI.
enum ExitCode : int {
  kExitPass = 0,
  kExitTheoremViolation = 1,
  kExitConjectureViolation = 2,
  kExitInconclusive = 3,
  kExitInputError = 4,
};

struct AnalyzeOptions {
  /// Any of: t, T, scc, cdc, hcolor, gallai, bounds.
  std::vector<std::string> checks{"t", "gallai", "bounds"};
  /// Largest |U| tried for T.
  int budget = 3;
  /// Seconds for the T search; 0 = none.
  double timeout_seconds = 0.0;
  /// Threads for the T search.
  int threads = 1;
  /// Node budget for each search kernel.
  std::uint64_t node_budget = 20000000;
};

const std::vector<std::string>& known_checks();

struct AnalysisReport {
  std::string graph_hash;
  int vertices = 0;
  int edges = 0;
  bool simple = false;
  bool connected = false;
  bool bridgeless = false;
  /// Computed parameters (t, T, scc, ...), keyed by name.
  nlohmann::json values = nlohmann::json::object();
  std::vector<ReportRow> rows;
  /// Certificates keyed by name.
  nlohmann::json certificates = nlohmann::json::object();
  int exit_code = kExitPass;
};

/// Throws Error{not_cubic}/Error{disconnected} for unusable input,
/// Error{has_bridge} when T or scc is requested on a graph with a bridge,
/// Error{unknown_name} for unknown checks.
AnalysisReport analyze(const Multigraph& g, const AnalyzeOptions& options);

/// 1 if a THEOREM row failed, else 2 if a CONJECTURE row failed, else 3 if
/// any row is inconclusive, else 0.
int exit_code_for(const std::vector<ReportRow>& rows);

/// JSON with sorted keys (nlohmann objects are ordered maps).
nlohmann::json report_to_json(const AnalysisReport& r);
/// Aligned-column text.
std::string report_to_text(const AnalysisReport& r);
std::string report_json_to_text(const nlohmann::json& j);

}  // namespace tricub
