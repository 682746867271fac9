#pragma once

#include <string>
#include <vector>

#include "actlab/act.hpp"
#include "actlab/predicates.hpp"

#include "json.hpp"

namespace actlab {

struct SuiteOptions {
  std::vector<std::string> monoid_specs;  // catalog spec strings
  int max_act_size = 4;
  bool up_to_iso = true;
  std::vector<std::string> claim_ids;  // empty or {"all"} selects everything
  std::string mode = "both";           // "strict" | "relaxed" | "both"
  std::string seed_order = "lex";      // "lex" | "revlex"
};

/// One verification run of one claim (per reading when mode-sensitive).
/// Failure payloads are self-contained: they embed act files plus concrete
/// property checks with expected verdicts, replayable through the CLI.
struct ClaimReport {
  std::string claim;
  std::string title;
  std::string category;  // "theorem" | "equivalence" | "open_question" | "witness_search"
  std::string mode;      // "-", "strict" or "relaxed"
  bool counts_for_exit = true;
  long long instances_checked = 0;
  long long failures_total = 0;
  std::vector<nlohmann::json> failures;  // first few, in instance order
  nlohmann::json notes;                  // claim-specific documentation
  double elapsed_ms = 0;
  nlohmann::json corpus;
};

struct ClaimInfo {
  std::string id;
  std::string title;
  std::string category;
  bool mode_sensitive = false;
};

const std::vector<ClaimInfo>& claim_registry();

/// Runs the selected claims over the corpus described by the options.
/// Reports are sorted by claim id then mode. Throws UnknownClaim.
std::vector<ClaimReport> run_suite(const SuiteOptions& opt);

/// Exit rule: no failures among reports that count for exit (open
/// questions and strict-reading runs of the properness-sensitive claims
/// are documented but do not gate).
bool suite_passes(const std::vector<ClaimReport>& reports);

nlohmann::json report_json(const ClaimReport& r);

}  // namespace actlab
