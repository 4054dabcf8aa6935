#pragma once

#include "hyprepair/cgen.hpp"
#include "hyprepair/search.hpp"
#include "hyprepair/verify.hpp"
#include "hyprepair/vocab.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyprepair {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::optional<std::string> defs_path;
  /// Goal text, or "@path" to read it from a file.
  std::string goal;
  GenConfig gen;
  VerifyConfig verify;
  /// Derived from gen.seed when unset, so verification sees fresh data.
  std::optional<std::uint64_t> verify_seed;
  SearchConfig search;
  VocabOptions vocab;
  OutputFormat format = OutputFormat::Text;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitParse = 2,
  kExitNoCounterexamples = 3,
  kExitNoWitnesses = 4,
  kExitIff = 5,
  kExitCap = 6,
};

std::uint64_t derive_verify_seed(std::uint64_t bank_seed);

struct Report {
  std::string goal_text;  // canonical print
  Term goal = Term::hole();
  RunConfig config;
  std::uint64_t verify_seed = 0;
  TestBank bank;
  std::vector<Signature> term_fns;
  SearchStats stats;
  std::vector<Suggestion> suggestions;
  double seconds = 0;
};

struct RunOutcome {
  int exit_code = kExitOk;
  std::optional<Report> report;
  std::string message;  // set for failures
};

/// parse -> bank -> vocabulary -> search -> verify. Never throws for
/// user-facing failures; they come back as an exit code and message.
RunOutcome run(const RunConfig& cfg);

/// (implies h goal) as it would be written back into the source.
std::string repaired_conjecture(const Term& h, const Term& goal);

std::string render_text(const Report& r);
/// Key-sorted; contains no timing so identical runs match byte for byte.
nlohmann::json report_json(const Report& r);
std::string render(const Report& r, OutputFormat format);

}  // namespace hyprepair
