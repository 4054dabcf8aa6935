#include "hyprepair/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace hyprepair;
  CLI::App app{"Suggest missing hypotheses for a conjecture that fails on tests."};

  RunConfig cfg;
  std::string defs;
  std::string format = "text";
  bool quiet = false;
  std::optional<std::uint64_t> verify_seed;

  app.add_option("--defs", defs, "File of defun forms added after the bundled prelude")->check(CLI::ExistingFile);
  app.add_option("--goal", cfg.goal, "Conjecture text, or @FILE")->required();
  app.add_option("--seed", cfg.gen.seed, "Seed for the test bank");
  app.add_option("--num-cex", cfg.gen.target_cex, "Counterexamples to collect")->check(CLI::PositiveNumber);
  app.add_option("--num-wit", cfg.gen.target_wit, "Witnesses to collect")->check(CLI::PositiveNumber);
  app.add_option("--max-trials", cfg.gen.max_trials, "Random trials for the test bank")->check(CLI::PositiveNumber);
  app.add_option("--bool-depth", cfg.search.bool_depth, "Connective nesting depth of Boolean patterns");
  app.add_option("--term-depth", cfg.search.term_depth, "Nesting depth of term templates")->check(CLI::PositiveNumber);
  app.add_option("--def-depth", cfg.vocab.def_depth, "Levels of definitions mined for term functions");
  app.add_option("--extra-pred", cfg.vocab.extra_preds, "Function used as an extra predicate (repeatable)");
  app.add_flag("--comparators", cfg.vocab.comparators, "Add equal and << as binary predicates");
  app.add_flag("--constants", cfg.vocab.constants, "Add 0, 1, t and nil as leaves");
  app.add_option("--verify-trials", cfg.verify.trials, "Random trials per suggestion")->check(CLI::PositiveNumber);
  app.add_option("--verify-seed", verify_seed, "Seed for verification (default: derived from --seed)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "json-like"}));
  app.add_option("--max-candidates", cfg.search.max_candidates, "Cap on items the search may hold")
      ->check(CLI::PositiveNumber);
  app.add_flag("-q,--quiet", quiet, "No progress lines on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  if (!defs.empty()) cfg.defs_path = defs;
  cfg.verify_seed = verify_seed;
  cfg.format = format == "text" ? OutputFormat::Text : OutputFormat::Json;

  const auto outcome = run(cfg);
  if (!outcome.report) {
    std::cerr << "hyprepair: " << outcome.message << '\n';
    return outcome.exit_code;
  }
  const auto& r = *outcome.report;
  if (!quiet) {
    std::cerr << "hyprepair: " << r.stats.boolean_patterns << " patterns, " << r.stats.predicate_templates
              << " predicate templates, " << r.stats.combined_templates.str() << " combined, "
              << r.stats.term_templates << " term templates, " << r.stats.enumerated.str() << " candidates\n";
  }
  std::cout << render(r, cfg.format);
  return kExitOk;
}
