#include "hyprepair/pipeline.hpp"

#include "hyprepair/sexpr.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hyprepair {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string big(const BigInt& n) { return n.str(); }

RunOutcome fail(int code, std::string message) { return RunOutcome{code, std::nullopt, std::move(message)}; }

}  // namespace

std::uint64_t derive_verify_seed(std::uint64_t bank_seed) { return bank_seed + 0x9E3779B97F4A7C15ULL; }

std::string repaired_conjecture(const Term& h, const Term& goal) {
  return print_term(Term::app("implies", {h, goal}));
}

RunOutcome run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();

  DefTable defs = DefTable::with_prelude();
  Term goal = Term::hole();
  try {
    if (cfg.defs_path) defs.add_all(parse_defs(read_file(*cfg.defs_path)));
    const auto text = !cfg.goal.empty() && cfg.goal.front() == '@' ? read_file(cfg.goal.substr(1)) : cfg.goal;
    goal = parse_term(text);
  } catch (const ParseError& e) {
    return fail(kExitParse, std::string("parse error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kExitParse, std::string("definition error: ") + e.what());
  } catch (const std::exception& e) {
    return fail(kExitError, e.what());
  }

  if (goal.is_app() && goal.name() == "iff") {
    return fail(kExitIff, "iff goals are not supported; split the goal into two implications and run each separately");
  }
  if (auto problem = check_term(goal, defs)) return fail(kExitParse, "goal error: " + *problem);

  Report report;
  report.goal = goal;
  report.goal_text = print_term(goal);
  report.config = cfg;
  report.verify_seed = cfg.verify_seed.value_or(derive_verify_seed(cfg.gen.seed));

  try {
    report.bank = build_bank(goal, cfg.gen, defs);
  } catch (const BankError& e) {
    const int code = e.reason() == BankError::Reason::NoCounterexamples ? kExitNoCounterexamples : kExitNoWitnesses;
    return fail(code, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kExitError, e.what());
  }

  Vocabulary vocab;
  try {
    vocab = build_vocabulary(goal, defs, cfg.vocab);
  } catch (const std::invalid_argument& e) {
    return fail(kExitParse, e.what());
  }
  report.term_fns = vocab.term_fns;

  try {
    auto result = search(report.bank, vocab, defs, cfg.search);
    report.stats = std::move(result.stats);
    report.suggestions = std::move(result.suggestions);
  } catch (const CandidateCapExceeded& e) {
    return fail(kExitCap, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kExitError, e.what());
  }

  VerifyConfig vcfg = cfg.verify;
  vcfg.seed = report.verify_seed;
  try {
    verify_all(report.suggestions, goal, vcfg, defs);
  } catch (const std::invalid_argument& e) {
    return fail(kExitError, e.what());
  }

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return RunOutcome{kExitOk, std::move(report), {}};
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  const auto& s = r.stats;
  out << "goal: " << r.goal_text << '\n';
  out << "bank: " << r.bank.cex.size() << " counterexamples, " << r.bank.wit.size() << " witnesses (seed "
      << r.config.gen.seed << ", " << r.bank.exhaustive_tried << " pool + " << r.bank.random_trials << " random trials)\n";
  out << "templates: " << s.boolean_patterns << " Boolean patterns x " << s.predicate_templates << " predicates = "
      << big(s.combined_templates) << " combined; " << s.term_templates << " term templates, " << s.leaves << " leaves\n";
  out << "candidates: " << big(s.enumerated) << " enumerated, " << big(s.invalid) << " invalid, " << big(s.redundant)
      << " redundant, " << big(s.non_separating) << " non-separating, " << big(s.subsumed) << " subsumed\n";

  if (r.suggestions.empty()) {
    out << "no suggestions found\n";
  } else {
    out << "suggestions: " << r.suggestions.size() << '\n';
    if (r.suggestions.size() > 1) out << "several hypotheses fit the tests; choose the one that matches your intent\n";
    std::size_t i = 0;
    for (const auto& sug : r.suggestions) {
      out << "  " << ++i << ". " << print_term(sug.term) << "  [complexity " << sug.complexity << ", "
          << to_string(sug.status) << "]\n";
      out << "     " << repaired_conjecture(sug.term, r.goal) << '\n';
      if (sug.refutation) out << "     refuted by " << print_assignment(*sug.refutation) << '\n';
    }
    out << "likely-valid: no falsifying assignment in " << r.config.verify.trials
        << " random trials plus the small pool; this is not a proof\n";
  }
  out << "time: " << std::fixed << std::setprecision(2) << r.seconds << " s\n";
  return out.str();
}

nlohmann::json report_json(const Report& r) {
  using nlohmann::json;
  const auto& c = r.config;
  json config = {
      {"seed", c.gen.seed},
      {"verify_seed", r.verify_seed},
      {"num_cex", c.gen.target_cex},
      {"num_wit", c.gen.target_wit},
      {"max_trials", c.gen.max_trials},
      {"size_budget", c.gen.size_budget},
      {"bool_depth", c.search.bool_depth},
      {"term_depth", c.search.term_depth},
      {"def_depth", c.vocab.def_depth},
      {"extra_preds", c.vocab.extra_preds},
      {"comparators", c.vocab.comparators},
      {"constants", c.vocab.constants},
      {"verify_trials", c.verify.trials},
      {"max_candidates", c.search.max_candidates},
  };

  json cex = json::array();
  for (const auto& a : r.bank.cex) cex.push_back(print_assignment(a));
  json wit = json::array();
  for (const auto& a : r.bank.wit) wit.push_back(print_assignment(a));
  json bank = {
      {"variables", r.bank.variables},
      {"counterexamples", cex},
      {"witnesses", wit},
      {"pool_tried", r.bank.exhaustive_tried},
      {"random_trials", r.bank.random_trials},
      {"eval_failures", r.bank.eval_failures},
  };

  json fns = json::array();
  for (const auto& f : r.term_fns) fns.push_back(f.name);

  const auto& s = r.stats;
  json templates = {
      {"boolean_patterns", s.boolean_patterns},
      {"predicate_templates", s.predicate_templates},
      {"term_templates", s.term_templates},
      {"leaves", s.leaves},
      {"combined", big(s.combined_templates)},
  };
  // Counts can exceed 64 bits, so they are decimal strings.
  json stats = {
      {"enumerated", big(s.enumerated)},
      {"invalid", big(s.invalid)},
      {"redundant", big(s.redundant)},
      {"non_separating", big(s.non_separating)},
      {"subsumed", big(s.subsumed)},
      {"suggested", big(s.suggested)},
  };

  json sugs = json::array();
  for (const auto& sug : r.suggestions) {
    sugs.push_back({
        {"term", print_term(sug.term)},
        {"complexity", sug.complexity},
        {"status", to_string(sug.status)},
        {"repaired", repaired_conjecture(sug.term, r.goal)},
        {"refutation", sug.refutation ? json(print_assignment(*sug.refutation)) : json(nullptr)},
        {"truth_vector", sug.vector.bits.to_string()},
    });
  }

  return json{
      {"goal", r.goal_text},
      {"config", config},
      {"bank", bank},
      {"term_functions", fns},
      {"templates", templates},
      {"statistics", stats},
      {"suggestions", sugs},
  };
}

std::string render(const Report& r, OutputFormat format) {
  if (format == OutputFormat::Json) return report_json(r).dump(2) + "\n";
  return render_text(r);
}

}  // namespace hyprepair
