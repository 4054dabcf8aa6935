#include "hyprepair/verify.hpp"

#include <stdexcept>

namespace hyprepair {

VerifyResult verify(const Term& h, const Term& goal, const VerifyConfig& cfg, const DefTable& d) {
  if (cfg.trials == 0) throw std::invalid_argument("verify trials must be at least 1");
  const auto vars = free_vars(goal);
  const std::vector<std::string> names(vars.begin(), vars.end());
  const Term conjecture = Term::app("implies", {h, goal});

  VerifyResult result;
  auto test = [&](const Assignment& a) {
    ++result.tested;
    const auto r = eval(conjecture, a, d);
    if (const auto* v = std::get_if<Value>(&r)) {
      if (!v->truthy()) {
        result.status = Status::Refuted;
        result.refutation = a;
        return true;
      }
    } else {
      ++result.eval_failures;
    }
    return false;
  };

  for (const auto& a : exhaustive_assignments(names)) {
    if (test(a)) return result;
  }
  Rng rng(cfg.seed);
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    if (test(sample_assignment(names, rng, cfg.size_budget))) return result;
  }
  return result;
}

void verify_all(std::vector<Suggestion>& suggestions, const Term& goal, const VerifyConfig& cfg, const DefTable& d) {
  for (auto& s : suggestions) {
    auto r = verify(s.term, goal, cfg, d);
    s.status = r.status;
    s.refutation = std::move(r.refutation);
  }
}

}  // namespace hyprepair
