#pragma once

#include "hyprepair/cgen.hpp"
#include "hyprepair/lang.hpp"
#include "hyprepair/sieve.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hyprepair {

struct VerifyConfig {
  std::uint64_t trials = 20'000;
  std::uint64_t seed = 0;
  unsigned size_budget = 8;
};

struct VerifyResult {
  Status status = Status::LikelyValid;
  /// First assignment with h truthy and the goal nil.
  std::optional<Assignment> refutation;
  std::uint64_t tested = 0;
  std::uint64_t eval_failures = 0;
};

/// Tests (implies h goal) on the small exhaustive pool, then on
/// cfg.trials fresh random assignments. Surviving every test gives
/// LikelyValid, which is not a proof.
VerifyResult verify(const Term& h, const Term& goal, const VerifyConfig& cfg, const DefTable& d);

/// Attaches a status to every suggestion; none are dropped.
void verify_all(std::vector<Suggestion>& suggestions, const Term& goal, const VerifyConfig& cfg, const DefTable& d);

}  // namespace hyprepair
