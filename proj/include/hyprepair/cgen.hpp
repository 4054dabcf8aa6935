#pragma once

#include "hyprepair/lang.hpp"
#include "hyprepair/sexpr.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyprepair {

/// Seeded generator with a platform-independent bounded draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

struct GenConfig {
  std::size_t target_cex = 50;
  std::size_t target_wit = 50;
  std::uint64_t max_trials = 100'000;
  std::uint64_t seed = 0;
  unsigned size_budget = 8;
};

struct TestBank {
  Term goal = Term::hole();
  std::vector<std::string> variables;
  std::vector<Assignment> cex;
  std::vector<Assignment> wit;

  // Diagnostics.
  std::size_t exhaustive_tried = 0;
  std::uint64_t random_trials = 0;
  std::uint64_t eval_failures = 0;
};

class BankError : public std::runtime_error {
 public:
  enum class Reason { NoCounterexamples, NoWitnesses };
  BankError(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Above this many cross-product assignments the exhaustive phase is skipped.
inline constexpr std::size_t kExhaustiveLimit = 10'000;

/// Draws from the weighted kind mix nil 10, t 5, integer 25, rational 10,
/// character 5, string 10, symbol 10, pair 25 (percent). A pair needs a
/// budget of at least 3 and splits what remains between head and tail.
Value sample_value(Rng& rng, unsigned size_budget);

Assignment sample_assignment(const std::vector<std::string>& vars, Rng& rng, unsigned size_budget);

/// The fixed pool of small values tried exhaustively before sampling:
/// nil, t, 0, 1, -1, 1/2, "", "a", sym, (nil), (1 2), (1 . 2).
const std::vector<Value>& small_value_pool();

/// Cross product of the small pool over `vars`, in odometer order; empty
/// when it would exceed kExhaustiveLimit.
std::vector<Assignment> exhaustive_assignments(const std::vector<std::string>& vars);

/// Truthiness of each proper application subterm of the goal under `a`
/// (preorder; '?' for an evaluation failure).
std::string behaviour_profile(const Term& goal, const Assignment& a, const DefTable& d);

/// Collects distinct counterexamples (goal evaluates to nil) and witnesses
/// (goal truthy). Everything found is grouped by behaviour_profile and the
/// lists are filled round-robin across groups. Throws BankError when either
/// list ends up empty.
TestBank build_bank(const Term& goal, const GenConfig& cfg, const DefTable& d);

}  // namespace hyprepair
