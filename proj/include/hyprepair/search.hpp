#pragma once

#include "hyprepair/cgen.hpp"
#include "hyprepair/sieve.hpp"
#include "hyprepair/tplgen.hpp"
#include "hyprepair/vocab.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hyprepair {

struct SearchConfig {
  unsigned bool_depth = 2;
  unsigned term_depth = 1;
  std::uint64_t max_candidates = 5'000'000;
};

struct SearchStats {
  // Every canonical candidate lands in exactly one bucket:
  // enumerated = invalid + redundant + non_separating + subsumed + suggested.
  BigInt enumerated = 0;
  BigInt invalid = 0;
  BigInt redundant = 0;
  BigInt non_separating = 0;
  BigInt subsumed = 0;
  BigInt suggested = 0;

  std::size_t boolean_patterns = 0;
  std::size_t predicate_templates = 0;
  std::size_t term_templates = 0;
  std::size_t leaves = 0;
  BigInt combined_templates = 0;

  /// Items held in memory by the search: evaluated atoms plus vector
  /// classes (class search) or admitted candidates (streaming search).
  std::uint64_t materialized = 0;
};

struct SearchResult {
  std::vector<Suggestion> suggestions;  // sorted by suggestion_less
  SearchStats stats;
};

class CandidateCapExceeded : public std::runtime_error {
 public:
  explicit CandidateCapExceeded(std::uint64_t cap)
      : std::runtime_error("candidate cap exceeded (" + std::to_string(cap) + "); lower the depths or raise --max-candidates") {}
};

/// Exact search that groups candidates by truth vector instead of
/// evaluating each one. Atoms (predicate instances) are evaluated once;
/// Boolean shapes are built from per-vector classes with multiplicities.
/// The result and statistics equal those of search_streaming.
SearchResult search(const TestBank& bank, const Vocabulary& v, const DefTable& d, const SearchConfig& cfg);

/// Literal enumeration: every canonical ground candidate is streamed
/// through a Sieve. Only practical for small vocabularies and depths.
SearchResult search_streaming(const TestBank& bank, const Vocabulary& v, const DefTable& d, const SearchConfig& cfg);

}  // namespace hyprepair
