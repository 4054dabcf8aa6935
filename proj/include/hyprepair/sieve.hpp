#pragma once

#include "hyprepair/cgen.hpp"
#include "hyprepair/lang.hpp"
#include "hyprepair/term.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hyprepair {

/// Fixed-length bit set; two inline words cover the default bank size.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t nbits) : words_((nbits + kWordBits - 1) / kWordBits, 0), nbits_(nbits) {}

  std::size_t size() const { return nbits_; }
  std::size_t num_words() const { return words_.size(); }
  const Word* data() const { return words_.data(); }
  Word* data() { return words_.data(); }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  std::size_t count() const;
  bool none() const;

  BitVec operator&(const BitVec& o) const;
  BitVec operator|(const BitVec& o) const;
  BitVec operator~() const;

  /// Pointwise implication: every set bit of *this is set in `o`.
  bool implies(const BitVec& o) const;

  friend bool operator==(const BitVec& a, const BitVec& b) { return a.nbits_ == b.nbits_ && a.words_ == b.words_; }
  friend bool operator<(const BitVec& a, const BitVec& b);

  std::size_t hash() const;
  /// '0'/'1' per bit, index 0 first.
  std::string to_string() const;

 private:
  void clear_tail();

  boost::container::small_vector<Word, 2> words_;
  std::size_t nbits_ = 0;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

/// Truthiness of a term over the bank: counterexample bits first, then
/// witness bits, in bank order.
struct TruthVector {
  BitVec bits;
  std::size_t num_cex = 0;

  bool cex(std::size_t i) const { return bits.test(i); }
  bool wit(std::size_t i) const { return bits.test(num_cex + i); }
  std::size_t num_wit() const { return bits.size() - num_cex; }
  bool any_cex() const;
  bool any_wit() const;

  friend bool operator==(const TruthVector& a, const TruthVector& b) { return a.num_cex == b.num_cex && a.bits == b.bits; }
};

struct InvalidCandidate {
  Assignment assignment;
  EvalFailure failure;
};

/// Evaluates `t` on every bank assignment. and/or/not nodes combine their
/// children's vectors; every other subterm is evaluated by the interpreter
/// on its own, with a fresh step budget per assignment. Any failure makes
/// the whole candidate invalid.
std::variant<TruthVector, InvalidCandidate> truth_vector(const Term& t, const TestBank& bank, const DefTable& d);

/// Nil on every counterexample and truthy on at least one witness.
bool separates(const TruthVector& v);

/// Some and/or node has two children whose vectors are ordered by
/// implication (either way). Invalid subterms count as not redundant.
bool redundant(const Term& t, const TestBank& bank, const DefTable& d);

enum class Status { Unverified, LikelyValid, Refuted };
const char* to_string(Status s);

struct Suggestion {
  Term term;
  TruthVector vector;
  std::size_t complexity = 0;
  Status status = Status::Unverified;
  std::optional<Assignment> refutation;
};

/// Suggestion order for reports: complexity, then printed form.
bool suggestion_less(const Suggestion& a, const Suggestion& b);

struct SieveStats {
  std::uint64_t enumerated = 0;
  std::uint64_t invalid = 0;
  std::uint64_t non_separating = 0;
  std::uint64_t redundant = 0;
  std::uint64_t subsumed = 0;
};

/// Streaming admission of candidates into a set of maximally general,
/// minimally complex separating terms.
class Sieve {
 public:
  enum class Outcome { Invalid, Redundant, NonSeparating, Subsumed, Kept };

  Sieve(const TestBank& bank, const DefTable& d) : bank_(bank), defs_(d) {}

  /// Checks run in the order invalid, redundant, non-separating.
  Outcome admit(const Term& t);

  /// Admits a candidate whose vector is already known to be valid.
  Outcome admit(const Term& t, const TruthVector& v, bool is_redundant);

  const SieveStats& stats() const { return stats_; }
  /// Kept terms sorted by suggestion_less.
  std::vector<Suggestion> suggestions() const;

 private:
  const TestBank& bank_;
  const DefTable& defs_;
  std::vector<Suggestion> kept_;
  SieveStats stats_;
};

}  // namespace hyprepair
