#pragma once

#include "hyprepair/term.hpp"
#include "hyprepair/value.hpp"
#include "hyprepair/vocab.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyprepair {

/// A term whose leaves may be holes, filled left to right.
struct Template {
  Term skeleton;
  std::size_t holes = 0;

  static Template of(Term skeleton);
  friend bool operator==(const Template& a, const Template& b) { return a.skeleton == b.skeleton; }
};

/// Shapes over binary and/or, unary not, and holes with connective nesting
/// depth <= max_depth (every connective counts one level). The bare hole is
/// always first. Commutative nodes keep one ordering per unordered pair of
/// child shapes: (and X Y) with print(X) <= print(Y).
std::vector<Template> boolean_patterns(unsigned max_depth);

/// Connective nesting depth of a Boolean pattern.
unsigned pattern_depth(const Term& pattern);

/// One template per primitive predicate, comparator, then extra predicate.
std::vector<Template> predicate_templates(const Vocabulary& v);

/// Skeletons over the term functions up to `depth` levels, plus the bare
/// hole; sorted by printed form (the bare hole sorts last).
std::vector<Template> term_templates(const Vocabulary& v, unsigned depth);

/// Leaves for the final filling stage: variables, then constants.
std::vector<Term> leaf_terms(const Vocabulary& v);

/// Most-significant-first digits of `index` in base `base`.
/// Throws std::out_of_range unless 0 <= index < base^digits.
std::vector<std::size_t> decode_mixed_radix(const BigInt& index, std::size_t base, std::size_t digits);

BigInt power(std::size_t base, std::size_t exponent);

/// Odometer over base^digits, most significant digit first.
class MixedRadixCounter {
 public:
  MixedRadixCounter(std::size_t base, std::size_t digits);

  bool done() const { return done_; }
  const std::vector<std::size_t>& digits() const { return digits_; }
  const BigInt& index() const { return index_; }
  const BigInt& size() const { return size_; }
  void advance();

 private:
  std::size_t base_;
  std::vector<std::size_t> digits_;
  BigInt index_ = 0;
  BigInt size_;
  bool done_;
};

struct Combined {
  std::size_t pattern;  // index into the pattern list
  Template tpl;
};

/// Lazy cross product: each pattern hole independently receives one
/// predicate template.
class CombineStream {
 public:
  CombineStream(std::vector<Template> patterns, std::vector<Template> preds);
  std::optional<Combined> next();

  /// Sum over patterns of |preds|^holes.
  BigInt total() const;

 private:
  void start_pattern();

  std::vector<Template> patterns_;
  std::vector<Template> preds_;
  std::size_t current_ = 0;
  std::optional<MixedRadixCounter> counter_;
};

/// Two nested lazy stages over one combined template: every hole gets a
/// term template (first counter), then every remaining hole gets a leaf
/// (second counter). One ground term is built per call to next().
class InstanceStream {
 public:
  InstanceStream(Template combined, std::vector<Template> term_tpls, std::vector<Term> leaves);

  std::optional<Term> next();

  /// Size of the first stage: |term_tpls|^holes.
  BigInt stage_one_size() const;
  /// Total number of terms the stream yields.
  BigInt total() const;

 private:
  bool load_stage_one();

  Template combined_;
  std::vector<Template> term_tpls_;
  std::vector<Term> leaves_;
  MixedRadixCounter stage1_;
  Term partial_;
  std::optional<MixedRadixCounter> stage2_;
};

/// Puts every and/or node of a ground instance of `pattern` into canonical
/// child order. Returns nullopt when the instance is the non-canonical twin
/// of another instance (a node whose two child shapes are identical and
/// whose children are out of order), so each unordered pair is kept once.
std::optional<Term> canonical_instance(const Term& pattern, const Term& ground);

}  // namespace hyprepair
