#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <string>

namespace hyprepair {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class ValueKind { Nil, True, Int, Rat, Char, Str, Sym, Pair };

const char* to_string(ValueKind kind);

/// Immutable datum of the term language. Copies share structure.
///
/// Numbers are kept canonical: a rational with denominator 1 is always
/// stored as an Int, so `kind()` alone tells integers from fractions.
class Value {
 public:
  Value() = default;  // nil

  static Value nil() { return Value(); }
  static Value t();
  static Value boolean(bool b) { return b ? t() : nil(); }
  static Value integer(BigInt n);
  static Value integer(std::int64_t n) { return integer(BigInt(n)); }
  static Value number(const BigRat& q);
  static Value character(char c);
  static Value string(std::string s);
  static Value symbol(std::string name);
  static Value cons(Value head, Value tail);

  ValueKind kind() const;

  bool is_nil() const { return node_ == nullptr; }
  bool truthy() const { return node_ != nullptr; }
  bool is_pair() const { return kind() == ValueKind::Pair; }
  bool is_number() const {
    auto k = kind();
    return k == ValueKind::Int || k == ValueKind::Rat;
  }

  // Accessors; calling one on the wrong kind is a logic error (asserted).
  const BigInt& as_int() const;
  const BigRat& as_rat() const;
  char as_char() const;
  const std::string& as_str() const;
  const std::string& as_sym() const;
  const Value& car() const;
  const Value& cdr() const;

  /// Numeric view; non-numbers coerce to 0.
  BigRat to_rational() const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  struct Node;
  explicit Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Total order over the whole value universe: kinds rank
/// nil < t < numbers < characters < strings < symbols < pairs; numbers by
/// value, strings and symbols lexicographically, pairs on (head, tail).
int compare_total(const Value& a, const Value& b);

/// Number of constructor nodes (a pair counts 1 plus its parts).
std::size_t value_size(const Value& v);

bool is_true_list(const Value& v);

}  // namespace hyprepair
