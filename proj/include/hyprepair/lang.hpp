#pragma once

#include "hyprepair/sexpr.hpp"
#include "hyprepair/term.hpp"
#include "hyprepair/value.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace hyprepair {

inline constexpr std::uint64_t kDefaultStepBudget = 100'000;

/// Nesting limit for function calls; exceeding it is reported as budget
/// exhaustion.
inline constexpr unsigned kMaxCallDepth = 2'000;

enum class Builtin {
  Cons, Car, Cdr, Consp, Atom, Equal, Not, And, Or, Implies, If,
  Less, LessEq, Plus, Times, Minus, Stringp, Symbolp, Integerp, Rationalp,
  Numberp, Natp, Posp, Booleanp, Characterp, Coerce, TotalLess,
};

/// Symbol table: the builtins, the bundled prelude, and user definitions.
/// Immutable once loading is done, so it can be shared across evaluations.
class DefTable {
 public:
  static constexpr int kVariadic = -1;

  /// Builtins only.
  DefTable();

  /// Builtins plus the bundled prelude definitions.
  static DefTable with_prelude();

  /// Adds user definitions; redefinition of any known symbol throws.
  void add(const FunctionDef& def);
  void add_all(const std::vector<FunctionDef>& defs);

  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  std::optional<int> arity(const std::string& name) const;
  std::optional<Builtin> builtin(const std::string& name) const;

  /// Definition for a defined (non-builtin) function, or nullptr.
  const FunctionDef* definition(const std::string& name) const;

  /// Names of defined (non-builtin) functions in load order.
  const std::vector<std::string>& defined_names() const { return order_; }

 private:
  struct Entry {
    int arity;
    std::optional<Builtin> builtin;
    std::size_t def_index;
  };
  std::unordered_map<std::string, Entry> entries_;
  std::vector<FunctionDef> defs_;
  std::vector<std::string> order_;
};

/// Source text of the bundled prelude.
std::string_view prelude_text();

struct EvalFailure {
  enum class Kind { BudgetExhausted, UnknownFunction, ArityMismatch, UnboundVariable };
  Kind kind;
  std::string detail;
};

const char* to_string(EvalFailure::Kind kind);

using EvalResult = std::variant<Value, EvalFailure>;

/// Total, deterministic evaluation. Every App reduction costs one step.
/// car/cdr of non-pairs give nil; arithmetic treats non-numbers as 0.
EvalResult eval(const Term& t, const Assignment& a, const DefTable& d,
                std::uint64_t step_budget = kDefaultStepBudget);

/// Checks every application against the table (known symbol, right arity).
/// Returns a description of the first problem found.
std::optional<std::string> check_term(const Term& t, const DefTable& d);

}  // namespace hyprepair
