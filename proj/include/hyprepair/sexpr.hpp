#pragma once

#include "hyprepair/term.hpp"
#include "hyprepair/value.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyprepair {

/// Malformed input text. `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct FunctionDef {
  std::string name;
  std::vector<std::string> params;
  Term body = Term::hole();

  friend bool operator==(const FunctionDef&, const FunctionDef&) = default;
};

/// Binding of a conjecture's free variables, ordered by name.
using Assignment = std::map<std::string, Value>;

// Reading. Symbols are case-insensitive and canonicalized to lowercase;
// `nil` and `t` always read as the constants, never as variables or symbols.
Term parse_term(std::string_view text);
Value parse_value(std::string_view text);
std::vector<FunctionDef> parse_defs(std::string_view text);

// Printing. print_term is the canonical form: parse_term inverts it.
std::string print_value(const Value& v);
std::string print_term(const Term& t);
std::string print_assignment(const Assignment& a);
std::string print_def(const FunctionDef& def);

}  // namespace hyprepair
