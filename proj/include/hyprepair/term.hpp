#pragma once

#include "hyprepair/value.hpp"

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace hyprepair {

enum class TermKind { Var, Const, App, Hole };

/// Immutable syntax tree: variable, quoted constant, or function
/// application. `Hole` leaves only appear in templates and never reach
/// the evaluator.
class Term {
 public:
  static Term var(std::string name);
  static Term constant(Value v);
  static Term app(std::string fn, std::vector<Term> args);
  static Term hole();

  TermKind kind() const { return node_->kind; }
  bool is_var() const { return kind() == TermKind::Var; }
  bool is_const() const { return kind() == TermKind::Const; }
  bool is_app() const { return kind() == TermKind::App; }
  bool is_hole() const { return kind() == TermKind::Hole; }

  /// Variable name or function symbol.
  const std::string& name() const { return node_->name; }
  const Value& value() const { return node_->value; }
  const std::vector<Term>& args() const { return node_->args; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    TermKind kind;
    std::string name;
    Value value;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const Term& t);

/// Node count; a constant counts 1 regardless of its size.
std::size_t complexity(const Term& t);

std::size_t hole_count(const Term& t);

/// Replaces holes left to right with `fillers` (must match hole_count).
Term fill_holes(const Term& t, const std::vector<Term>& fillers);

}  // namespace hyprepair
