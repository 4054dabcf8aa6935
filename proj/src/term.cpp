#include "hyprepair/term.hpp"

#include <stdexcept>

namespace hyprepair {

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{TermKind::Var, std::move(name), {}, {}}));
}

Term Term::constant(Value v) {
  return Term(std::make_shared<const Node>(Node{TermKind::Const, {}, std::move(v), {}}));
}

Term Term::app(std::string fn, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{TermKind::App, std::move(fn), {}, std::move(args)}));
}

Term Term::hole() {
  static const auto node = std::make_shared<const Node>(Node{TermKind::Hole, {}, {}, {}});
  return Term(node);
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Hole: return true;
    case TermKind::Var: return a.name() == b.name();
    case TermKind::Const: return a.value() == b.value();
    case TermKind::App: return a.name() == b.name() && a.args() == b.args();
  }
  return false;
}

namespace {
void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.name());
  } else if (t.is_app()) {
    for (const auto& a : t.args()) collect_vars(a, out);
  }
}

Term fill_from(const Term& t, const std::vector<Term>& fillers, std::size_t& next) {
  switch (t.kind()) {
    case TermKind::Hole: return fillers.at(next++);
    case TermKind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(fill_from(a, fillers, next));
      return Term::app(t.name(), std::move(args));
    }
    default: return t;
  }
}
}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

std::size_t complexity(const Term& t) {
  std::size_t n = 1;
  if (t.is_app()) {
    for (const auto& a : t.args()) n += complexity(a);
  }
  return n;
}

std::size_t hole_count(const Term& t) {
  if (t.is_hole()) return 1;
  std::size_t n = 0;
  if (t.is_app()) {
    for (const auto& a : t.args()) n += hole_count(a);
  }
  return n;
}

Term fill_holes(const Term& t, const std::vector<Term>& fillers) {
  std::size_t next = 0;
  Term out = fill_from(t, fillers, next);
  if (next != fillers.size()) throw std::invalid_argument("fill_holes: filler count does not match holes");
  return out;
}

}  // namespace hyprepair
