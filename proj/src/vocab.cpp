#include "hyprepair/vocab.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hyprepair {

namespace {

void collect_fns(const Term& t, std::set<std::string>& out) {
  if (!t.is_app()) return;
  out.insert(t.name());
  for (const auto& a : t.args()) collect_fns(a, out);
}

const std::set<std::string>& connectives() {
  static const std::set<std::string> names = {"and", "or", "not", "implies", "if", "equal"};
  return names;
}

}  // namespace

const std::vector<std::string>& primitive_predicates() {
  static const std::vector<std::string> preds = {
      "consp",    "atom",     "stringp", "symbolp",  "integerp",   "rationalp",
      "numberp",  "natp",     "posp",    "booleanp", "characterp", "true-listp",
  };
  return preds;
}

bool is_excluded_term_fn(const std::string& name) {
  if (connectives().count(name)) return true;
  const auto& prims = primitive_predicates();
  return std::find(prims.begin(), prims.end(), name) != prims.end();
}

std::vector<Signature> mine_functions(const Term& goal, const DefTable& d, unsigned def_depth) {
  std::set<std::string> found;
  collect_fns(goal, found);
  std::set<std::string> expanded;
  for (unsigned level = 0; level < def_depth; ++level) {
    std::set<std::string> next = found;
    for (const auto& name : found) {
      if (!expanded.insert(name).second) continue;
      if (const auto* def = d.definition(name)) collect_fns(def->body, next);
    }
    if (next == found) break;
    found = std::move(next);
  }

  std::vector<Signature> out;
  for (const auto& name : found) {
    if (is_excluded_term_fn(name)) continue;
    const auto arity = d.arity(name);
    if (!arity || *arity == DefTable::kVariadic) continue;
    out.push_back({name, *arity});
  }
  return out;
}

Vocabulary build_vocabulary(const Term& goal, const DefTable& d, const VocabOptions& opts) {
  Vocabulary v;
  v.primitive_preds = primitive_predicates();
  if (opts.comparators) v.comparators = {"equal", "<<"};
  for (const auto& name : opts.extra_preds) {
    const auto arity = d.arity(name);
    if (!arity) throw std::invalid_argument("unknown extra predicate: " + name);
    if (*arity == DefTable::kVariadic || connectives().count(name)) {
      throw std::invalid_argument("extra predicate must be a fixed-arity function: " + name);
    }
    Signature sig{name, *arity};
    if (std::find(v.extra_preds.begin(), v.extra_preds.end(), sig) == v.extra_preds.end()) {
      v.extra_preds.push_back(sig);
    }
  }
  v.term_fns = mine_functions(goal, d, opts.def_depth);
  if (opts.comparators || opts.constants) {
    v.leaf_constants = {Value::integer(0), Value::integer(1), Value::t(), Value::nil()};
  }
  const auto vars = free_vars(goal);
  v.variables.assign(vars.begin(), vars.end());
  return v;
}

}  // namespace hyprepair
