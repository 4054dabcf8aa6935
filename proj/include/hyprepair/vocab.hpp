#pragma once

#include "hyprepair/lang.hpp"
#include "hyprepair/term.hpp"

#include <string>
#include <vector>

namespace hyprepair {

struct Signature {
  std::string name;
  int arity;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// Symbols that seed template generation for one conjecture.
struct Vocabulary {
  std::vector<std::string> primitive_preds;
  std::vector<std::string> comparators;
  std::vector<Signature> extra_preds;
  std::vector<Signature> term_fns;
  std::vector<Value> leaf_constants;
  std::vector<std::string> variables;
};

struct VocabOptions {
  unsigned def_depth = 1;
  std::vector<std::string> extra_preds;
  bool comparators = false;
  bool constants = false;
};

/// The fixed monadic type recognizers offered as predicates.
const std::vector<std::string>& primitive_predicates();

/// Connectives and primitive recognizers: never used as term functions.
bool is_excluded_term_fn(const std::string& name);

/// Level 0 is the goal's own function symbols; each further level adds the
/// symbols in the bodies of definitions collected so far. Sorted by name.
std::vector<Signature> mine_functions(const Term& goal, const DefTable& d, unsigned def_depth);

/// Throws std::invalid_argument for an unknown extra predicate.
Vocabulary build_vocabulary(const Term& goal, const DefTable& d, const VocabOptions& opts);

}  // namespace hyprepair
