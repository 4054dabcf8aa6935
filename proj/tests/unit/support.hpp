#pragma once

#include "hyprepair/lang.hpp"
#include "hyprepair/sexpr.hpp"

#include <gtest/gtest.h>

namespace hyprepair::testing {

inline const DefTable& prelude() {
  static const DefTable d = DefTable::with_prelude();
  return d;
}

inline Value run(std::string_view term, const Assignment& a = {}) {
  auto r = eval(parse_term(term), a, prelude());
  if (auto* f = std::get_if<EvalFailure>(&r)) throw std::runtime_error("eval failed: " + f->detail);
  return std::get<Value>(r);
}

inline std::string show(std::string_view term, const Assignment& a = {}) { return print_value(run(term, a)); }

inline Assignment bind(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  Assignment a;
  for (const auto& [k, v] : pairs) a.emplace(k, parse_value(v));
  return a;
}

}  // namespace hyprepair::testing
