#pragma once

// Brute-force counterparts of the lazy enumerators.

#include "hyprepair/sexpr.hpp"
#include "hyprepair/tplgen.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hyprepair::enumeration {

/// Compares decode_mixed_radix and MixedRadixCounter against a plain
/// odometer for every index. Returns the first disagreement.
inline std::optional<std::string> check_odometer(std::size_t max_base, std::size_t max_digits) {
  for (std::size_t base = 1; base <= max_base; ++base) {
    for (std::size_t digits = 0; digits <= max_digits; ++digits) {
      std::vector<std::size_t> odo(digits, 0);
      MixedRadixCounter counter(base, digits);
      const auto total = power(base, digits);
      for (BigInt i = 0; i < total; ++i) {
        std::ostringstream where;
        where << "base " << base << " digits " << digits << " index " << i;
        if (decode_mixed_radix(i, base, digits) != odo) return "decode mismatch at " + where.str();
        if (counter.done() || counter.digits() != odo || counter.index() != i) return "counter mismatch at " + where.str();
        counter.advance();
        for (std::size_t k = digits; k-- > 0;) {
          if (++odo[k] < base) break;
          odo[k] = 0;
        }
      }
      if (!counter.done()) return "counter overruns base " + std::to_string(base);
    }
  }
  return std::nullopt;
}

/// Fills holes one at a time, expanding every option.
inline void fill_all(const Term& t, const std::vector<Term>& options, std::vector<Term>& out) {
  std::vector<std::vector<Term>> partial = {{}};
  for (std::size_t i = 0, h = hole_count(t); i < h; ++i) {
    std::vector<std::vector<Term>> next;
    for (const auto& p : partial) {
      for (const auto& o : options) {
        auto q = p;
        q.push_back(o);
        next.push_back(std::move(q));
      }
    }
    partial = std::move(next);
  }
  for (const auto& p : partial) out.push_back(fill_holes(t, p));
}

inline std::vector<Term> cross_product(const Template& combined, const std::vector<Template>& tts,
                                       const std::vector<Term>& leaves) {
  std::vector<Term> skeletons;
  for (const auto& t : tts) skeletons.push_back(t.skeleton);
  std::vector<Term> stage1;
  fill_all(combined.skeleton, skeletons, stage1);
  std::vector<Term> out;
  for (const auto& s : stage1) fill_all(s, leaves, out);
  return out;
}

/// InstanceStream output against the cross product: same set, no
/// duplicates, and a total() that matches the count.
inline std::optional<std::string> check_instances(const Template& combined, const std::vector<Template>& tts,
                                                  const std::vector<Term>& leaves) {
  InstanceStream s(combined, tts, leaves);
  std::set<std::string> got;
  std::size_t n = 0;
  while (auto t = s.next()) {
    ++n;
    if (!got.insert(print_term(*t)).second) return "duplicate " + print_term(*t);
  }
  std::set<std::string> want;
  for (const auto& t : cross_product(combined, tts, leaves)) want.insert(print_term(t));
  const auto ctx = " in " + print_term(combined.skeleton);
  if (BigInt(n) != s.total()) return "total() disagrees with stream length" + ctx;
  if (got != want) return "stream and cross product differ" + ctx;
  return std::nullopt;
}

}  // namespace hyprepair::enumeration
