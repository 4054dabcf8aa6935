#include "hyprepair/search.hpp"

#include "hyprepair/sexpr.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_map>

namespace hyprepair {

namespace {

// Multiplicities overflow loudly instead of wrapping.
using Count = boost::multiprecision::checked_uint128_t;
using Word = BitVec::Word;

BigInt to_big(const Count& c) { return BigInt(c.str()); }

struct Classes {
  std::vector<BitVec> vecs;
  std::vector<Count> counts;
  std::vector<unsigned> cx;
  std::vector<std::vector<Term>> terms;  // filled for atoms only
  std::unordered_map<BitVec, std::size_t, BitVecHash> index;

  std::size_t size() const { return vecs.size(); }

  /// Returns true when a new class was created.
  bool add(const BitVec& v, const Count& n, unsigned c) {
    auto [it, fresh] = index.try_emplace(v, vecs.size());
    if (fresh) {
      vecs.push_back(v);
      counts.push_back(n);
      cx.push_back(c);
      return true;
    }
    counts[it->second] += n;
    cx[it->second] = std::min(cx[it->second], c);
    return false;
  }

  void sort() {
    std::vector<std::size_t> perm(vecs.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return vecs[a] < vecs[b]; });
    Classes out;
    for (auto p : perm) {
      out.index.emplace(vecs[p], out.vecs.size());
      out.vecs.push_back(std::move(vecs[p]));
      out.counts.push_back(counts[p]);
      out.cx.push_back(cx[p]);
      if (!terms.empty()) out.terms.push_back(std::move(terms[p]));
    }
    *this = std::move(out);
  }
};

struct ShapeData {
  Count total = 0;
  Count valid = 0;
  Classes classes;  // valid, non-redundant instances grouped by vector
};

using Targets = std::unordered_map<BitVec, unsigned, BitVecHash>;
using Expanded = std::unordered_map<BitVec, std::vector<Term>, BitVecHash>;

bool is_binary(const Term& s) { return s.is_app() && (s.name() == "and" || s.name() == "or"); }
bool is_not(const Term& s) { return s.is_app() && s.name() == "not"; }

Count unordered_pairs(const Count& n) { return n * (n + 1) / 2; }

Term ordered_app(const std::string& op, const Term& a, const Term& b) {
  if (print_term(a) <= print_term(b)) return Term::app(op, {a, b});
  return Term::app(op, {b, a});
}

class Engine {
 public:
  Engine(const TestBank& bank, const Vocabulary& v, const DefTable& d, const SearchConfig& cfg)
      : bank_(bank), vocab_(v), defs_(d), cfg_(cfg), nbits_(bank.cex.size() + bank.wit.size()), cex_mask_(nbits_) {
    for (std::size_t i = 0; i < bank.cex.size(); ++i) cex_mask_.set(i);
    words_ = cex_mask_.num_words();
  }

  SearchResult run();

 private:
  void bump(std::uint64_t n = 1) {
    stats_.materialized += n;
    if (stats_.materialized > cfg_.max_candidates) throw CandidateCapExceeded(cfg_.max_candidates);
  }

  void eval_atoms();
  const ShapeData& shape(const Term& s);
  std::pair<Count, Count> totals(const Term& s);
  Expanded expand(const Term& s, const Targets& targets);

  // Calls f(result, i, j) for each pair of classes whose vectors are
  // incomparable; same-shape children take each unordered pair once.
  template <class F>
  void for_each_pair(const Classes& a, const Classes& b, bool same, bool is_and, F&& f) const {
    BitVec tmp(nbits_);
    Word* pt = tmp.data();
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Word* pa = a.vecs[i].data();
      for (std::size_t j = same ? i + 1 : 0; j < b.size(); ++j) {
        const Word* pb = b.vecs[j].data();
        bool a_in_b = true;
        bool b_in_a = true;
        for (std::size_t k = 0; k < words_; ++k) {
          if (pa[k] & ~pb[k]) a_in_b = false;
          if (pb[k] & ~pa[k]) b_in_a = false;
        }
        if (a_in_b || b_in_a) continue;
        for (std::size_t k = 0; k < words_; ++k) pt[k] = is_and ? (pa[k] & pb[k]) : (pa[k] | pb[k]);
        f(tmp, i, j);
      }
    }
  }

  bool separating(const BitVec& v) const {
    const Word* pv = v.data();
    const Word* pm = cex_mask_.data();
    bool any_wit = false;
    for (std::size_t k = 0; k < words_; ++k) {
      if (pv[k] & pm[k]) return false;
      if (pv[k] & ~pm[k]) any_wit = true;
    }
    return any_wit;
  }

  const TestBank& bank_;
  const Vocabulary& vocab_;
  const DefTable& defs_;
  SearchConfig cfg_;
  std::size_t nbits_;
  std::size_t words_ = 0;
  BitVec cex_mask_;
  SearchStats stats_;
  std::map<std::string, ShapeData> memo_;

  // Root accumulation.
  Count sep_total_ = 0;
  Targets sep_min_;
};

void Engine::eval_atoms() {
  ShapeData atoms;
  const auto tts = term_templates(vocab_, cfg_.term_depth);
  const auto leaves = leaf_terms(vocab_);
  for (const auto& p : predicate_templates(vocab_)) {
    InstanceStream stream(p, tts, leaves);
    while (auto t = stream.next()) {
      bump();
      ++atoms.total;
      auto r = truth_vector(*t, bank_, defs_);
      if (std::holds_alternative<InvalidCandidate>(r)) continue;
      ++atoms.valid;
      const auto& bits = std::get<TruthVector>(r).bits;
      const auto c = static_cast<unsigned>(complexity(*t));
      auto& cls = atoms.classes;
      if (cls.add(bits, 1, c)) {
        bump();
        cls.terms.push_back({*t});
      } else {
        auto& ties = cls.terms[cls.index.at(bits)];
        const auto best = complexity(ties.front());
        if (c < best) ties = {*t};
        else if (c == best) ties.push_back(*t);
      }
    }
  }
  atoms.classes.sort();
  memo_.emplace(print_term(Term::hole()), std::move(atoms));
}

const ShapeData& Engine::shape(const Term& s) {
  const auto key = print_term(s);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  ShapeData out;
  if (is_not(s)) {
    const auto& child = shape(s.args()[0]);
    out.total = child.total;
    out.valid = child.valid;
    for (std::size_t i = 0; i < child.classes.size(); ++i) {
      bump();
      out.classes.add(~child.classes.vecs[i], child.classes.counts[i], child.classes.cx[i] + 1);
    }
  } else if (is_binary(s)) {
    const bool same = s.args()[0] == s.args()[1];
    const auto& a = shape(s.args()[0]);
    const auto& b = shape(s.args()[1]);
    if (same) {
      out.total = unordered_pairs(a.total);
      out.valid = unordered_pairs(a.valid);
    } else {
      out.total = a.total * b.total;
      out.valid = a.valid * b.valid;
    }
    for_each_pair(a.classes, b.classes, same, s.name() == "and", [&](const BitVec& r, std::size_t i, std::size_t j) {
      if (out.classes.add(r, a.classes.counts[i] * b.classes.counts[j], 1 + a.classes.cx[i] + b.classes.cx[j])) bump();
    });
  } else {
    throw std::logic_error("unexpected Boolean shape: " + key);
  }
  out.classes.sort();
  return memo_.emplace(key, std::move(out)).first->second;
}

std::pair<Count, Count> Engine::totals(const Term& s) {
  if (s.is_hole() || is_not(s)) {
    const auto& d = shape(s.is_hole() ? s : s.args()[0]);
    return {d.total, d.valid};
  }
  const auto [ta, va] = totals(s.args()[0]);
  if (s.args()[0] == s.args()[1]) return {unordered_pairs(ta), unordered_pairs(va)};
  const auto [tb, vb] = totals(s.args()[1]);
  return {ta * tb, va * vb};
}

Expanded Engine::expand(const Term& s, const Targets& targets) {
  Expanded out;
  if (targets.empty()) return out;
  if (s.is_hole()) {
    const auto& atoms = shape(s).classes;
    for (const auto& [v, c] : targets) {
      auto it = atoms.index.find(v);
      if (it != atoms.index.end() && atoms.cx[it->second] == c) out[v] = atoms.terms[it->second];
    }
    return out;
  }
  if (is_not(s)) {
    Targets inner;
    for (const auto& [v, c] : targets) {
      if (c > 0) inner.emplace(~v, c - 1);
    }
    for (auto& [v, terms] : expand(s.args()[0], inner)) {
      auto& dst = out[~v];
      for (auto& t : terms) dst.push_back(Term::app("not", {std::move(t)}));
    }
    return out;
  }

  const bool same = s.args()[0] == s.args()[1];
  const auto& a = shape(s.args()[0]).classes;
  const auto& b = shape(s.args()[1]).classes;
  struct Hit {
    BitVec vec;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Hit> hits;
  for_each_pair(a, b, same, s.name() == "and", [&](const BitVec& r, std::size_t i, std::size_t j) {
    auto it = targets.find(r);
    if (it != targets.end() && 1 + a.cx[i] + b.cx[j] == it->second) hits.push_back({r, i, j});
  });
  if (hits.empty()) return out;

  Targets ta;
  Targets tb;
  for (const auto& h : hits) {
    ta.emplace(a.vecs[h.i], a.cx[h.i]);
    (same ? ta : tb).emplace(b.vecs[h.j], b.cx[h.j]);
  }
  const auto ea = expand(s.args()[0], ta);
  const auto eb = same ? Expanded{} : expand(s.args()[1], tb);
  const auto& eb_ref = same ? ea : eb;
  for (const auto& h : hits) {
    const auto& left = ea.at(a.vecs[h.i]);
    const auto& right = eb_ref.at(b.vecs[h.j]);
    auto& dst = out[h.vec];
    for (const auto& l : left) {
      for (const auto& r : right) dst.push_back(ordered_app(s.name(), l, r));
    }
  }
  return out;
}

SearchResult Engine::run() {
  const auto patterns = boolean_patterns(cfg_.bool_depth);
  const auto preds = predicate_templates(vocab_);
  stats_.boolean_patterns = patterns.size();
  stats_.predicate_templates = preds.size();
  stats_.term_templates = term_templates(vocab_, cfg_.term_depth).size();
  stats_.leaves = leaf_terms(vocab_).size();
  stats_.combined_templates = CombineStream(patterns, preds).total();

  eval_atoms();

  Count enumerated = 0, invalid = 0, redundant = 0, nonred = 0;
  for (const auto& pat : patterns) {
    const Term& s = pat.skeleton;
    const auto [total, valid] = totals(s);
    Count shape_nonred = 0;
    auto feed = [&](const BitVec& v, const Count& n, unsigned c) {
      shape_nonred += n;
      if (!separating(v)) return;
      sep_total_ += n;
      auto [it, fresh] = sep_min_.try_emplace(v, c);
      if (fresh) bump();
      else it->second = std::min(it->second, c);
    };
    if (s.is_hole() || is_not(s)) {
      const auto& child = shape(s.is_hole() ? s : s.args()[0]).classes;
      const unsigned extra = s.is_hole() ? 0 : 1;
      for (std::size_t i = 0; i < child.size(); ++i) {
        feed(s.is_hole() ? child.vecs[i] : ~child.vecs[i], child.counts[i], child.cx[i] + extra);
      }
    } else {
      const bool same = s.args()[0] == s.args()[1];
      const auto& a = shape(s.args()[0]).classes;
      const auto& b = shape(s.args()[1]).classes;
      for_each_pair(a, b, same, s.name() == "and", [&](const BitVec& r, std::size_t i, std::size_t j) {
        feed(r, a.counts[i] * b.counts[j], 1 + a.cx[i] + b.cx[j]);
      });
    }
    enumerated += total;
    invalid += total - valid;
    redundant += valid - shape_nonred;
    nonred += shape_nonred;
  }

  // Maximal separating vectors. A strict dominator has more set bits, so
  // checking against the maximal vectors seen so far suffices.
  std::vector<std::pair<BitVec, unsigned>> entries(sep_min_.begin(), sep_min_.end());
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    const auto cx = x.first.count();
    const auto cy = y.first.count();
    return cx != cy ? cx > cy : x.first < y.first;
  });
  Targets maximal;
  std::vector<const BitVec*> kept;
  for (const auto& [v, c] : entries) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const BitVec* m) { return v.implies(*m); });
    if (dominated) continue;
    kept.push_back(&v);
    maximal.emplace(v, c);
  }

  SearchResult result;
  for (const auto& pat : patterns) {
    for (auto& [v, terms] : expand(pat.skeleton, maximal)) {
      for (auto& t : terms) {
        const auto cx = complexity(t);
        if (cx != maximal.at(v)) throw std::logic_error("expanded term has unexpected complexity");
        result.suggestions.push_back(Suggestion{std::move(t), TruthVector{v, bank_.cex.size()}, cx, Status::Unverified, std::nullopt});
      }
    }
  }
  std::sort(result.suggestions.begin(), result.suggestions.end(), suggestion_less);

  stats_.enumerated = to_big(enumerated);
  stats_.invalid = to_big(invalid);
  stats_.redundant = to_big(redundant);
  stats_.non_separating = to_big(nonred - sep_total_);
  stats_.suggested = result.suggestions.size();
  stats_.subsumed = to_big(sep_total_) - stats_.suggested;
  result.stats = stats_;
  return result;
}

}  // namespace

SearchResult search(const TestBank& bank, const Vocabulary& v, const DefTable& d, const SearchConfig& cfg) {
  try {
    return Engine(bank, v, d, cfg).run();
  } catch (const std::overflow_error&) {
    throw CandidateCapExceeded(cfg.max_candidates);
  }
}

SearchResult search_streaming(const TestBank& bank, const Vocabulary& v, const DefTable& d, const SearchConfig& cfg) {
  const auto patterns = boolean_patterns(cfg.bool_depth);
  const auto preds = predicate_templates(v);
  const auto tts = term_templates(v, cfg.term_depth);
  const auto leaves = leaf_terms(v);

  SearchResult result;
  result.stats.boolean_patterns = patterns.size();
  result.stats.predicate_templates = preds.size();
  result.stats.term_templates = tts.size();
  result.stats.leaves = leaves.size();

  CombineStream combined(patterns, preds);
  result.stats.combined_templates = combined.total();
  Sieve sieve(bank, d);
  while (auto c = combined.next()) {
    InstanceStream stream(c->tpl, tts, leaves);
    while (auto g = stream.next()) {
      auto canon = canonical_instance(patterns[c->pattern].skeleton, *g);
      if (!canon) continue;
      if (sieve.stats().enumerated >= cfg.max_candidates) throw CandidateCapExceeded(cfg.max_candidates);
      sieve.admit(*canon);
    }
  }

  const auto& s = sieve.stats();
  result.suggestions = sieve.suggestions();
  result.stats.enumerated = s.enumerated;
  result.stats.invalid = s.invalid;
  result.stats.redundant = s.redundant;
  result.stats.non_separating = s.non_separating;
  result.stats.subsumed = s.subsumed;
  result.stats.suggested = result.suggestions.size();
  result.stats.materialized = s.enumerated;
  return result;
}

}  // namespace hyprepair
