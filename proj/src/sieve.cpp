#include "hyprepair/sieve.hpp"

#include "hyprepair/sexpr.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hyprepair {

std::size_t BitVec::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVec::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

BitVec BitVec::operator&(const BitVec& o) const {
  BitVec r(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

BitVec BitVec::operator|(const BitVec& o) const {
  BitVec r(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

BitVec BitVec::operator~() const {
  BitVec r(*this);
  for (auto& w : r.words_) w = ~w;
  r.clear_tail();
  return r;
}

void BitVec::clear_tail() {
  if (nbits_ % kWordBits != 0) words_.back() &= (Word{1} << (nbits_ % kWordBits)) - 1;
}

bool BitVec::implies(const BitVec& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

bool operator<(const BitVec& a, const BitVec& b) {
  if (a.nbits_ != b.nbits_) return a.nbits_ < b.nbits_;
  return std::lexicographical_compare(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
}

std::size_t BitVec::hash() const {
  std::size_t h = nbits_;
  for (auto w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string BitVec::to_string() const {
  std::string s(nbits_, '0');
  for (std::size_t i = 0; i < nbits_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

bool TruthVector::any_cex() const {
  for (std::size_t i = 0; i < num_cex; ++i) {
    if (bits.test(i)) return true;
  }
  return false;
}

bool TruthVector::any_wit() const {
  for (std::size_t i = num_cex; i < bits.size(); ++i) {
    if (bits.test(i)) return true;
  }
  return false;
}

namespace {

bool is_connective(const Term& t) {
  return t.is_app() && (t.name() == "and" || t.name() == "or" || t.name() == "not");
}

const Assignment& assignment_at(const TestBank& bank, std::size_t i) {
  return i < bank.cex.size() ? bank.cex[i] : bank.wit[i - bank.cex.size()];
}

std::variant<BitVec, InvalidCandidate> vector_of(const Term& t, const TestBank& bank, const DefTable& d) {
  const std::size_t n = bank.cex.size() + bank.wit.size();
  if (!is_connective(t)) {
    BitVec bits(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = assignment_at(bank, i);
      auto r = eval(t, a, d);
      if (auto* f = std::get_if<EvalFailure>(&r)) return InvalidCandidate{a, std::move(*f)};
      if (std::get<Value>(r).truthy()) bits.set(i);
    }
    return bits;
  }
  std::vector<BitVec> kids;
  for (const auto& a : t.args()) {
    auto r = vector_of(a, bank, d);
    if (auto* bad = std::get_if<InvalidCandidate>(&r)) return std::move(*bad);
    kids.push_back(std::get<BitVec>(std::move(r)));
  }
  if (t.name() == "not") {
    if (kids.size() != 1) throw std::invalid_argument("not takes one argument");
    return ~kids[0];
  }
  // Variadic and/or: the empty conjunction is t, the empty disjunction nil.
  BitVec acc(n);
  if (t.name() == "and") acc = ~acc;
  for (const auto& k : kids) acc = t.name() == "and" ? (acc & k) : (acc | k);
  return acc;
}

}  // namespace

std::variant<TruthVector, InvalidCandidate> truth_vector(const Term& t, const TestBank& bank, const DefTable& d) {
  auto r = vector_of(t, bank, d);
  if (auto* bad = std::get_if<InvalidCandidate>(&r)) return std::move(*bad);
  return TruthVector{std::get<BitVec>(std::move(r)), bank.cex.size()};
}

bool separates(const TruthVector& v) { return !v.any_cex() && v.any_wit(); }

bool redundant(const Term& t, const TestBank& bank, const DefTable& d) {
  if (!is_connective(t)) return false;
  if (t.name() == "and" || t.name() == "or") {
    std::vector<BitVec> kids;
    for (const auto& a : t.args()) {
      auto r = vector_of(a, bank, d);
      if (std::holds_alternative<InvalidCandidate>(r)) return false;
      kids.push_back(std::get<BitVec>(std::move(r)));
    }
    for (std::size_t i = 0; i < kids.size(); ++i) {
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        if (kids[i].implies(kids[j]) || kids[j].implies(kids[i])) return true;
      }
    }
  }
  return std::any_of(t.args().begin(), t.args().end(), [&](const Term& a) { return redundant(a, bank, d); });
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Unverified: return "unverified";
    case Status::LikelyValid: return "likely-valid";
    case Status::Refuted: return "refuted";
  }
  return "?";
}

bool suggestion_less(const Suggestion& a, const Suggestion& b) {
  if (a.complexity != b.complexity) return a.complexity < b.complexity;
  return print_term(a.term) < print_term(b.term);
}

Sieve::Outcome Sieve::admit(const Term& t) {
  auto r = truth_vector(t, bank_, defs_);
  if (std::holds_alternative<InvalidCandidate>(r)) {
    ++stats_.enumerated;
    ++stats_.invalid;
    return Outcome::Invalid;
  }
  return admit(t, std::get<TruthVector>(r), redundant(t, bank_, defs_));
}

Sieve::Outcome Sieve::admit(const Term& t, const TruthVector& v, bool is_redundant) {
  ++stats_.enumerated;
  if (is_redundant) {
    ++stats_.redundant;
    return Outcome::Redundant;
  }
  if (!separates(v)) {
    ++stats_.non_separating;
    return Outcome::NonSeparating;
  }

  const auto cx = complexity(t);
  for (const auto& k : kept_) {
    const bool dominated = v.bits.implies(k.vector.bits);
    const bool same = dominated && k.vector.bits.implies(v.bits);
    if (k.term == t || (dominated && !same) || (same && k.complexity < cx)) {
      ++stats_.subsumed;
      return Outcome::Subsumed;
    }
  }
  const auto before = kept_.size();
  std::erase_if(kept_, [&](const Suggestion& k) {
    if (!k.vector.bits.implies(v.bits)) return false;
    const bool same = v.bits.implies(k.vector.bits);
    return !same || k.complexity > cx;
  });
  stats_.subsumed += before - kept_.size();
  kept_.push_back(Suggestion{t, v, cx, Status::Unverified, std::nullopt});
  return Outcome::Kept;
}

std::vector<Suggestion> Sieve::suggestions() const {
  auto out = kept_;
  std::sort(out.begin(), out.end(), suggestion_less);
  return out;
}

}  // namespace hyprepair
