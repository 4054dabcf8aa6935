#include "hyprepair/tplgen.hpp"

#include "hyprepair/sexpr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hyprepair {

Template Template::of(Term skeleton) {
  const auto holes = hole_count(skeleton);
  return Template{std::move(skeleton), holes};
}

namespace {

Term holes_app(const std::string& fn, std::size_t arity) {
  return Term::app(fn, std::vector<Term>(arity, Term::hole()));
}

bool is_connective_node(const Term& t) {
  return t.is_app() && (t.name() == "and" || t.name() == "or" || t.name() == "not");
}

}  // namespace

unsigned pattern_depth(const Term& pattern) {
  if (!is_connective_node(pattern)) return 0;
  unsigned d = 0;
  for (const auto& a : pattern.args()) d = std::max(d, pattern_depth(a));
  return d + 1;
}

std::vector<Template> boolean_patterns(unsigned max_depth) {
  // level[k] holds the shapes of depth <= k, sorted by print.
  std::vector<Term> level = {Term::hole()};
  for (unsigned k = 1; k <= max_depth; ++k) {
    std::set<std::string> seen;
    std::vector<Term> next;
    auto add = [&](Term t) {
      if (seen.insert(print_term(t)).second) next.push_back(std::move(t));
    };
    for (const auto& x : level) add(x);
    for (const auto& x : level) add(Term::app("not", {x}));
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t j = 0; j < level.size(); ++j) {
        const auto& a = level[i];
        const auto& b = level[j];
        if (print_term(a) > print_term(b)) continue;
        add(Term::app("and", {a, b}));
        add(Term::app("or", {a, b}));
      }
    }
    level = std::move(next);
  }

  std::vector<std::pair<std::pair<unsigned, std::string>, Term>> keyed;
  for (auto& t : level) keyed.push_back({{pattern_depth(t), print_term(t)}, std::move(t)});
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Template> out;
  out.reserve(keyed.size());
  for (auto& [key, t] : keyed) out.push_back(Template::of(std::move(t)));
  return out;
}

std::vector<Template> predicate_templates(const Vocabulary& v) {
  std::vector<Template> out;
  for (const auto& p : v.primitive_preds) out.push_back(Template::of(holes_app(p, 1)));
  for (const auto& c : v.comparators) out.push_back(Template::of(holes_app(c, 2)));
  for (const auto& e : v.extra_preds) out.push_back(Template::of(holes_app(e.name, static_cast<std::size_t>(e.arity))));
  return out;
}

std::vector<Template> term_templates(const Vocabulary& v, unsigned depth) {
  if (depth == 0) throw std::invalid_argument("term depth must be at least 1");
  std::vector<Term> level = {Term::hole()};
  for (unsigned k = 1; k <= depth; ++k) {
    std::vector<Term> next = {Term::hole()};
    for (const auto& f : v.term_fns) {
      const auto arity = static_cast<std::size_t>(f.arity);
      MixedRadixCounter c(level.size(), arity);
      for (; !c.done(); c.advance()) {
        std::vector<Term> args;
        args.reserve(arity);
        for (auto digit : c.digits()) args.push_back(level[digit]);
        next.push_back(Term::app(f.name, std::move(args)));
      }
    }
    level = std::move(next);
  }

  std::vector<std::pair<std::string, Term>> keyed;
  for (auto& t : level) keyed.push_back({print_term(t), std::move(t)});
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Template> out;
  out.reserve(keyed.size());
  for (auto& [key, t] : keyed) out.push_back(Template::of(std::move(t)));
  return out;
}

std::vector<Term> leaf_terms(const Vocabulary& v) {
  std::vector<Term> out;
  for (const auto& name : v.variables) out.push_back(Term::var(name));
  for (const auto& c : v.leaf_constants) out.push_back(Term::constant(c));
  return out;
}

BigInt power(std::size_t base, std::size_t exponent) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::vector<std::size_t> decode_mixed_radix(const BigInt& index, std::size_t base, std::size_t digits) {
  if (index < 0 || index >= power(base, digits)) throw std::out_of_range("mixed-radix index out of range");
  std::vector<std::size_t> out(digits, 0);
  BigInt rest = index;
  for (std::size_t i = digits; i-- > 0;) {
    out[i] = static_cast<std::size_t>(rest % base);
    rest /= base;
  }
  return out;
}

MixedRadixCounter::MixedRadixCounter(std::size_t base, std::size_t digits)
    : base_(base), digits_(digits, 0), size_(power(base, digits)), done_(size_ == 0) {}

void MixedRadixCounter::advance() {
  if (done_) return;
  ++index_;
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < base_) return;
    digits_[i] = 0;
  }
  done_ = true;
}

CombineStream::CombineStream(std::vector<Template> patterns, std::vector<Template> preds)
    : patterns_(std::move(patterns)), preds_(std::move(preds)) {
  start_pattern();
}

void CombineStream::start_pattern() {
  counter_.reset();
  while (current_ < patterns_.size()) {
    counter_.emplace(preds_.size(), patterns_[current_].holes);
    if (!counter_->done()) return;
    ++current_;
  }
  counter_.reset();
}

std::optional<Combined> CombineStream::next() {
  if (!counter_) return std::nullopt;
  std::vector<Term> fillers;
  for (auto digit : counter_->digits()) fillers.push_back(preds_[digit].skeleton);
  Combined out{current_, Template::of(fill_holes(patterns_[current_].skeleton, fillers))};
  counter_->advance();
  if (counter_->done()) {
    ++current_;
    start_pattern();
  }
  return out;
}

BigInt CombineStream::total() const {
  BigInt sum = 0;
  for (const auto& p : patterns_) sum += power(preds_.size(), p.holes);
  return sum;
}

InstanceStream::InstanceStream(Template combined, std::vector<Template> term_tpls, std::vector<Term> leaves)
    : combined_(std::move(combined)),
      term_tpls_(std::move(term_tpls)),
      leaves_(std::move(leaves)),
      stage1_(term_tpls_.size(), combined_.holes),
      partial_(Term::hole()) {
  load_stage_one();
}

bool InstanceStream::load_stage_one() {
  stage2_.reset();
  while (!stage1_.done()) {
    std::vector<Term> fillers;
    for (auto digit : stage1_.digits()) fillers.push_back(term_tpls_[digit].skeleton);
    partial_ = fill_holes(combined_.skeleton, fillers);
    stage2_.emplace(leaves_.size(), hole_count(partial_));
    if (!stage2_->done()) return true;
    stage1_.advance();
  }
  stage2_.reset();
  return false;
}

std::optional<Term> InstanceStream::next() {
  if (!stage2_) return std::nullopt;
  std::vector<Term> fillers;
  for (auto digit : stage2_->digits()) fillers.push_back(leaves_[digit]);
  Term out = fill_holes(partial_, fillers);
  stage2_->advance();
  if (stage2_->done()) {
    stage1_.advance();
    load_stage_one();
  }
  return out;
}

BigInt InstanceStream::stage_one_size() const { return power(term_tpls_.size(), combined_.holes); }

BigInt InstanceStream::total() const {
  // Holes are filled independently, so the count factors per hole.
  BigInt per_hole = 0;
  for (const auto& t : term_tpls_) per_hole += power(leaves_.size(), t.holes);
  BigInt r = 1;
  for (std::size_t i = 0; i < combined_.holes; ++i) r *= per_hole;
  return r;
}

std::optional<Term> canonical_instance(const Term& pattern, const Term& ground) {
  if (!is_connective_node(pattern)) return ground;
  if (!ground.is_app() || ground.name() != pattern.name() || ground.args().size() != pattern.args().size()) {
    throw std::invalid_argument("ground term does not match pattern");
  }
  if (pattern.name() == "not") {
    auto inner = canonical_instance(pattern.args()[0], ground.args()[0]);
    if (!inner) return std::nullopt;
    return Term::app("not", {std::move(*inner)});
  }
  auto l = canonical_instance(pattern.args()[0], ground.args()[0]);
  if (!l) return std::nullopt;
  auto r = canonical_instance(pattern.args()[1], ground.args()[1]);
  if (!r) return std::nullopt;
  const auto pl = print_term(*l);
  const auto pr = print_term(*r);
  if (pattern.args()[0] == pattern.args()[1]) {
    if (pl > pr) return std::nullopt;
    return Term::app(pattern.name(), {std::move(*l), std::move(*r)});
  }
  if (pl > pr) std::swap(*l, *r);
  return Term::app(pattern.name(), {std::move(*l), std::move(*r)});
}

}  // namespace hyprepair
