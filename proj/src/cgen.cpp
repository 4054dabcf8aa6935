#include "hyprepair/cgen.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace hyprepair {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  // Rejection sampling keeps the draw unbiased and identical everywhere.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r = engine_();
  while (r >= limit) r = engine_();
  return r % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

enum class Draw { Nil, True, Int, Rat, Char, Str, Sym, Pair };

struct Weighted {
  Draw kind;
  unsigned weight;
};

// Pair is last so that dropping it is a prefix of the table.
constexpr std::array<Weighted, 8> kMix = {{
    {Draw::Nil, 10}, {Draw::True, 5}, {Draw::Int, 25}, {Draw::Rat, 10},
    {Draw::Char, 5}, {Draw::Str, 10}, {Draw::Sym, 10}, {Draw::Pair, 25},
}};

constexpr char kCharAlphabet[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
constexpr const char* kSymbols[] = {"a", "b", "c", "x", "y", "foo", "bar", "sym"};

Draw draw_kind(Rng& rng, bool allow_pair) {
  unsigned total = 0;
  for (const auto& w : kMix) {
    if (w.kind != Draw::Pair || allow_pair) total += w.weight;
  }
  auto r = static_cast<unsigned>(rng.below(total));
  for (const auto& w : kMix) {
    if (w.kind == Draw::Pair && !allow_pair) continue;
    if (r < w.weight) return w.kind;
    r -= w.weight;
  }
  return Draw::Nil;
}

}  // namespace

Value sample_value(Rng& rng, unsigned size_budget) {
  if (size_budget == 0) throw std::invalid_argument("sample_value: size budget must be at least 1");
  switch (draw_kind(rng, size_budget >= 3)) {
    case Draw::Nil: return Value::nil();
    case Draw::True: return Value::t();
    case Draw::Int: return Value::integer(rng.between(-100, 100));
    case Draw::Rat: {
      for (;;) {
        const auto num = rng.between(-100, 100);
        const auto den = rng.between(2, 12);
        if (num % den != 0) return Value::number(BigRat(num, den));
      }
    }
    case Draw::Char: return Value::character(kCharAlphabet[rng.below(sizeof(kCharAlphabet) - 1)]);
    case Draw::Str: {
      std::string s(rng.below(5), ' ');
      for (auto& c : s) c = static_cast<char>('a' + rng.below(26));
      return Value::string(std::move(s));
    }
    case Draw::Sym: return Value::symbol(kSymbols[rng.below(std::size(kSymbols))]);
    case Draw::Pair: {
      const unsigned head_budget = 1 + static_cast<unsigned>(rng.below(size_budget - 2));
      const unsigned tail_budget = size_budget - 1 - head_budget;
      Value head = sample_value(rng, head_budget);
      Value tail = sample_value(rng, tail_budget);
      return Value::cons(std::move(head), std::move(tail));
    }
  }
  return Value::nil();
}

Assignment sample_assignment(const std::vector<std::string>& vars, Rng& rng, unsigned size_budget) {
  Assignment a;
  for (const auto& v : vars) a.emplace(v, sample_value(rng, size_budget));
  return a;
}

const std::vector<Value>& small_value_pool() {
  static const std::vector<Value> pool = [] {
    const auto one = Value::integer(1);
    const auto two = Value::integer(2);
    return std::vector<Value>{
        Value::nil(),
        Value::t(),
        Value::integer(0),
        one,
        Value::integer(-1),
        Value::number(BigRat(1, 2)),
        Value::string(""),
        Value::string("a"),
        Value::symbol("sym"),
        Value::cons(Value::nil(), Value::nil()),
        Value::cons(one, Value::cons(two, Value::nil())),
        Value::cons(one, two),
    };
  }();
  return pool;
}

std::vector<Assignment> exhaustive_assignments(const std::vector<std::string>& vars) {
  const auto& pool = small_value_pool();
  std::size_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    total *= pool.size();
    if (total > kExhaustiveLimit) return {};
  }
  std::vector<Assignment> out;
  out.reserve(total);
  std::vector<std::size_t> digits(vars.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a.emplace(vars[i], pool[digits[i]]);
    out.push_back(std::move(a));
    for (std::size_t i = vars.size(); i-- > 0;) {
      if (++digits[i] < pool.size()) break;
      digits[i] = 0;
    }
  }
  return out;
}

namespace {

void collect_subterms(const Term& t, bool root, std::vector<Term>& out) {
  if (!t.is_app()) return;
  if (!root) out.push_back(t);
  for (const auto& a : t.args()) collect_subterms(a, false, out);
}

}  // namespace

std::string behaviour_profile(const Term& goal, const Assignment& a, const DefTable& d) {
  std::vector<Term> subs;
  collect_subterms(goal, true, subs);
  std::string key;
  key.reserve(subs.size());
  for (const auto& s : subs) {
    const auto r = eval(s, a, d);
    if (const auto* v = std::get_if<Value>(&r)) key.push_back(v->truthy() ? '1' : '0');
    else key.push_back('?');
  }
  return key;
}

TestBank build_bank(const Term& goal, const GenConfig& cfg, const DefTable& d) {
  if (cfg.target_cex == 0 || cfg.target_wit == 0) throw std::invalid_argument("bank targets must be at least 1");
  if (cfg.max_trials < std::max(cfg.target_cex, cfg.target_wit)) {
    throw std::invalid_argument("max_trials must be at least the bank targets");
  }
  if (cfg.size_budget == 0) throw std::invalid_argument("size budget must be at least 1");

  TestBank bank;
  bank.goal = goal;
  const auto vars = free_vars(goal);
  bank.variables.assign(vars.begin(), vars.end());

  // Found assignments, grouped by profile in first-seen order.
  struct Groups {
    std::map<std::string, std::size_t> index;
    std::vector<std::vector<Assignment>> lists;
    std::size_t total = 0;

    void add(const std::string& key, Assignment a) {
      auto [it, fresh] = index.try_emplace(key, lists.size());
      if (fresh) lists.emplace_back();
      lists[it->second].push_back(std::move(a));
      ++total;
    }

    // Round-robin over groups, so rare behaviours make it into the bank.
    std::vector<Assignment> select(std::size_t target) && {
      std::vector<Assignment> out;
      for (std::size_t round = 0; out.size() < target; ++round) {
        bool any = false;
        for (auto& l : lists) {
          if (round >= l.size() || out.size() >= target) continue;
          out.push_back(std::move(l[round]));
          any = true;
        }
        if (!any) break;
      }
      return out;
    }
  };

  Rng rng(cfg.seed);
  std::set<std::string> seen;
  Groups cex;
  Groups wit;
  auto consider = [&](Assignment a) {
    if (!seen.insert(print_assignment(a)).second) return;
    const auto result = eval(goal, a, d);
    if (const auto* v = std::get_if<Value>(&result)) {
      auto key = behaviour_profile(goal, a, d);
      (v->truthy() ? wit : cex).add(key, std::move(a));
    } else {
      ++bank.eval_failures;
    }
  };

  // Phase 1: the whole small pool, in a seeded order.
  auto pool = exhaustive_assignments(bank.variables);
  for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.below(i)]);
  for (auto& a : pool) {
    ++bank.exhaustive_tried;
    consider(std::move(a));
  }

  // Phase 2: random sampling. A closed goal has only the empty assignment.
  if (!bank.variables.empty()) {
    while ((cex.total < cfg.target_cex || wit.total < cfg.target_wit) && bank.random_trials < cfg.max_trials) {
      ++bank.random_trials;
      consider(sample_assignment(bank.variables, rng, cfg.size_budget));
    }
  }

  bank.cex = std::move(cex).select(cfg.target_cex);
  bank.wit = std::move(wit).select(cfg.target_wit);
  if (bank.cex.empty()) {
    throw BankError(BankError::Reason::NoCounterexamples, "no counterexamples found: conjecture appears true at tested scale");
  }
  if (bank.wit.empty()) {
    throw BankError(BankError::Reason::NoWitnesses, "no witnesses found: cannot separate counterexamples from witnesses");
  }
  return bank;
}

}  // namespace hyprepair
