#include "hyprepair/cgen.hpp"

#include "support.hpp"

#include <set>

namespace hyprepair {
namespace {

using testing::prelude;

TEST(Cgen, RngIsDeterministic) {
  Rng a(7);
  Rng b(7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.below(1000), b.below(1000));
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    const auto v = c.between(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
  }
}

TEST(Cgen, EveryKindAppears) {
  Rng rng(11);
  std::set<ValueKind> kinds;
  bool improper = false;
  bool proper = false;
  for (int i = 0; i < 10'000; ++i) {
    const auto v = sample_value(rng, 8);
    kinds.insert(v.kind());
    if (v.is_pair()) (is_true_list(v) ? proper : improper) = true;
  }
  EXPECT_EQ(kinds.size(), 8U);
  EXPECT_TRUE(proper);
  EXPECT_TRUE(improper);
}

TEST(Cgen, SizeBudgetRespected) {
  Rng rng(3);
  for (unsigned budget = 1; budget <= 10; ++budget) {
    for (int i = 0; i < 500; ++i) {
      const auto v = sample_value(rng, budget);
      if (budget < 3) EXPECT_FALSE(v.is_pair());
      if (v.kind() == ValueKind::Int) {
        EXPECT_LE(abs(v.as_int()), 100);
      }
      std::size_t pairs = 0;
      for (Value x = v; x.is_pair(); x = x.cdr()) ++pairs;
      EXPECT_LE(pairs, budget);
    }
  }
  EXPECT_THROW(sample_value(rng, 0), std::invalid_argument);
}

TEST(Cgen, SmallPool) {
  const auto& pool = small_value_pool();
  ASSERT_EQ(pool.size(), 12U);
  EXPECT_EQ(print_value(pool[5]), "1/2");
  EXPECT_EQ(print_value(pool[11]), "(1 . 2)");
  EXPECT_EQ(exhaustive_assignments({"x", "y"}).size(), 144U);
  EXPECT_EQ(exhaustive_assignments({"a", "b", "c"}).size(), 1728U);
  EXPECT_TRUE(exhaustive_assignments({"a", "b", "c", "d"}).empty());
  EXPECT_EQ(exhaustive_assignments({}).size(), 1U);
}

void expect_bank_consistent(const TestBank& bank, const DefTable& d) {
  std::set<std::string> seen;
  for (const auto& a : bank.cex) {
    EXPECT_FALSE(std::get<Value>(eval(bank.goal, a, d)).truthy()) << print_assignment(a);
    EXPECT_TRUE(seen.insert(print_assignment(a)).second);
  }
  seen.clear();
  for (const auto& a : bank.wit) {
    EXPECT_TRUE(std::get<Value>(eval(bank.goal, a, d)).truthy()) << print_assignment(a);
    EXPECT_TRUE(seen.insert(print_assignment(a)).second);
  }
}

TEST(Cgen, ConspBank) {
  const auto bank = build_bank(parse_term("(consp x)"), GenConfig{}, prelude());
  expect_bank_consistent(bank, prelude());
  auto has = [](const std::vector<Assignment>& v, const char* text) {
    const auto a = testing::bind({{"x", text}});
    return std::find(v.begin(), v.end(), a) != v.end();
  };
  EXPECT_TRUE(has(bank.cex, "0"));
  EXPECT_TRUE(has(bank.wit, "(1 . 2)"));
  EXPECT_EQ(bank.cex.size(), 50U);
  EXPECT_EQ(bank.wit.size(), 50U);
}

TEST(Cgen, ReverseBankShapes) {
  const auto bank = build_bank(parse_term("(equal (reverse (reverse x)) x)"), GenConfig{}, prelude());
  expect_bank_consistent(bank, prelude());
  for (const auto& a : bank.wit) {
    const auto& x = a.at("x");
    EXPECT_TRUE(is_true_list(x) || x.kind() == ValueKind::Str) << print_value(x);
  }
  for (const auto& a : bank.cex) {
    const auto& x = a.at("x");
    EXPECT_FALSE(is_true_list(x) || x.kind() == ValueKind::Str) << print_value(x);
  }
}

TEST(Cgen, Deterministic) {
  const auto goal = parse_term("(equal (append x y) y)");
  GenConfig cfg;
  cfg.seed = 99;
  const auto a = build_bank(goal, cfg, prelude());
  const auto b = build_bank(goal, cfg, prelude());
  EXPECT_EQ(a.cex, b.cex);
  EXPECT_EQ(a.wit, b.wit);
  cfg.seed = 100;
  const auto c = build_bank(goal, cfg, prelude());
  EXPECT_NE(a.cex, c.cex);
}

TEST(Cgen, RareBehavioursAreKept) {
  // Only a handful of pool assignments put k in both lists; the profile
  // grouping must still select them.
  const auto goal = parse_term("(equal (index-of k (append x y)) (+ (len x) (index-of k y)))");
  const auto bank = build_bank(goal, GenConfig{}, prelude());
  expect_bank_consistent(bank, prelude());
  const auto both = parse_term("(and (index-of k x) (index-of k y))");
  const auto n = std::count_if(bank.cex.begin(), bank.cex.end(), [&](const Assignment& a) {
    return std::get<Value>(eval(both, a, prelude())).truthy();
  });
  EXPECT_GE(n, 1);
}

TEST(Cgen, Profiles) {
  const auto goal = parse_term("(equal (len x) (len (cdr x)))");
  EXPECT_EQ(behaviour_profile(goal, testing::bind({{"x", "(1)"}}), prelude()), "110");
  EXPECT_EQ(behaviour_profile(parse_term("(consp x)"), testing::bind({{"x", "1"}}), prelude()), "");
}

TEST(Cgen, Errors) {
  EXPECT_THROW(
      {
        try {
          build_bank(parse_term("'nil"), GenConfig{}, prelude());
        } catch (const BankError& e) {
          EXPECT_EQ(e.reason(), BankError::Reason::NoWitnesses);
          throw;
        }
      },
      BankError);
  try {
    build_bank(parse_term("(equal (len x) (len x))"), GenConfig{}, prelude());
    FAIL();
  } catch (const BankError& e) {
    EXPECT_EQ(e.reason(), BankError::Reason::NoCounterexamples);
  }
  GenConfig bad;
  bad.target_cex = 0;
  EXPECT_THROW(build_bank(parse_term("(consp x)"), bad, prelude()), std::invalid_argument);
  bad = GenConfig{};
  bad.max_trials = 10;
  EXPECT_THROW(build_bank(parse_term("(consp x)"), bad, prelude()), std::invalid_argument);
}

TEST(Cgen, ClosedGoal) {
  try {
    build_bank(parse_term("(consp '(1))"), GenConfig{}, prelude());
    FAIL();
  } catch (const BankError& e) {
    EXPECT_EQ(e.reason(), BankError::Reason::NoCounterexamples);
  }
}

TEST(Cgen, SmallTargets) {
  GenConfig cfg;
  cfg.target_cex = 3;
  cfg.target_wit = 2;
  const auto bank = build_bank(parse_term("(natp x)"), cfg, prelude());
  EXPECT_EQ(bank.cex.size(), 3U);
  EXPECT_EQ(bank.wit.size(), 2U);
  expect_bank_consistent(bank, prelude());
}

}  // namespace
}  // namespace hyprepair
