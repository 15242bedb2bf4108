#include "nexfuz/prop_tableau.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace nexfuz {
namespace {

Interval iv(const char* s) { return Interval::parse(s); }
Formula hv(std::size_t k) { return Formula::modal(ModalOp::diamond(), Formula::var(k)); }

TEST(ApplyRule, Negation) {
  auto app = apply_rule(Sequent{{Formula::neg(hv(0)), iv("[3/10,3/5]")}});
  EXPECT_EQ(app.rule, TableauRule::Neg);
  EXPECT_EQ(std::get<RuleOne>(app.result).conclusion, (Sequent{{hv(0), iv("[2/5,7/10]")}}));
}

TEST(ApplyRule, Minus) {
  auto app = apply_rule(Sequent{{Formula::minus(hv(0), Rational(1, 5)), iv("(1/10,2/5]")}});
  EXPECT_EQ(app.rule, TableauRule::Minus);
  EXPECT_EQ(std::get<RuleOne>(app.result).conclusion, (Sequent{{hv(0), iv("(3/10,3/5]")}}));
}

TEST(ApplyRule, MinusWithZero) {
  auto app = apply_rule(Sequent{{Formula::minus(hv(0), Rational(1, 5)), iv("[0,1/2)")}});
  EXPECT_EQ(app.rule, TableauRule::MinusZero);
  EXPECT_EQ(std::get<RuleOne>(app.result).conclusion, (Sequent{{hv(0), iv("[0,7/10)")}}));
  auto top = apply_rule(Sequent{{Formula::minus(hv(0), Rational(1, 2)), iv("[0,3/5]")}});
  EXPECT_EQ(std::get<RuleOne>(top.result).conclusion, (Sequent{{hv(0), iv("[0,1]")}}));
}

TEST(ApplyRule, AndWithCoincidingBranches) {
  Formula f = Formula::conj(hv(0), Formula::neg(hv(1)));
  auto app = apply_rule(Sequent{{f, iv("[1/2,1]")}});
  ASSERT_EQ(app.rule, TableauRule::And);
  const auto& two = std::get<RuleTwo>(app.result);
  Sequent expect{{hv(0), iv("[1/2,1]")}, {Formula::neg(hv(1)), iv("[1/2,1]")}};
  EXPECT_EQ(two.left, expect);
  EXPECT_EQ(two.right, expect);
}

TEST(ApplyRule, AndBranches) {
  Formula f = Formula::conj(hv(0), hv(1));
  RuleApplication app = apply_rule(Sequent{{f, iv("[1/4,1/2)")}});
  const auto& two = std::get<RuleTwo>(app.result);
  EXPECT_EQ(two.left, (Sequent{{hv(0), iv("[1/4,1/2)")}, {hv(1), iv("[1/4,1]")}}));
  EXPECT_EQ(two.right, (Sequent{{hv(0), iv("[1/4,1]")}, {hv(1), iv("[1/4,1/2)")}}));
}

TEST(ApplyRule, ZeroAndEmpty) {
  EXPECT_EQ(apply_rule(Sequent{{Formula::zero(), iv("(0,1]")}}).rule, TableauRule::Ax0);
  EXPECT_EQ(apply_rule(Sequent{{Formula::zero(), iv("[0,0]")}}).rule, TableauRule::Drop0);
  EXPECT_EQ(apply_rule(Sequent{{hv(0), Interval::empty()}, {Formula::neg(hv(1)), iv("[0,1]")}}).rule, TableauRule::Ax);
  EXPECT_TRUE(apply_rule(Sequent{{hv(0), iv("[0,1]")}, {Formula::atom("a"), iv("[0,1/2]")}}).saturated());
}

TEST(Saturate, Examples) {
  auto one = saturate(Sequent{{Formula::zero(), iv("[0,0]")}});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].empty());

  EXPECT_TRUE(saturate(Sequent{{Formula::zero(), iv("(0,1]")}}).empty());

  auto g = saturate(Sequent{{Formula::conj(hv(0), Formula::neg(hv(1))), iv("[1/2,1]")}});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0], (Sequent{{hv(0), iv("[1/2,1]")}, {hv(1), iv("[0,1/2]")}}));
}

TEST(Saturate, TraceSeesEveryApplication) {
  std::vector<std::string> rules;
  Saturation sat(Sequent{{parse_formula("~(a & b)"), iv("(1/2,3/4]")}},
                 [&](const Sequent&, const RuleApplication& app) {
                   rules.push_back(trace_record(Sequent{}, app)["rule"].get<std::string>());
                 });
  std::size_t leaves = 0;
  while (sat.next()) ++leaves;
  EXPECT_EQ(leaves, 2u);
  EXPECT_EQ(rules, (std::vector<std::string>{"neg", "and", "saturated", "neg", "and", "saturated"}));
  EXPECT_EQ(sat.branches(), 2u);
}

// Local correctness: premise satisfied iff some conclusion is, per rule.
TEST(ApplyRule, LocallyCorrectUnderRandomValuations) {
  testing::Rng rng(7);
  for (TableauRule rule : {TableauRule::Ax, TableauRule::Ax0, TableauRule::Drop0, TableauRule::Neg,
                           TableauRule::Minus, TableauRule::MinusZero, TableauRule::And}) {
    for (int trial = 0; trial < 1500; ++trial) {
      Sequent premise = testing::rule_premise(rng, rule);
      auto val = testing::random_end_valuation(rng);
      auto app = apply_rule(premise);
      bool some = false;
      if (auto* one = std::get_if<RuleOne>(&app.result)) some = testing::prop_satisfies(one->conclusion, val);
      if (auto* two = std::get_if<RuleTwo>(&app.result)) {
        some = testing::prop_satisfies(two->left, val) || testing::prop_satisfies(two->right, val);
      }
      ASSERT_EQ(testing::prop_satisfies(premise, val), some) << to_string(rule) << " " << premise.str();
    }
  }
}

// Saturation: Γ holds under a valuation iff some open end-sequent does.
TEST(Saturate, CompleteAndSoundOverEndSequents) {
  testing::Rng rng(8);
  for (int trial = 0; trial < 600; ++trial) {
    Sequent s;
    for (std::size_t k = 1 + rng() % 2; k > 0; --k) s.insert(testing::random_one_step(rng, 5), testing::random_interval(rng, 8));
    auto ends = saturate(s);
    for (const auto& g : ends) {
      for (const auto& [f, i] : g) EXPECT_TRUE(is_end_label(f));
    }
    for (int v = 0; v < 10; ++v) {
      auto val = testing::random_end_valuation(rng);
      bool some = std::any_of(ends.begin(), ends.end(), [&](const Sequent& g) { return testing::prop_satisfies(g, val); });
      ASSERT_EQ(testing::prop_satisfies(s, val), some) << s.str();
    }
  }
}

}  // namespace
}  // namespace nexfuz
