#include "nexfuz/parser.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace nexfuz {
namespace {

Formula a() { return Formula::atom("a"); }

TEST(Parser, DiamondExample) {
  Formula f = parse_formula("dia a & ~(dia a)");
  Formula da = Formula::modal(ModalOp::diamond(), a());
  EXPECT_EQ(f, Formula::conj(da, Formula::neg(da)));
}

TEST(Parser, FootballExample) {
  Formula f = parse_formula("(prof - 1/5) & fb & G (unfair | injury)");
  Formula expect = Formula::conj(
      Formula::conj(Formula::minus(Formula::atom("prof"), Rational(1, 5)), Formula::atom("fb")),
      Formula::modal(ModalOp::generally(), Formula::disj(Formula::atom("unfair"), Formula::atom("injury"))));
  EXPECT_EQ(f, expect);
}

TEST(Parser, MoreThanAndMetric) {
  EXPECT_EQ(parse_formula("M{9/10} recovery"),
            Formula::modal(ModalOp::more_than(Rational(9, 10)), Formula::atom("recovery")));
  EXPECT_EQ(parse_formula("dia{l, 0.5} a"), Formula::modal(ModalOp::metric_diamond("l", Rational(1, 2)), a()));
  EXPECT_EQ(parse_formula("1"), Formula::neg(Formula::zero()));
}

TEST(Parser, ShiftBindsTighterThanPrefix) {
  EXPECT_EQ(parse_formula("dia a - 1/2"), Formula::modal(ModalOp::diamond(), Formula::minus(a(), Rational(1, 2))));
  EXPECT_EQ(parse_formula("~a - 1/2"), Formula::neg(Formula::minus(a(), Rational(1, 2))));
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_formula("a &"), ParseError);
  EXPECT_THROW(parse_formula("(a"), ParseError);
  EXPECT_THROW(parse_formula("0.5"), ParseError);
  EXPECT_THROW(parse_formula("E a"), ParseError);
  EXPECT_THROW(parse_formula("M{3/2} a"), ParseError);
  auto only_dia = [](const ModalOp& op) {
    if (op.kind != ModalOp::Kind::Diamond) throw ParseError("no");
  };
  EXPECT_THROW(parse_formula("G a", only_dia), ParseError);
  EXPECT_NO_THROW(parse_formula("dia a", only_dia));
}

TEST(Formula, SizeExamples) {
  EXPECT_EQ(Formula::zero().size(), 1u);
  EXPECT_EQ(Formula::neg(Formula::zero()).size(), 2u);
  EXPECT_EQ(Formula::minus(Formula::zero(), Rational(1, 2)).size(), 5u);
  // |M_p φ| counts the binary length of p; other modalities cost 1.
  EXPECT_EQ(parse_formula("M{1/2} a").size(), 3u + 1u);
  EXPECT_EQ(parse_formula("dia a").size(), 2u);
}

TEST(Formula, ModalDepthExamples) {
  EXPECT_EQ(a().modal_depth(), 0u);
  EXPECT_EQ(parse_formula("dia a").modal_depth(), 1u);
  EXPECT_EQ(parse_formula("dia (~(dia a) - 1/4)").modal_depth(), 2u);
}

TEST(Formula, Subformulas) {
  Formula da = parse_formula("dia a");
  Formula f = parse_formula("dia a & ~dia a");
  EXPECT_EQ(prop_subformulas(f), (std::set<Formula>{f, da, Formula::neg(da)}));
  EXPECT_EQ(subformulas(da), (std::set<Formula>{da, a()}));
  EXPECT_EQ(prop_subformulas(Formula::zero()), (std::set<Formula>{Formula::zero()}));
  EXPECT_EQ(atoms_of(parse_formula("a & G (b | a)")), (std::set<std::string>{"a", "b"}));
}

TEST(Formula, StructuralEqualityAndOrder) {
  EXPECT_EQ(parse_formula("a & b"), parse_formula("(a & b)"));
  EXPECT_NE(parse_formula("a & b"), parse_formula("b & a"));
  EXPECT_LT(parse_formula("M{1/4} a"), parse_formula("M{1/2} a"));
}

TEST(Parser, PrintParseRoundTrip) {
  testing::Rng rng(5);
  auto space = std::make_shared<const MetricSpace>(std::vector<std::string>{"l0", "l1"},
                                                   std::vector<std::vector<Rational>>{{0, Rational(1, 2)}, {Rational(1, 2), 0}});
  for (const char* logic : {"alc", "lgen", "mp", "metric-fuzzy"}) {
    testing::FormulaGen gen(logic, space);
    for (int k = 0; k < 300; ++k) {
      Formula f = gen.formula(rng, 3);
      EXPECT_EQ(parse_formula(f.str()), f) << f.str();
    }
  }
}

}  // namespace
}  // namespace nexfuz
