#include "nexfuz/nexfuz.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

namespace nexfuz {
namespace {

Rational q(const char* s) { return Rational::parse(s); }
Interval iv(const char* s) { return Interval::parse(s); }

Verdict solve(const char* logic, const char* formula, const char* interval) {
  auto l = make_logic(logic);
  return sat(Sequent{{parse_formula(formula, l->modality_check()), iv(interval)}}, *l);
}

TEST(Solver, Constants) {
  EXPECT_TRUE(solve("alc", "0", "[0,0]").sat);
  EXPECT_FALSE(solve("alc", "0", "(0,1]").sat);
  EXPECT_FALSE(solve("lgen", "a & ~a", "(1/2,1]").sat);
  EXPECT_TRUE(solve("lgen", "a & ~a", "[1/2,1]").sat);
}

TEST(Solver, WorkedAlcExample) {
  Verdict v = solve("alc", "dia a & ~dia a", "[1/2,1]");
  ASSERT_TRUE(v.sat);
  const FiniteModel& m = v.witness->model;
  const std::size_t r = v.witness->root;
  // Both successors are reached with degree forced by the bounds.
  ASSERT_FALSE(m.trans[r].empty());
  EXPECT_EQ(m.trans[r][0].degree, q("1/2"));
  EXPECT_EQ(eval(m, r, parse_formula("dia a")), q("1/2"));
  EXPECT_EQ(v.stats.max_depth, 1u);
}

TEST(Solver, Threshold) {
  auto alc = make_logic("alc");
  auto lgen = make_logic("lgen");
  EXPECT_TRUE(sat_threshold(Formula::atom("a"), CompOp::Ge, Rational(0), *alc).sat);
  EXPECT_FALSE(sat_threshold(Formula::zero(), CompOp::Gt, Rational(0), *alc).sat);
  Verdict g = sat_threshold(parse_formula("G a"), CompOp::Ge, q("1/2"), *lgen);
  ASSERT_TRUE(g.sat);
  EXPECT_GE(eval(g.witness->model, g.witness->root, parse_formula("G a")), q("1/2"));
  EXPECT_THROW(sat_threshold(Formula::atom("a"), CompOp::Ge, q("3/2"), *alc), std::invalid_argument);
  EXPECT_EQ(threshold_sequent(Formula::atom("a"), CompOp::Lt, q("1/2")), (Sequent{{Formula::atom("a"), iv("[0,1/2)")}}));
}

TEST(Solver, ProbabilisticVerdicts) {
  EXPECT_TRUE(solve("mp", "M{3/10} a & ~M{3/10} ~a", "[3/5,1]").sat);
  EXPECT_FALSE(solve("lgen", "G (a & ~a)", "(1/2,1]").sat);
  EXPECT_TRUE(solve("lgen", "G a & G ~a", "[1/2,1]").sat);
  EXPECT_FALSE(solve("lgen", "G a & G ~a", "(1/2,1]").sat);
  EXPECT_TRUE(solve("mp", "M{1/2} a & M{1/2} ~a", "[0,1]").sat);
  // A point mass at a = 1/2 meets both; strictly above needs more than all the mass.
  EXPECT_TRUE(solve("mp", "M{1/2} a & M{1/2} ~a", "[1/2,1]").sat);
  EXPECT_FALSE(solve("mp", "M{1/2} a & M{1/2} ~a", "(1/2,1]").sat);
}

TEST(Solver, MetricVerdicts) {
  auto sp = std::make_shared<const MetricSpace>(MetricSpace::load(std::string(NEXFUZ_SAMPLES_DIR) + "/line3.json"));
  auto fuzzy = make_logic("metric-fuzzy", sp);
  auto crisp = make_logic("metric-crisp", sp);
  Sequent near{{parse_formula("dia{near, 1} a & ~dia{mid, 1} a"), iv("[1/2,1]")}};
  EXPECT_TRUE(sat(near, *fuzzy).sat);
  EXPECT_TRUE(sat(near, *crisp).sat);
  // Reach from near into mid costs 1/4, so dia{near,1/4} a > 0 needs an edge
  // labelled near, and dia{near,1} a then bounds dia{mid,1} a from below by 3/4.
  Sequent linked{{parse_formula("dia{near, 1} a"), iv("[1,1]")}, {parse_formula("dia{mid, 1} a"), iv("[0,1/2]")}};
  EXPECT_FALSE(sat(linked, *crisp).sat);
  EXPECT_FALSE(sat(linked, *fuzzy).sat);
  Sequent soft{{parse_formula("dia{near, 1} a"), iv("[1/2,1]")}, {parse_formula("dia{mid, 1} a"), iv("[0,1/2]")}};
  EXPECT_TRUE(sat(soft, *fuzzy).sat);
}

TEST(Solver, SignatureChecks) {
  auto alc = make_logic("alc");
  EXPECT_THROW(sat(Sequent{{parse_formula("G a"), iv("[0,1]")}}, *alc), ParseError);
  EXPECT_THROW(sat(Sequent{{Formula::var(0), iv("[0,1]")}}, *alc), ParseError);
}

TEST(Solver, LayerCap) {
  auto alc = make_logic("alc");
  SolveOptions opts;
  opts.max_literals = 2;
  Sequent s{{parse_formula("dia a & dia b & dia c"), iv("[1/2,1]")}};
  EXPECT_THROW(sat(s, *alc, opts), CapExceeded);
  opts.max_literals = 3;
  EXPECT_TRUE(sat(s, *alc, opts).sat);
}

TEST(Solver, MaxLiteralsFromEnv) {
  ::setenv("NEXFUZ_MAX_LITERALS", "7", 1);
  EXPECT_EQ(max_literals_from_env(), 7u);
  ::setenv("NEXFUZ_MAX_LITERALS", "x", 1);
  EXPECT_THROW(max_literals_from_env(), ParseError);
  ::unsetenv("NEXFUZ_MAX_LITERALS");
  EXPECT_EQ(max_literals_from_env(), kDefaultMaxLiterals);
}

TEST(Solver, UnusedAtomsGetValues) {
  Verdict v = solve("alc", "a | ~a", "[0,1]");
  ASSERT_TRUE(v.sat);
  EXPECT_TRUE(v.witness->model.atoms[v.witness->root].count("a"));
}

TEST(Solver, TraceSink) {
  std::size_t calls = 0;
  SolveOptions opts;
  opts.trace = [&](const Sequent&, const RuleApplication&) { ++calls; };
  auto alc = make_logic("alc");
  sat(Sequent{{parse_formula("dia a & ~dia a"), iv("[1/2,1]")}}, *alc, opts);
  EXPECT_GE(calls, 3u);
}

TEST(Solver, FootballSample) {
  auto lgen = make_logic("lgen");
  std::ifstream in(std::string(NEXFUZ_SAMPLES_DIR) + "/football.json");
  Sequent s = sequent_from_json(nlohmann::json::parse(in), lgen->modality_check());
  Verdict v = sat(s, *lgen);
  ASSERT_TRUE(v.sat);
  EXPECT_TRUE(check_sequent(v.witness->model, v.witness->root, s));
}

}  // namespace
}  // namespace nexfuz
