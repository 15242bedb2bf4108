#include "nexfuz/nexfuz.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace nexfuz {
namespace {

Interval iv(const char* s) { return Interval::parse(s); }
Rational q(const char* s) { return Rational::parse(s); }
Formula v(std::size_t k) { return Formula::var(k); }
Formula mv(const char* label, const char* c, std::size_t k) {
  return Formula::modal(ModalOp::metric_diamond(label, q(c)), v(k));
}

std::shared_ptr<const MetricSpace> space(std::vector<std::string> labels, std::vector<std::vector<Rational>> d) {
  return std::make_shared<const MetricSpace>(std::move(labels), std::move(d));
}

TEST(MetricSpace, Validation) {
  EXPECT_NO_THROW(space({"a", "b"}, {{0, q("3/10")}, {q("3/10"), 0}}));
  EXPECT_THROW(space({"a", "b"}, {{0, q("3/10")}, {q("1/10"), 0}}), ParseError);
  EXPECT_THROW(space({"a", "b"}, {{0, 0}, {0, 0}}), ParseError);
  EXPECT_THROW(space({"a", "b", "c"}, {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}), ParseError);
  EXPECT_THROW(space({"a"}, {{1}}), ParseError);
  EXPECT_THROW(space({}, {}), ParseError);
  auto j = nlohmann::json::parse(R"({"labels":["a","b"],"dist":[["0","3/10"],["3/10","0"]]})");
  EXPECT_EQ(MetricSpace::from_json(j).distance(0, 1), q("3/10"));
  EXPECT_EQ(MetricSpace::from_json(MetricSpace::from_json(j).to_json()), MetricSpace::from_json(j));
}

TEST(Metric, SingleLiteral) {
  MetricLogic logic(space({"l"}, {{0}}), false);
  Sequent g{{mv("l", "1", 0), iv("[7/10,1]")}};
  auto s = logic.conclusions(g);
  auto c = s->next();
  ASSERT_TRUE(c);
  EXPECT_FALSE(s->next());
  ASSERT_EQ(c->size(), 1u);
  EXPECT_EQ(c->successors[0], (Sequent{{v(0), iv("[7/10,1]")}}));
  TransitionWitness t = logic.realize(g, *c, {{{0, Rational(1)}}});
  ASSERT_EQ(t.edges.size(), 1u);
  EXPECT_EQ(t.edges[0].degree, q("17/20"));
}

TEST(Metric, CrispDegreeIsOne) {
  MetricLogic logic(space({"l"}, {{0}}), true);
  Sequent g{{mv("l", "1", 0), iv("[7/10,1]")}};
  auto c = logic.conclusions(g)->next();
  ASSERT_TRUE(c);
  EXPECT_EQ(logic.realize(g, *c, {{{0, Rational(1)}}}).edges.at(0).degree, Rational(1));
}

TEST(Metric, FarLabelsDoNotInteract) {
  MetricLogic logic(space({"a", "b"}, {{0, 1}, {1, 0}}), false);
  Sequent g{{mv("a", "1/2", 0), iv("[1/2,1/2]")}, {mv("b", "1/2", 1), iv("[0,1/4]")}};
  auto s = logic.conclusions(g);
  auto c = s->next();
  ASSERT_TRUE(c);
  EXPECT_FALSE(s->next());
  ASSERT_EQ(c->size(), 1u);
  EXPECT_EQ(c->successors[0], (Sequent{{v(0), iv("[1/2,1]")}, {v(1), iv("[0,1]")}}));
}

TEST(Metric, NearLabelsBranchOnRelevance) {
  // From label a the literal on b is within reach, so v1 must either stay
  // low at the successor or the edge label must avoid b's reach.
  MetricLogic logic(space({"a", "b"}, {{0, q("1/4")}, {q("1/4"), 0}}), false);
  Sequent g{{mv("a", "1", 0), iv("[3/4,1]")}, {mv("b", "1", 1), iv("[0,1/2]")}};
  std::vector<Conclusion> cs;
  auto s = logic.conclusions(g);
  while (auto c = s->next()) cs.push_back(*c);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].successors[0], (Sequent{{v(0), iv("[3/4,1]")}, {v(1), iv("[0,1/2]")}}));
}

TEST(Metric, EmptyAndZeroLiteral) {
  MetricLogic logic(space({"l"}, {{0}}), false);
  EXPECT_FALSE(logic.conclusions(Sequent{{mv("l", "1", 0), Interval::empty()}})->next());
  auto c = logic.conclusions(Sequent{})->next();
  ASSERT_TRUE(c);
  EXPECT_TRUE(logic.realize(Sequent{}, *c, {}).edges.empty());
}

TEST(Metric, UnknownLabel) {
  MetricLogic logic(space({"l"}, {{0}}), false);
  EXPECT_THROW(logic.check_modality(ModalOp::metric_diamond("m", Rational(1))), ParseError);
  EXPECT_THROW(logic.check_modality(ModalOp::diamond()), ParseError);
}

class MetricRoundTrip : public ::testing::TestWithParam<bool> {};

TEST_P(MetricRoundTrip, ConclusionsAreRectangular) {
  testing::Rng rng(GetParam() ? 41 : 42);
  std::size_t checked = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    auto sp = testing::random_line_space(rng, 3);
    MetricLogic logic(sp, GetParam());
    testing::FormulaGen gen(logic.name(), sp);
    std::size_t n = 1 + rng() % 3;
    Sequent g = testing::random_end_sequent(rng, gen, n, 4);
    auto s = logic.conclusions(g);
    for (int k = 0; k < 8; ++k) {
      auto c = s->next();
      if (!c) break;
      auto tau = testing::random_tau(rng, *c, n);
      TransitionWitness t = logic.realize(g, *c, tau);
      EXPECT_LE(t.num_successors, n);
      FiniteModel m = testing::one_step_model(logic.model_kind(), sp, t, tau);
      ASSERT_TRUE(check_sequent(m, 0, testing::as_atoms(g))) << g.str();
      ++checked;
    }
  }
  EXPECT_GT(checked, 300u);
}

TEST_P(MetricRoundTrip, SearchAgreesWithStream) {
  testing::Rng rng(GetParam() ? 43 : 44);
  std::size_t sat = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    auto sp = testing::random_line_space(rng, 3);
    MetricLogic logic(sp, GetParam());
    testing::FormulaGen gen(logic.name(), sp);
    std::size_t n = 1 + rng() % 3;
    Sequent g = testing::random_end_sequent(rng, gen, n, 4);
    auto pool = testing::random_pool(rng, 1 + rng() % 4, n, 4);
    testing::PoolOracle o1(pool), o2(pool);
    auto fast = logic.search(g, o1);
    auto slow = testing::stream_search(logic, g, o2);
    ASSERT_EQ(bool(fast), bool(slow)) << g.str();
    if (fast) {
      ++sat;
      EXPECT_TRUE(testing::result_satisfies(logic, g, *fast));
    }
  }
  EXPECT_GT(sat, 100u);
}

INSTANTIATE_TEST_SUITE_P(Modes, MetricRoundTrip, ::testing::Bool());

}  // namespace
}  // namespace nexfuz
