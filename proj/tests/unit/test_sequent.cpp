#include "nexfuz/sequent.hpp"

#include <gtest/gtest.h>

namespace nexfuz {
namespace {

Interval iv(const char* s) { return Interval::parse(s); }
Formula a() { return Formula::atom("a"); }
Formula v(std::size_t k) { return Formula::var(k); }

TEST(Sequent, InsertIntersects) {
  Sequent s{{a(), iv("[0,1/2]")}};
  s.insert(a(), iv("[1/2,1]"));
  EXPECT_EQ(s.at(a()), iv("[1/2,1/2]"));

  Sequent t{{a(), iv("[1/2,1]")}};
  t.insert(a(), iv("[0,2/5)"));
  EXPECT_TRUE(t.at(a()).is_empty());
  EXPECT_TRUE(t.has_empty());

  Sequent u;
  u.insert(Formula::atom("b"), Interval::unit());
  EXPECT_EQ(u.size(), 1u);
  EXPECT_EQ(u.at(Formula::atom("b")), Interval::unit());
}

TEST(Sequent, SubSequent) {
  EXPECT_TRUE(is_subsequent(Sequent{{v(0), iv("[1/2,1/2]")}}, Sequent{{v(0), iv("[0,1]")}}));
  EXPECT_FALSE(is_subsequent(Sequent{{v(0), iv("[0,1]")}}, Sequent{{v(0), iv("[1/2,1]")}}));
  EXPECT_TRUE(is_subsequent(Sequent{{v(0), Interval::empty()}}, Sequent{{v(0), iv("[0,0]")}}));
  EXPECT_THROW(is_subsequent(Sequent{{v(0), iv("[0,1]")}}, Sequent{{v(1), iv("[0,1]")}}), std::invalid_argument);
}

TEST(Sequent, CombinedSize) {
  // |0| = 1, endpoints 0/1 and 1/1 cost 1+1+1+1, plus 3.
  EXPECT_EQ(combined_size(Sequent{{Formula::zero(), iv("[0,1]")}}), 8u);
  EXPECT_EQ(combined_size(Sequent{}), 0u);
  Sequent two{{a(), iv("[1/2,1]")}, {Formula::atom("b"), iv("[0,1/3)")}};
  EXPECT_EQ(combined_size(two), literal_size(a(), iv("[1/2,1]")) + literal_size(Formula::atom("b"), iv("[0,1/3)")));
}

TEST(Sequent, JsonRoundTrip) {
  Sequent s{{parse_formula("dia a & ~b"), iv("(1/2,1]")}, {a(), iv("[0,1/4]")}};
  Sequent back = sequent_from_json(sequent_to_json(s));
  EXPECT_EQ(back, s);
  EXPECT_THROW(sequent_from_json(nlohmann::json::object()), ParseError);
  EXPECT_THROW(sequent_from_json(nlohmann::json::parse(R"({"literals":[{"formula":"a"}]})")), ParseError);
}

TEST(Sequent, DuplicateLabelsInJsonAreIntersected) {
  auto j = nlohmann::json::parse(R"({"literals":[{"formula":"a","interval":"[0,1/2]"},{"formula":"a","interval":"[1/4,1]"}]})");
  EXPECT_EQ(sequent_from_json(j).at(a()), iv("[1/4,1/2]"));
}

TEST(Sequent, ModalDepth) {
  Sequent s{{parse_formula("dia dia a"), iv("[0,1]")}, {a(), iv("[0,1]")}};
  EXPECT_EQ(s.modal_depth(), 2u);
}

}  // namespace
}  // namespace nexfuz
