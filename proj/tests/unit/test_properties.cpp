#include "nexfuz/nexfuz.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace nexfuz {
namespace {

const char* const kLogics[] = {"alc", "lgen", "mp", "metric-fuzzy", "metric-crisp"};

std::shared_ptr<const MetricSpace> fixed_space() {
  return std::make_shared<const MetricSpace>(
      std::vector<std::string>{"l0", "l1", "l2"},
      std::vector<std::vector<Rational>>{{0, Rational(1, 4), Rational(3, 4)},
                                         {Rational(1, 4), 0, Rational(1, 2)},
                                         {Rational(3, 4), Rational(1, 2), 0}});
}

class PerLogic : public ::testing::TestWithParam<const char*> {
 protected:
  std::shared_ptr<const MetricSpace> space = fixed_space();
  std::shared_ptr<const OneStepLogic> logic = make_logic(GetParam(), space);
  std::shared_ptr<const OneStepLogic> bare = make_instance(GetParam(), space);
  testing::FormulaGen gen{GetParam(), space};
  ModelKind kind = testing::kind_for(GetParam());
};

// One-step completeness: Γ_G read off a random one-step model is found by
// the search when the oracle knows exactly the model's successors.
TEST_P(PerLogic, OneStepSearchFindsRealModels) {
  testing::Rng rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 1 + rng() % 3;
    FiniteModel m;
    m.kind = kind;
    m.space = space;
    m.add_state("root");
    std::size_t succ = 1 + rng() % 3;
    std::vector<Valuation> pool(succ);
    int total = 0;
    std::vector<int> w;
    for (std::size_t s = 0; s < succ; ++s) {
      std::size_t x = m.add_state("x" + std::to_string(s));
      for (std::size_t k = 0; k < n; ++k) {
        pool[s][k] = testing::random_rational(rng, 4);
        m.atoms[x]["v" + std::to_string(k)] = pool[s][k];
      }
      w.push_back(1 + static_cast<int>(rng() % 3));
      total += w.back();
    }
    for (std::size_t s = 0; s < succ; ++s) {
      Rational deg = kind == ModelKind::Prob ? Rational(w[s], total)
                     : kind == ModelKind::MetricCrisp ? Rational(1)
                                                      : testing::random_rational(rng, 4);
      m.trans[0].push_back({s + 1, deg, is_metric(kind) ? rng() % space->size() : 0});
    }
    Sequent g;
    for (std::size_t k = 0; k < n; ++k) {
      Formula lit = Formula::modal(gen.random_op(rng), Formula::var(k));
      Rational val = eval(m, 0, Formula::modal(lit.op(), Formula::atom("v" + std::to_string(k))));
      Interval i = rng() % 2 ? Interval::point(val)
                             : Interval(monus(val, Rational(1, 8)), rng() % 2 == 0, min(val + Rational(1, 8), Rational(1)),
                                        rng() % 2 == 0);
      if (!i.contains(val)) i = Interval::point(val);
      g.insert(lit, i);
    }
    ASSERT_TRUE(check_sequent(m, 0, testing::as_atoms(g)));
    testing::PoolOracle oracle(pool);
    auto r = bare->search(g, oracle);
    ASSERT_TRUE(r) << GetParam() << " " << g.str();
    EXPECT_TRUE(testing::result_satisfies(*bare, g, *r)) << g.str();
  }
}

// Witness soundness on random sequents, plus structural bounds.
TEST_P(PerLogic, WitnessesModelCheck) {
  testing::Rng rng(62);
  std::size_t sat_count = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Sequent s = gen.sequent(rng, 2);
    SolveOptions opts;
    opts.verify = false;
    Verdict v = sat(s, *logic, opts);
    EXPECT_LE(v.stats.max_depth, s.modal_depth());
    EXPECT_EQ(v.stats.branching_violations, 0u);
    if (!v.sat) continue;
    ++sat_count;
    EXPECT_NO_THROW(v.witness->model.validate());
    EXPECT_TRUE(check_sequent(v.witness->model, v.witness->root, s)) << s.str();
    FiniteModel back = FiniteModel::from_json(v.witness->model.to_json(v.witness->root), space);
    EXPECT_TRUE(check_sequent(back, v.witness->root, s));
  }
  EXPECT_GT(sat_count, 10u);
}

// Model-first completeness: point sequents at evaluated values are SAT.
TEST_P(PerLogic, EvaluatedValuesAreSatisfiable) {
  testing::Rng rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    PointedModel pm = testing::random_layered_model(rng, kind, 2, 3, space);
    Formula f = gen.formula(rng, 2);
    Rational val = eval(pm.model, pm.root, f);
    Sequent s{{f, Interval::point(val)}};
    ASSERT_TRUE(sat(s, *logic).sat) << f.str() << " = " << val.str();
  }
}

// Unused atoms change nothing.
TEST_P(PerLogic, UnusedAtomsAreTransparent) {
  testing::Rng rng(64);
  for (int trial = 0; trial < 60; ++trial) {
    Sequent s = gen.sequent(rng, 2);
    Sequent padded = s;
    for (const char* u : {"u1", "u2", "u3"}) padded.insert(Formula::atom(u), Interval::unit());
    EXPECT_EQ(sat(s, *logic).sat, sat(padded, *logic).sat) << s.str();
  }
}

INSTANTIATE_TEST_SUITE_P(Logics, PerLogic, ::testing::ValuesIn(kLogics),
                         [](const ::testing::TestParamInfo<const char*>& info) {
                           std::string n = info.param;
                           for (auto& ch : n) {
                             if (ch == '-') ch = '_';
                           }
                           return n;
                         });

}  // namespace
}  // namespace nexfuz
