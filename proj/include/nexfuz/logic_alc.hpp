#ifndef NEXFUZ_LOGIC_ALC_HPP
#define NEXFUZ_LOGIC_ALC_HPP

#include "nexfuz/onestep.hpp"

#include <memory>
#include <string>
#include <vector>

namespace nexfuz {

/// Fuzzy ALC with a single role: ◇ over fuzzy relations.
///
/// One conclusion with a successor x_i per literal ◇v_i ∈ ⟨a_i,b_i⟩:
/// x_i forces v_i above a_i, and forces v_j below b_j exactly when the
/// transition into x_i cannot itself stay below b_j.
class AlcLogic : public OneStepLogic {
 public:
  std::string name() const override { return "alc"; }
  ModelKind model_kind() const override { return ModelKind::FuzzyRel; }

  void check_modality(const ModalOp& op) const override {
    if (op.kind != ModalOp::Kind::Diamond) throw ParseError("modality " + op.str() + " is not available in alc");
  }

  static std::vector<Conclusion> conclusion_list(const Sequent& gamma_g) {
    auto lits = modal_literals(gamma_g);
    for (const auto& l : lits) {
      if (l.interval.is_empty()) return {};
    }
    Conclusion c;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      Sequent q;
      for (std::size_t j = 0; j < lits.size(); ++j) {
        const Formula v = Formula::var(lits[j].var);
        if (j == i) {
          q.insert(v, lits[i].interval.lower_half());
        } else {
          Interval upper = lits[j].interval.upper_half();
          q.insert(v, lits[i].interval.intersect(upper).is_empty() ? upper : Interval::unit());
        }
      }
      c.successors.push_back(std::move(q));
      c.literals.push_back(i);
    }
    return {std::move(c)};
  }

  std::unique_ptr<ConclusionStream> conclusions(const Sequent& gamma_g) const override {
    return std::make_unique<VectorStream>(conclusion_list(gamma_g));
  }

  /// t(x_i) is the midpoint of ⟨a_i,1] ∩ ⋂ [0,b_j⟩ over j with Γ(◇v_i) ∩ [0,b_j⟩ ≠ ∅.
  static Rational degree(const std::vector<ModalLiteral>& lits, std::size_t i) {
    Interval t = lits[i].interval.lower_half();
    for (const auto& l : lits) {
      Interval upper = l.interval.upper_half();
      if (!lits[i].interval.intersect(upper).is_empty()) t = t.intersect(upper);
    }
    auto v = t.pick();
    if (!v) throw InternalError("alc realize: empty degree range for literal " + std::to_string(i));
    return *v;
  }

  TransitionWitness realize(const Sequent& gamma_g, const Conclusion& c,
                            const std::vector<Valuation>& /*tau*/) const override {
    auto lits = modal_literals(gamma_g);
    TransitionWitness w;
    w.num_successors = c.size();
    for (std::size_t s = 0; s < c.size(); ++s) w.edges.push_back({s, degree(lits, c.literals.at(s)), 0});
    return w;
  }
};

}  // namespace nexfuz

#endif  // NEXFUZ_LOGIC_ALC_HPP
