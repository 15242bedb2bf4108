#ifndef NEXFUZ_LOGIC_METRIC_HPP
#define NEXFUZ_LOGIC_METRIC_HPP

#include "nexfuz/metric_space.hpp"
#include "nexfuz/onestep.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nexfuz {

/// Fuzzy metric modal logic ◇_l^c over a finite label space, optionally
/// with crisp (degree 1) transitions.
///
/// Every literal i with a non-trivial lower bound gets one successor x_i
/// reached by a single edge labelled m_i. An upper bound j is in danger at
/// x_i when the edge degree cannot be kept below b_j; it is then defused
/// either on the value side (v_j forced below b_j in x_i) or on the label
/// side (m_i too far from l_j to matter). Conclusions differ in these
/// choices; a choice survives when some reachable label defuses all its
/// label-side pairs.
class MetricLogic : public OneStepLogic {
 public:
  MetricLogic(std::shared_ptr<const MetricSpace> space, bool crisp) : space_(std::move(space)), crisp_(crisp) {
    if (!space_) throw std::invalid_argument("metric logic needs a label space");
  }

  std::string name() const override { return crisp_ ? "metric-crisp" : "metric-fuzzy"; }
  ModelKind model_kind() const override { return crisp_ ? ModelKind::MetricCrisp : ModelKind::Metric; }
  std::shared_ptr<const MetricSpace> space() const override { return space_; }
  bool crisp() const { return crisp_; }

  void check_modality(const ModalOp& op) const override {
    if (op.kind != ModalOp::Kind::MetricDiamond) throw ParseError("modality " + op.str() + " is not available in " + name());
    if (!space_->index_of(op.label)) throw ParseError("label '" + op.label + "' is not in the metric space");
  }

  /// Per-literal data derived from Γ_G.
  struct Plan {
    std::vector<ModalLiteral> lits;
    std::vector<std::size_t> label;     // label index l_i
    std::vector<std::size_t> owners;    // literals that get a successor
    std::vector<std::vector<std::size_t>> pairs;  // per owner: dangerous j with a relevant reachable label
    std::vector<std::vector<std::size_t>> forced_label;  // per owner: dangerous j with no relevant reachable label
    std::vector<Interval> degrees;      // per owner: allowed edge degrees
  };

  /// c_i ⊖ d(l_i, m) as a truth value.
  Rational reach(const Plan& p, std::size_t i, std::size_t m) const {
    return monus(p.lits[i].op.param, space_->distance(p.label[i], m));
  }
  bool reaches(const Plan& p, std::size_t i, std::size_t m) const {
    return p.lits[i].interval.lower_half().contains(reach(p, i, m));
  }
  bool relevant(const Plan& p, std::size_t j, std::size_t m) const {
    return !p.lits[j].interval.upper_half().contains(reach(p, j, m));
  }

  std::optional<Plan> make_plan(const Sequent& gamma_g) const {
    Plan p;
    p.lits = modal_literals(gamma_g);
    for (const auto& l : p.lits) {
      if (l.interval.is_empty()) return std::nullopt;
      p.label.push_back(space_->require(l.op.label));
    }
    const std::size_t n = p.lits.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (p.lits[i].interval.lower_vacuous()) continue;
      Interval tset = p.lits[i].interval.lower_half();
      if (crisp_) tset = tset.intersect(Interval::point(Rational(1)));
      std::vector<std::size_t> pairs, forced;
      Interval deg = tset;
      for (std::size_t j = 0; j < n; ++j) {
        Interval upper = p.lits[j].interval.upper_half();
        if (!tset.intersect(upper).is_empty()) {
          deg = deg.intersect(upper);
          continue;
        }
        bool relevant_reach = false;
        for (std::size_t m = 0; m < space_->size() && !relevant_reach; ++m) {
          relevant_reach = reaches(p, i, m) && relevant(p, j, m);
        }
        (relevant_reach ? pairs : forced).push_back(j);
      }
      p.owners.push_back(i);
      p.pairs.push_back(std::move(pairs));
      p.forced_label.push_back(std::move(forced));
      p.degrees.push_back(deg);
    }
    return p;
  }

  /// First label reaching literal i and defusing every label-side pair.
  std::optional<std::size_t> witness_label(const Plan& p, std::size_t k, std::uint64_t value_mask) const {
    const std::size_t i = p.owners[k];
    for (std::size_t m = 0; m < space_->size(); ++m) {
      if (!reaches(p, i, m)) continue;
      bool ok = true;
      for (std::size_t q = 0; q < p.pairs[k].size() && ok; ++q) {
        if (!((value_mask >> q) & 1U)) ok = !relevant(p, p.pairs[k][q], m);
      }
      for (std::size_t j : p.forced_label[k]) {
        if (!ok) break;
        ok = !relevant(p, j, m);
      }
      if (ok) return m;
    }
    return std::nullopt;
  }

  /// Successor sequent for owner k under a value-side choice mask.
  static Sequent successor(const Plan& p, std::size_t k, std::uint64_t value_mask) {
    const std::size_t i = p.owners[k];
    Sequent q;
    for (const auto& l : p.lits) q.insert(Formula::var(l.var), Interval::unit());
    q.insert(Formula::var(p.lits[i].var), p.lits[i].interval.lower_half());
    for (std::size_t b = 0; b < p.pairs[k].size(); ++b) {
      if ((value_mask >> b) & 1U) {
        const auto& lj = p.lits[p.pairs[k][b]];
        q.insert(Formula::var(lj.var), lj.interval.upper_half());
      }
    }
    return q;
  }

  static constexpr std::size_t kMaxPairs = 62;

  class Stream : public ConclusionStream {
   public:
    Stream(const MetricLogic& logic, Plan plan) : logic_(logic), plan_(std::move(plan)) {
      for (std::size_t k = 0; k < plan_.owners.size(); ++k) {
        std::vector<std::pair<std::uint64_t, std::size_t>> opts;
        if (plan_.pairs[k].size() > kMaxPairs) throw CapExceeded("too many relevance pairs in a metric literal");
        const std::uint64_t limit = std::uint64_t{1} << plan_.pairs[k].size();
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
          if (auto m = logic_.witness_label(plan_, k, mask)) opts.emplace_back(mask, *m);
        }
        if (opts.empty()) exhausted_ = true;
        options_.push_back(std::move(opts));
      }
      idx_.assign(options_.size(), 0);
    }

    std::optional<Conclusion> next() override {
      if (exhausted_) return std::nullopt;
      Conclusion c;
      for (std::size_t k = 0; k < options_.size(); ++k) {
        auto [mask, label] = options_[k][idx_[k]];
        c.successors.push_back(successor(plan_, k, mask));
        c.labels.push_back(label);
        c.literals.push_back(k);
      }
      std::size_t k = 0;
      for (; k < idx_.size(); ++k) {
        if (++idx_[k] < options_[k].size()) break;
        idx_[k] = 0;
      }
      if (k == idx_.size()) exhausted_ = true;
      return c;
    }

   private:
    const MetricLogic& logic_;
    Plan plan_;
    std::vector<std::vector<std::pair<std::uint64_t, std::size_t>>> options_;
    std::vector<std::size_t> idx_;
    bool exhausted_ = false;
  };

  std::unique_ptr<ConclusionStream> conclusions(const Sequent& gamma_g) const override {
    auto plan = make_plan(gamma_g);
    if (!plan) return std::make_unique<VectorStream>(std::vector<Conclusion>{});
    return std::make_unique<Stream>(*this, std::move(*plan));
  }

  TransitionWitness realize(const Sequent& gamma_g, const Conclusion& c,
                            const std::vector<Valuation>& /*tau*/) const override {
    auto plan = make_plan(gamma_g);
    if (!plan) throw InternalError("metric realize on an unsatisfiable end-sequent");
    TransitionWitness w;
    w.num_successors = c.size();
    for (std::size_t s = 0; s < c.size(); ++s) {
      const Interval& deg = plan->degrees.at(c.literals.at(s));
      auto t = deg.pick();
      if (!t) throw InternalError("metric realize: empty degree range");
      w.edges.push_back({s, *t, c.labels.at(s)});
    }
    return w;
  }

  /// Owners are independent: each needs one choice whose successor the
  /// oracle satisfies, so they are searched one at a time.
  std::optional<SearchResult> search(const Sequent& gamma_g, ChildOracle& oracle) const override {
    auto plan = make_plan(gamma_g);
    if (!plan) return std::nullopt;
    Conclusion c;
    std::vector<ChildResult> children;
    for (std::size_t k = 0; k < plan->owners.size(); ++k) {
      if (plan->pairs[k].size() > kMaxPairs) throw CapExceeded("too many relevance pairs in a metric literal");
      const std::uint64_t limit = std::uint64_t{1} << plan->pairs[k].size();
      bool found = false;
      for (std::uint64_t mask = 0; mask < limit && !found; ++mask) {
        auto m = witness_label(*plan, k, mask);
        if (!m) continue;
        Sequent q = successor(*plan, k, mask);
        oracle.retain(combined_size(q));
        auto r = oracle.query(q);
        if (!r) continue;
        c.successors.push_back(std::move(q));
        c.labels.push_back(*m);
        c.literals.push_back(k);
        children.push_back(std::move(*r));
        found = true;
      }
      if (!found) return std::nullopt;
    }
    std::vector<Valuation> tau;
    for (const auto& ch : children) tau.push_back(ch.values);
    return SearchResult{realize(gamma_g, c, tau), std::move(children)};
  }

 private:
  std::shared_ptr<const MetricSpace> space_;
  bool crisp_;
};

}  // namespace nexfuz

#endif  // NEXFUZ_LOGIC_METRIC_HPP
