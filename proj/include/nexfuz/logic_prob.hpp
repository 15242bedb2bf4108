#ifndef NEXFUZ_LOGIC_PROB_HPP
#define NEXFUZ_LOGIC_PROB_HPP

#include "nexfuz/lp.hpp"
#include "nexfuz/onestep.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nexfuz {

enum class ProbVariant { Generally, MoreThan };

/// One mass condition: μ{x | τ(v)(x) ∈ value_set} mass_op mass_threshold.
struct MassCondition {
  bool active = false;
  Interval value_set;
  CompOp mass_op = CompOp::Ge;
  Rational mass_threshold;
};

/// Lower and upper condition of one modal literal.
struct BoundPair {
  std::size_t var = 0;
  MassCondition lower;
  MassCondition upper;
};

/// Set complement of a lower or upper half-interval inside [0,1].
inline Interval half_complement(const Interval& half) {
  if (half.is_empty()) return Interval::unit();
  if (half.hi() == Rational(1) && !half.hi_open()) return Interval::at_most(half.lo(), !half.lo_open());
  return Interval::at_least(half.hi(), !half.hi_open());
}

/// Translates each ◯v ∈ ⟨a,b⟩ / M_p v ∈ ⟨a,b⟩ into mass conditions.
///
/// ◯:   μ{τ(v) ▷ a} ▷ a  and  μ{τ(v) ◁ b} ◁° 1−b.
/// M_p: μ{τ(v) ▷ a} > p  and  μ{τ(v) ◁ b} ≥ 1−p.
/// A closed 0 lower end or closed 1 upper end gives no condition.
inline std::vector<BoundPair> bounds_to_conditions(const Sequent& gamma_g, ProbVariant variant) {
  std::vector<BoundPair> out;
  for (const auto& lit : modal_literals(gamma_g)) {
    BoundPair bp;
    bp.var = lit.var;
    const Interval& i = lit.interval;
    if (i.is_empty()) {
      // No realizable vector exists; keep an unsatisfiable condition.
      bp.lower = {true, Interval::empty(), CompOp::Gt, Rational(1)};
      out.push_back(bp);
      continue;
    }
    bp.lower.value_set = i.lower_half();
    bp.upper.value_set = i.upper_half();
    const Rational p = variant == ProbVariant::MoreThan ? lit.op.param : Rational(0);
    if (!i.lower_vacuous()) {
      bp.lower.active = true;
      if (variant == ProbVariant::Generally) {
        bp.lower.mass_op = i.lower_op();
        bp.lower.mass_threshold = i.lo();
      } else {
        bp.lower.mass_op = CompOp::Gt;
        bp.lower.mass_threshold = p;
      }
    }
    if (!i.upper_vacuous()) {
      bp.upper.active = true;
      if (variant == ProbVariant::Generally) {
        bp.upper.mass_op = comp_dual(i.upper_op());
        bp.upper.mass_threshold = Rational(1) - i.hi();
      } else {
        bp.upper.mass_op = CompOp::Ge;
        bp.upper.mass_threshold = Rational(1) - p;
      }
    }
    out.push_back(bp);
  }
  return out;
}

/// A vector of {0,1}^{2n} stored as 2n characters read left to right:
/// position 2i is literal i's lower bit, 2i+1 its upper bit.
struct ConfigVector {
  std::vector<bool> bits;

  bool lower(std::size_t i) const { return bits[2 * i]; }
  bool upper(std::size_t i) const { return bits[2 * i + 1]; }

  std::string str() const {
    std::string s;
    for (bool b : bits) s.push_back(b ? '1' : '0');
    return s;
  }

  friend bool operator==(const ConfigVector&, const ConfigVector&) = default;
  friend auto operator<=>(const ConfigVector& a, const ConfigVector& b) { return a.bits <=> b.bits; }
};

using Configuration = std::vector<ConfigVector>;

inline ConfigVector vector_from_code(std::uint64_t code, std::size_t n) {
  ConfigVector v;
  v.bits.resize(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) v.bits[k] = (code >> (2 * n - 1 - k)) & 1U;
  return v;
}

constexpr std::size_t kDefaultConfigCap = 6;

/// Distinct-vector subsets of {0,1}^{2n} of size 1..2n+1, size-major and
/// lexicographic within a size. n = 0 yields the single empty configuration.
class ConfigurationEnumerator {
 public:
  explicit ConfigurationEnumerator(std::size_t n, std::size_t cap = kDefaultConfigCap) : n_(n) {
    if (n > cap) throw CapExceeded("configuration enumeration over " + std::to_string(n) + " literals, cap is " +
                                   std::to_string(cap));
    universe_ = std::uint64_t{1} << (2 * n);
    max_size_ = n == 0 ? 0 : 2 * n + 1;
  }

  std::optional<Configuration> next() {
    if (n_ == 0) {
      if (done_) return std::nullopt;
      done_ = true;
      return Configuration{};
    }
    if (done_) return std::nullopt;
    if (combo_.empty()) {
      combo_ = {0};
    } else if (!advance()) {
      ++size_;
      if (size_ > max_size_ || size_ > universe_) {
        done_ = true;
        return std::nullopt;
      }
      combo_.resize(size_);
      for (std::size_t k = 0; k < size_; ++k) combo_[k] = k;
    }
    Configuration c;
    for (auto code : combo_) c.push_back(vector_from_code(code, n_));
    return c;
  }

 private:
  bool advance() {
    const std::size_t k = combo_.size();
    for (std::size_t pos = k; pos-- > 0;) {
      if (combo_[pos] < universe_ - (k - pos)) {
        ++combo_[pos];
        for (std::size_t q = pos + 1; q < k; ++q) combo_[q] = combo_[q - 1] + 1;
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::uint64_t universe_ = 1;
  std::size_t max_size_ = 0;
  std::size_t size_ = 1;
  std::vector<std::uint64_t> combo_;
  bool done_ = false;
};

inline std::vector<Configuration> enum_configurations(std::size_t n, std::size_t cap = kDefaultConfigCap) {
  std::vector<Configuration> out;
  ConfigurationEnumerator e(n, cap);
  while (auto c = e.next()) out.push_back(std::move(*c));
  return out;
}

inline RelOp to_rel(CompOp op) {
  switch (op) {
    case CompOp::Lt: return RelOp::Lt;
    case CompOp::Le: return RelOp::Le;
    case CompOp::Gt: return RelOp::Gt;
    case CompOp::Ge: return RelOp::Ge;
  }
  return RelOp::Eq;
}

/// λ ≥ 0, Σλ = 1 and every active condition over the configuration's weights.
inline LinSystem configuration_system(const Configuration& cfg, const std::vector<BoundPair>& conds) {
  LinSystem sys(cfg.size());
  sys.add(std::vector<Rational>(cfg.size(), Rational(1)), RelOp::Eq, Rational(1));
  for (std::size_t u = 0; u < cfg.size(); ++u) {
    std::vector<Rational> e(cfg.size(), Rational(0));
    e[u] = Rational(1);
    sys.add(std::move(e), RelOp::Ge, Rational(0));
  }
  for (std::size_t i = 0; i < conds.size(); ++i) {
    for (int side = 0; side < 2; ++side) {
      const MassCondition& mc = side == 0 ? conds[i].lower : conds[i].upper;
      if (!mc.active) continue;
      std::vector<Rational> row(cfg.size(), Rational(0));
      for (std::size_t u = 0; u < cfg.size(); ++u) {
        if (side == 0 ? cfg[u].lower(i) : cfg[u].upper(i)) row[u] = Rational(1);
      }
      sys.add(std::move(row), to_rel(mc.mass_op), mc.mass_threshold);
    }
  }
  return sys;
}

/// Weights λ (one per vector) meeting the conditions, or nullopt.
inline std::optional<std::vector<Rational>> config_feasible(const Configuration& cfg,
                                                            const std::vector<BoundPair>& conds) {
  if (cfg.empty()) {
    // An empty support carries no mass: only vacuous conditions survive.
    for (const auto& c : conds) {
      for (const auto* mc : {&c.lower, &c.upper}) {
        if (mc->active && !compare(Rational(0), mc->mass_op, mc->mass_threshold)) return std::nullopt;
      }
    }
    return std::vector<Rational>{};
  }
  return feasible(configuration_system(cfg, conds));
}

/// Value-side sequent of a vector: bit set means the condition's value set,
/// unset its complement; intervals intersect per variable.
inline Sequent decode_vector(const ConfigVector& u, const std::vector<BoundPair>& conds) {
  Sequent q;
  for (std::size_t i = 0; i < conds.size(); ++i) {
    const Formula v = Formula::var(conds[i].var);
    const Interval& lo = conds[i].lower.value_set;
    const Interval& hi = conds[i].upper.value_set;
    q.insert(v, u.lower(i) ? lo : half_complement(lo));
    q.insert(v, u.upper(i) ? hi : half_complement(hi));
  }
  return q;
}

/// Probabilistic one-step logics: ◯ (h = id) or M_p over distributions.
class ProbLogic : public OneStepLogic {
 public:
  explicit ProbLogic(ProbVariant variant, std::size_t config_cap = kDefaultConfigCap)
      : variant_(variant), config_cap_(config_cap) {}

  std::string name() const override { return variant_ == ProbVariant::Generally ? "lgen" : "mp"; }
  ModelKind model_kind() const override { return ModelKind::Prob; }
  ProbVariant variant() const { return variant_; }

  void check_modality(const ModalOp& op) const override {
    auto want = variant_ == ProbVariant::Generally ? ModalOp::Kind::Generally : ModalOp::Kind::MoreThan;
    if (op.kind != want) throw ParseError("modality " + op.str() + " is not available in " + name());
    if (op.kind == ModalOp::Kind::MoreThan && (op.param.sign() < 0 || op.param > Rational(1))) {
      throw ParseError("M{p} needs 0 <= p <= 1");
    }
  }

  class Stream : public ConclusionStream {
   public:
    Stream(std::vector<BoundPair> conds, std::size_t cap) : conds_(std::move(conds)), configs_(conds_.size(), cap) {}

    std::optional<Conclusion> next() override {
      while (auto cfg = configs_.next()) {
        std::vector<Sequent> seqs;
        bool realizable = true;
        for (const auto& u : *cfg) {
          seqs.push_back(decode_vector(u, conds_));
          if (seqs.back().has_empty()) {
            realizable = false;
            break;
          }
        }
        if (!realizable) continue;
        auto lambda = config_feasible(*cfg, conds_);
        if (!lambda) continue;
        Conclusion c;
        c.successors = std::move(seqs);
        c.weights = std::move(*lambda);
        return c;
      }
      return std::nullopt;
    }

   private:
    std::vector<BoundPair> conds_;
    ConfigurationEnumerator configs_;
  };

  /// The full conclusion family: feasible configurations of
  /// realizable vectors in enumeration order. Exponential; small n only.
  std::unique_ptr<ConclusionStream> conclusions(const Sequent& gamma_g) const override {
    auto conds = bounds_to_conditions(gamma_g, variant_);
    for (const auto& l : modal_literals(gamma_g)) {
      if (l.interval.is_empty()) return std::make_unique<VectorStream>(std::vector<Conclusion>{});
    }
    return std::make_unique<Stream>(std::move(conds), config_cap_);
  }

  TransitionWitness realize(const Sequent& /*gamma_g*/, const Conclusion& c,
                            const std::vector<Valuation>& /*tau*/) const override {
    TransitionWitness w;
    w.num_successors = c.size();
    Rational total(0);
    for (std::size_t s = 0; s < c.size(); ++s) {
      const Rational& l = c.weights.at(s);
      total += l;
      if (l.sign() > 0) w.edges.push_back({s, l, 0});
    }
    if (c.size() > 0 && total != Rational(1)) throw InternalError("prob realize: weights sum to " + total.str());
    return w;
  }

  /// Same verdicts as walking conclusions(), much cheaper: every realizable
  /// vector is tried once (most bits first, skipping vectors dominated by a
  /// satisfiable one, which never help since all conditions bound masses from
  /// below), and after each satisfiable vector the LP over all satisfiable
  /// vectors so far is solved. A feasible point is reduced to at most 2n+1
  /// vectors by Carathéodory.
  std::optional<SearchResult> search(const Sequent& gamma_g, ChildOracle& oracle) const override {
    auto lits = modal_literals(gamma_g);
    for (const auto& l : lits) {
      if (l.interval.is_empty()) return std::nullopt;
    }
    auto conds = bounds_to_conditions(gamma_g, variant_);
    const std::size_t n = conds.size();
    if (n == 0) return SearchResult{TransitionWitness{}, {}};

    std::vector<ConfigVector> candidates;
    for (const auto& u : realizable_vectors(conds)) candidates.push_back(u);

    std::vector<ConfigVector> sat;
    std::vector<ChildResult> children;
    for (const auto& u : candidates) {
      bool dominated = std::any_of(sat.begin(), sat.end(), [&](const ConfigVector& w) {
        for (std::size_t k = 0; k < u.bits.size(); ++k) {
          if (u.bits[k] && !w.bits[k]) return false;
        }
        return true;
      });
      if (dominated) continue;
      Sequent q = decode_vector(u, conds);
      oracle.retain(combined_size(q));
      auto r = oracle.query(q);
      if (!r) continue;
      sat.push_back(u);
      children.push_back(std::move(*r));
      if (!covers(sat, conds)) continue;
      auto lambda = solve_weights(sat, conds);
      if (!lambda) continue;

      std::vector<std::vector<Rational>> points;
      for (const auto& w : sat) {
        std::vector<Rational> p;
        for (bool b : w.bits) p.emplace_back(b ? 1 : 0);
        points.push_back(std::move(p));
      }
      auto support = caratheodory_reduce(points, *lambda);
      Conclusion c;
      SearchResult out;
      std::size_t held = 0;
      for (std::size_t s : support) {
        c.successors.push_back(decode_vector(sat[s], conds));
        held += combined_size(c.successors.back());
        c.weights.push_back((*lambda)[s]);
        out.children.push_back(children[s]);
      }
      oracle.retain(held);
      std::vector<Valuation> tau;
      for (const auto& ch : out.children) tau.push_back(ch.values);
      out.transition = realize(gamma_g, c, tau);
      return out;
    }
    return std::nullopt;
  }

  /// Realizable vectors (non-empty decoding), most set bits first, then
  /// lexicographically descending.
  static std::vector<ConfigVector> realizable_vectors(const std::vector<BoundPair>& conds) {
    const std::size_t n = conds.size();
    // Per literal the pair 00 is always empty; 01, 10, 11 may be realizable.
    std::vector<std::vector<std::pair<bool, bool>>> options(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto [l, h] : {std::pair{true, true}, std::pair{true, false}, std::pair{false, true}}) {
        Interval lo = l ? conds[i].lower.value_set : half_complement(conds[i].lower.value_set);
        Interval hi = h ? conds[i].upper.value_set : half_complement(conds[i].upper.value_set);
        if (!lo.intersect(hi).is_empty()) options[i].emplace_back(l, h);
      }
    }
    std::vector<ConfigVector> out;
    std::vector<std::size_t> idx(n, 0);
    for (const auto& o : options) {
      if (o.empty()) return out;
    }
    while (true) {
      ConfigVector v;
      v.bits.resize(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        v.bits[2 * i] = options[i][idx[i]].first;
        v.bits[2 * i + 1] = options[i][idx[i]].second;
      }
      out.push_back(std::move(v));
      std::size_t i = n;
      while (i-- > 0) {
        if (++idx[i] < options[i].size()) break;
        idx[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
    std::stable_sort(out.begin(), out.end(), [](const ConfigVector& a, const ConfigVector& b) {
      auto pa = std::count(a.bits.begin(), a.bits.end(), true);
      auto pb = std::count(b.bits.begin(), b.bits.end(), true);
      if (pa != pb) return pa > pb;
      return a > b;
    });
    return out;
  }

 private:
  // Cheap necessary condition: every condition needing positive mass has
  // some satisfiable vector with its bit set.
  static bool covers(const std::vector<ConfigVector>& sat, const std::vector<BoundPair>& conds) {
    for (std::size_t i = 0; i < conds.size(); ++i) {
      for (int side = 0; side < 2; ++side) {
        const MassCondition& mc = side == 0 ? conds[i].lower : conds[i].upper;
        if (!mc.active || compare(Rational(0), mc.mass_op, mc.mass_threshold)) continue;
        bool hit = std::any_of(sat.begin(), sat.end(),
                               [&](const ConfigVector& w) { return side == 0 ? w.lower(i) : w.upper(i); });
        if (!hit) return false;
      }
    }
    return true;
  }

  static std::optional<std::vector<Rational>> solve_weights(const std::vector<ConfigVector>& sat,
                                                            const std::vector<BoundPair>& conds) {
    LinSystem sys = configuration_system(sat, conds);
    if (sat.size() <= 4) return fm_feasible(sys);
    return simplex_feasible(sys);
  }

  ProbVariant variant_;
  std::size_t config_cap_;
};

}  // namespace nexfuz

#endif  // NEXFUZ_LOGIC_PROB_HPP
