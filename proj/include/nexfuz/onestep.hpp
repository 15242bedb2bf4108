#ifndef NEXFUZ_ONESTEP_HPP
#define NEXFUZ_ONESTEP_HPP

#include "nexfuz/errors.hpp"
#include "nexfuz/metric_space.hpp"
#include "nexfuz/sequent.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nexfuz {

/// Γ split into a one-step sequent over fresh variables and their bindings.
struct Decomposition {
  std::vector<Formula> binding;  // binding[k] is the formula behind variable k
  Sequent lifted;

  std::size_t num_vars() const { return binding.size(); }
};

namespace detail {
inline Formula lift(const Formula& f, std::vector<Formula>& binding) {
  switch (f.kind()) {
    case FormulaKind::Neg: return Formula::neg(lift(f.arg(), binding));
    case FormulaKind::Minus: return Formula::minus(lift(f.arg(), binding), f.constant());
    case FormulaKind::And: {
      Formula l = lift(f.left(), binding);
      return Formula::conj(l, lift(f.right(), binding));
    }
    case FormulaKind::Modal: {
      binding.push_back(f.arg());
      return Formula::modal(f.op(), Formula::var(binding.size() - 1));
    }
    default: return f;
  }
}
}  // namespace detail

/// Replaces every argument of a top-layer modality by a fresh variable,
/// numbered in left-to-right order over the literals in label order.
inline Decomposition top_level_decompose(const Sequent& gamma) {
  Decomposition d;
  for (const auto& [f, i] : gamma) d.lifted.insert(detail::lift(f, d.binding), i);
  return d;
}

/// Q_{Γ♭}: intervals of variables bound to the same formula are intersected.
inline Sequent substitute(const Sequent& q, const std::vector<Formula>& binding) {
  Sequent out;
  for (const auto& [v, i] : q) {
    if (v.kind() != FormulaKind::Var) throw std::invalid_argument("substitute expects a sequent over variables");
    out.insert(binding.at(v.var_index()), i);
  }
  return out;
}

/// A modal literal of an end-sequent, ♥v ∈ I.
struct ModalLiteral {
  ModalOp op;
  std::size_t var;
  Interval interval;
};

inline std::vector<ModalLiteral> modal_literals(const Sequent& gamma_g) {
  std::vector<ModalLiteral> out;
  for (const auto& [f, i] : gamma_g) {
    if (!f.is_modal()) continue;
    if (f.arg().kind() != FormulaKind::Var) throw std::invalid_argument("end-sequent literal is not of the form op v");
    out.push_back({f.op(), f.arg().var_index(), i});
  }
  return out;
}

/// One transition of a realised one-step model, targeting a conclusion state.
struct Edge {
  std::size_t successor = 0;
  Rational degree;
  std::size_t label = 0;  // metric label index; unused otherwise

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// The root transition structure t ∈ TX plus the root's atom valuation.
struct TransitionWitness {
  std::size_t num_successors = 0;
  std::vector<Edge> edges;
  std::map<std::string, Rational> atoms;
};

/// One conclusion Q_i of a modal tableau rule: an ordered list of exact
/// sequents over the variables, one per successor state, plus whatever the
/// instance needs to realise it.
struct Conclusion {
  std::vector<Sequent> successors;
  std::vector<Rational> weights;       // distribution over successors
  std::vector<std::size_t> labels;     // metric witness label per successor
  std::vector<std::size_t> literals;   // modal literal index per successor

  std::size_t size() const { return successors.size(); }
};

/// Lazily produced conclusion family; next() returns nullopt when exhausted.
class ConclusionStream {
 public:
  virtual ~ConclusionStream() = default;
  virtual std::optional<Conclusion> next() = 0;
};

class VectorStream : public ConclusionStream {
 public:
  explicit VectorStream(std::vector<Conclusion> items) : items_(std::move(items)) {}
  std::optional<Conclusion> next() override {
    if (pos_ >= items_.size()) return std::nullopt;
    return std::move(items_[pos_++]);
  }

 private:
  std::vector<Conclusion> items_;
  std::size_t pos_ = 0;
};

/// τ(x, ·): truth values of the variables at one successor.
using Valuation = std::map<std::size_t, Rational>;

/// Answer of the recursive oracle for one successor sequent.
struct ChildResult {
  std::size_t handle = 0;  // identifies the child witness for the caller
  Valuation values;
};

/// Recursive satisfiability oracle handed to a logic's search.
class ChildOracle {
 public:
  virtual ~ChildOracle() = default;
  /// Solves one successor sequent over variables; nullopt when unsatisfiable.
  virtual std::optional<ChildResult> query(const Sequent& q) = 0;
  /// Reports the combined size of sequents the search currently holds.
  virtual void retain(std::size_t /*combined*/) {}
};

/// Adapter for plain callables, mostly for tests.
class FunctionOracle : public ChildOracle {
 public:
  using Fn = std::function<std::optional<ChildResult>(const Sequent&)>;
  explicit FunctionOracle(Fn fn) : fn_(std::move(fn)) {}
  std::optional<ChildResult> query(const Sequent& q) override { return fn_(q); }

 private:
  Fn fn_;
};

/// A realised conclusion: its transition structure and the chosen children.
struct SearchResult {
  TransitionWitness transition;
  std::vector<ChildResult> children;  // children[j] realises successor j
};

enum class ModelKind { Prob, FuzzyRel, Metric, MetricCrisp };

inline const char* to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Prob: return "prob";
    case ModelKind::FuzzyRel: return "fuzzyrel";
    case ModelKind::Metric: return "metric";
    case ModelKind::MetricCrisp: return "metric-crisp";
  }
  return "?";
}

/// A one-step logic: modal tableau rules plus the realise construction.
class OneStepLogic {
 public:
  virtual ~OneStepLogic() = default;

  virtual std::string name() const = 0;
  virtual ModelKind model_kind() const = 0;

  /// Label space of metric logics; null otherwise.
  virtual std::shared_ptr<const MetricSpace> space() const { return nullptr; }

  /// Throws ParseError when op is not in this logic's signature.
  virtual void check_modality(const ModalOp& op) const = 0;

  /// The conclusion family for an end-sequent over modal literals only.
  virtual std::unique_ptr<ConclusionStream> conclusions(const Sequent& gamma_g) const = 0;

  /// Transition structure for conclusion c given successor values tau[j].
  virtual TransitionWitness realize(const Sequent& gamma_g, const Conclusion& c,
                                    const std::vector<Valuation>& tau) const = 0;

  /// Finds a conclusion all of whose successors the oracle satisfies.
  /// The default walks the stream in order; instances may override with an
  /// equivalent but cheaper search.
  virtual std::optional<SearchResult> search(const Sequent& gamma_g, ChildOracle& oracle) const {
    auto stream = conclusions(gamma_g);
    while (auto c = stream->next()) {
      std::vector<ChildResult> children;
      bool ok = true;
      std::size_t held = 0;
      for (const auto& q : c->successors) held += combined_size(q);
      oracle.retain(held);
      for (const auto& q : c->successors) {
        auto r = oracle.query(q);
        if (!r) {
          ok = false;
          break;
        }
        children.push_back(std::move(*r));
      }
      if (!ok) continue;
      std::vector<Valuation> tau;
      for (const auto& ch : children) tau.push_back(ch.values);
      return SearchResult{realize(gamma_g, *c, tau), std::move(children)};
    }
    return std::nullopt;
  }

  ModalityCheck modality_check() const {
    return [this](const ModalOp& op) { check_modality(op); };
  }
};

/// L + At: atom literals are settled locally, the rest is delegated.
class WithAtoms : public OneStepLogic {
 public:
  explicit WithAtoms(std::shared_ptr<const OneStepLogic> inner) : inner_(std::move(inner)) {}

  std::string name() const override { return inner_->name(); }
  ModelKind model_kind() const override { return inner_->model_kind(); }
  std::shared_ptr<const MetricSpace> space() const override { return inner_->space(); }
  void check_modality(const ModalOp& op) const override { inner_->check_modality(op); }
  const OneStepLogic& inner() const { return *inner_; }

  std::unique_ptr<ConclusionStream> conclusions(const Sequent& gamma_g) const override {
    auto [modal, atoms] = split(gamma_g);
    if (!atoms) return std::make_unique<VectorStream>(std::vector<Conclusion>{});
    return inner_->conclusions(modal);
  }

  TransitionWitness realize(const Sequent& gamma_g, const Conclusion& c,
                            const std::vector<Valuation>& tau) const override {
    auto [modal, atoms] = split(gamma_g);
    if (!atoms) throw InternalError("realize called on contradictory atom bounds");
    TransitionWitness w = inner_->realize(modal, c, tau);
    w.atoms = std::move(*atoms);
    return w;
  }

  std::optional<SearchResult> search(const Sequent& gamma_g, ChildOracle& oracle) const override {
    auto [modal, atoms] = split(gamma_g);
    if (!atoms) return std::nullopt;
    auto r = inner_->search(modal, oracle);
    if (r) r->transition.atoms = std::move(*atoms);
    return r;
  }

  /// Modal part of Γ_G and a valuation of its atoms, or nullopt atoms when
  /// some atom interval is empty.
  static std::pair<Sequent, std::optional<std::map<std::string, Rational>>> split(const Sequent& gamma_g) {
    Sequent modal;
    std::map<std::string, Rational> atoms;
    bool ok = true;
    for (const auto& [f, i] : gamma_g) {
      if (f.is_atom()) {
        auto v = i.pick();
        if (!v) ok = false;
        else atoms.emplace(f.name(), *v);
      } else {
        modal.insert(f, i);
      }
    }
    if (!ok) return {std::move(modal), std::nullopt};
    return {std::move(modal), std::move(atoms)};
  }

 private:
  std::shared_ptr<const OneStepLogic> inner_;
};

inline std::shared_ptr<const OneStepLogic> with_atoms(std::shared_ptr<const OneStepLogic> logic) {
  return std::make_shared<WithAtoms>(std::move(logic));
}

}  // namespace nexfuz

#endif  // NEXFUZ_ONESTEP_HPP
