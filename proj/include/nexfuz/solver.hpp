#ifndef NEXFUZ_SOLVER_HPP
#define NEXFUZ_SOLVER_HPP

#include "nexfuz/model.hpp"
#include "nexfuz/onestep.hpp"
#include "nexfuz/prop_tableau.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nexfuz {

constexpr std::size_t kDefaultMaxLiterals = 10;

/// Layer cap from NEXFUZ_MAX_LITERALS, or the default.
inline std::size_t max_literals_from_env() {
  if (const char* s = std::getenv("NEXFUZ_MAX_LITERALS")) {
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(s, &pos);
      if (pos == std::string(s).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("NEXFUZ_MAX_LITERALS must be a positive integer, got '") + s + "'");
  }
  return kDefaultMaxLiterals;
}

struct SolveOptions {
  std::size_t max_literals = kDefaultMaxLiterals;  // modal occurrences per layer
  bool verify = true;                              // model-check the witness
  TraceSink trace;                                 // every propositional rule application
};

/// Instrumentation of one solver run.
struct SolveStats {
  std::size_t nodes = 0;
  std::size_t max_depth = 0;                  // deepest recursion level reached (root is 0)
  std::size_t root_size = 0;                  // combined size of the input sequent
  std::vector<std::size_t> peak_storage;      // per level: largest sequent storage held by one node
  std::size_t max_branching = 0;              // most successors of a realised node
  std::size_t branching_violations = 0;       // prob nodes with more than 2n+1 successors
};

struct Verdict {
  bool sat = false;
  std::optional<PointedModel> witness;
  SolveStats stats;

  explicit operator bool() const { return sat; }
};

namespace detail {

class SolverRun {
 public:
  SolverRun(const OneStepLogic& logic, const SolveOptions& opts) : logic_(logic), opts_(opts) {}

  std::optional<PointedModel> solve(const Sequent& gamma, std::size_t level) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, level);
    if (stats.peak_storage.size() <= level) stats.peak_storage.resize(level + 1, 0);

    Decomposition d = top_level_decompose(gamma);
    if (d.num_vars() > opts_.max_literals) {
      throw CapExceeded(std::to_string(d.num_vars()) + " modal literals in one layer, cap is " +
                        std::to_string(opts_.max_literals));
    }
    const std::size_t base = combined_size(gamma) + combined_size(d.lifted);

    Saturation saturation(d.lifted, opts_.trace);
    while (auto g = saturation.next()) {
      Oracle oracle(*this, d, level);
      auto found = logic_.search(*g, oracle);
      const std::size_t held = base + saturation.peak_size() + combined_size(*g) + oracle.peak_retained;
      stats.peak_storage[level] = std::max(stats.peak_storage[level], held);
      if (!found) continue;

      std::vector<const PointedModel*> kids;
      for (const auto& ch : found->children) kids.push_back(&oracle.models.at(ch.handle));
      PointedModel m = assemble_witness(logic_.model_kind(), found->transition, kids, logic_.space());
      record_branching(*g, found->transition);
      return m;
    }
    return std::nullopt;
  }

  SolveStats stats;

 private:
  class Oracle : public ChildOracle {
   public:
    Oracle(SolverRun& run, const Decomposition& d, std::size_t level) : run_(run), d_(d), level_(level) {}

    std::optional<ChildResult> query(const Sequent& q) override {
      Sequent child = substitute(q, d_.binding);
      auto m = run_.solve(child, level_ + 1);
      if (!m) return std::nullopt;
      ChildResult r;
      Evaluator ev(m->model);
      for (const auto& [v, i] : q) {
        Rational val = ev(m->root, d_.binding.at(v.var_index()));
        if (!i.contains(val)) throw InternalError("child witness misses its interval for " + v.str());
        r.values.emplace(v.var_index(), std::move(val));
      }
      r.handle = models.size();
      models.push_back(std::move(*m));
      return r;
    }

    void retain(std::size_t combined) override { peak_retained = std::max(peak_retained, combined); }

    std::vector<PointedModel> models;
    std::size_t peak_retained = 0;

   private:
    SolverRun& run_;
    const Decomposition& d_;
    std::size_t level_;
  };

  void record_branching(const Sequent& g, const TransitionWitness& t) {
    stats.max_branching = std::max(stats.max_branching, t.num_successors);
    if (logic_.model_kind() == ModelKind::Prob) {
      std::size_t n = modal_literals(g).size();
      if (t.num_successors > 2 * n + 1) ++stats.branching_violations;
    }
  }

  const OneStepLogic& logic_;
  const SolveOptions& opts_;
};

inline void collect_atoms(const Sequent& gamma, std::set<std::string>& out) {
  for (const auto& [f, i] : gamma) {
    for (const auto& a : atoms_of(f)) out.insert(a);
  }
}

}  // namespace detail

/// Throws ParseError when a modality of Γ is outside the logic.
inline void check_signature(const Sequent& gamma, const OneStepLogic& logic) {
  for (const auto& [f, i] : gamma) {
    for (const Formula& g : subformulas(f)) {
      if (g.is_modal()) logic.check_modality(g.op());
      if (g.kind() == FormulaKind::Var) throw ParseError("variables cannot occur in input sequents");
    }
  }
}

/// Satisfiability of an interval sequent, with a witness on success.
/// `logic` should already be wrapped with atoms (see with_atoms).
inline Verdict sat(const Sequent& gamma, const OneStepLogic& logic, const SolveOptions& opts = {}) {
  check_signature(gamma, logic);
  detail::SolverRun run(logic, opts);
  run.stats.root_size = combined_size(gamma);
  Verdict v;
  auto m = run.solve(gamma, 0);
  v.stats = run.stats;
  if (!m) return v;
  std::set<std::string> names;
  detail::collect_atoms(gamma, names);
  complete_atoms(m->model, names);
  if (opts.verify) {
    m->model.validate();
    if (!check_sequent(m->model, m->root, gamma)) throw InternalError("witness fails the input sequent");
  }
  v.sat = true;
  v.witness = std::move(*m);
  return v;
}

/// The sequent {φ ∈ I} for φ op p.
inline Sequent threshold_sequent(const Formula& phi, CompOp op, const Rational& p) {
  Sequent s;
  s.insert(phi, Interval::from_comparison(op, p));
  return s;
}

inline Verdict sat_threshold(const Formula& phi, CompOp op, const Rational& p, const OneStepLogic& logic,
                             const SolveOptions& opts = {}) {
  if (p.sign() < 0 || p > Rational(1)) throw std::invalid_argument("threshold outside [0,1]");
  return sat(threshold_sequent(phi, op, p), logic, opts);
}

}  // namespace nexfuz

#endif  // NEXFUZ_SOLVER_HPP
