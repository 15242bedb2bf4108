#ifndef NEXFUZ_MODEL_HPP
#define NEXFUZ_MODEL_HPP

#include "nexfuz/metric_space.hpp"
#include "nexfuz/onestep.hpp"
#include "nexfuz/sequent.hpp"

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nexfuz {

inline ModelKind parse_model_kind(const std::string& s) {
  if (s == "prob") return ModelKind::Prob;
  if (s == "fuzzyrel") return ModelKind::FuzzyRel;
  if (s == "metric") return ModelKind::Metric;
  if (s == "metric-crisp") return ModelKind::MetricCrisp;
  throw ParseError("unknown model kind '" + s + "'");
}

inline bool is_metric(ModelKind k) { return k == ModelKind::Metric || k == ModelKind::MetricCrisp; }

/// Raised when a formula cannot be evaluated on a model.
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

/// Finite coalgebra: per-state outgoing edges (probabilities, fuzzy degrees
/// or labelled degrees) and an atom valuation.
struct FiniteModel {
  ModelKind kind = ModelKind::FuzzyRel;
  std::vector<std::string> states;
  std::vector<std::vector<Edge>> trans;  // Edge::successor is a state index
  std::vector<std::map<std::string, Rational>> atoms;
  std::shared_ptr<const MetricSpace> space;

  std::size_t size() const { return states.size(); }

  std::size_t add_state(std::string name) {
    states.push_back(std::move(name));
    trans.emplace_back();
    atoms.emplace_back();
    return states.size() - 1;
  }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i] == name) return i;
    }
    return std::nullopt;
  }

  std::size_t require(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw ParseError("unknown state '" + name + "'");
    return *i;
  }

  /// Throws ParseError describing the first violated invariant.
  void validate() const {
    if (states.empty()) throw ParseError("model has no states");
    if (trans.size() != states.size() || atoms.size() != states.size()) throw ParseError("model tables out of shape");
    std::set<std::string> names(states.begin(), states.end());
    if (names.size() != states.size()) throw ParseError("duplicate state names");
    if (is_metric(kind) && !space) throw ParseError("metric model needs a metric space");
    for (std::size_t x = 0; x < states.size(); ++x) {
      Rational total(0);
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (const auto& e : trans[x]) {
        if (e.successor >= states.size()) throw ParseError("edge from " + states[x] + " to a missing state");
        if (e.degree.sign() < 0 || e.degree > Rational(1)) {
          throw ParseError("degree " + e.degree.str() + " outside [0,1] at state " + states[x]);
        }
        if (is_metric(kind) && e.label >= space->size()) throw ParseError("edge label out of range");
        if (kind == ModelKind::MetricCrisp && !e.degree.is_zero() && e.degree != Rational(1)) {
          throw ParseError("crisp metric model with degree " + e.degree.str());
        }
        if (!seen.emplace(e.successor, is_metric(kind) ? e.label : 0).second) {
          throw ParseError("duplicate edge at state " + states[x]);
        }
        total += e.degree;
      }
      if (kind == ModelKind::Prob && total != Rational(1)) {
        throw ParseError("distribution at state " + states[x] + " sums to " + total.str());
      }
      for (const auto& [a, v] : atoms[x]) {
        if (v.sign() < 0 || v > Rational(1)) throw ParseError("atom value outside [0,1] at state " + states[x]);
      }
    }
  }

  nlohmann::json to_json(std::optional<std::size_t> root = std::nullopt) const {
    nlohmann::json t = nlohmann::json::object();
    nlohmann::json at = nlohmann::json::object();
    for (std::size_t x = 0; x < states.size(); ++x) {
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& e : trans[x]) {
        nlohmann::json je = {{"to", states[e.successor]}, {"degree", e.degree.str()}};
        if (is_metric(kind)) je["label"] = space->label(e.label);
        edges.push_back(je);
      }
      t[states[x]] = edges;
      nlohmann::json av = nlohmann::json::object();
      for (const auto& [a, v] : atoms[x]) av[a] = v.str();
      at[states[x]] = av;
    }
    nlohmann::json j = {{"kind", to_string(kind)}, {"states", states}, {"trans", t}, {"atoms", at}};
    if (space) j["space"] = space->to_json();
    if (root) j["root"] = states.at(*root);
    return j;
  }

  static FiniteModel from_json(const nlohmann::json& j, std::shared_ptr<const MetricSpace> space = nullptr) {
    try {
      FiniteModel m;
      m.kind = parse_model_kind(j.at("kind").get<std::string>());
      if (j.contains("space")) m.space = std::make_shared<const MetricSpace>(MetricSpace::from_json(j["space"]));
      else m.space = std::move(space);
      for (const auto& s : j.at("states")) m.add_state(s.get<std::string>());
      if (j.contains("trans")) {
        for (const auto& [from, edges] : j["trans"].items()) {
          std::size_t x = m.require(from);
          for (const auto& e : edges) {
            Edge edge;
            edge.successor = m.require(e.at("to").get<std::string>());
            edge.degree = Rational::parse(e.at("degree").get<std::string>());
            if (is_metric(m.kind)) {
              if (!m.space) throw ParseError("metric model needs a metric space");
              edge.label = m.space->require(e.at("label").get<std::string>());
            }
            m.trans[x].push_back(std::move(edge));
          }
        }
      }
      if (j.contains("atoms")) {
        for (const auto& [state, vals] : j["atoms"].items()) {
          std::size_t x = m.require(state);
          for (const auto& [a, v] : vals.items()) m.atoms[x][a] = Rational::parse(v.get<std::string>());
        }
      }
      m.validate();
      return m;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("model JSON: ") + e.what());
    }
  }

  static FiniteModel load(const std::string& path, std::shared_ptr<const MetricSpace> space = nullptr) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file '" + path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("model file '" + path + "': " + e.what());
    }
    return from_json(j, std::move(space));
  }
};

/// Evaluates formulas state by state, memoising per (subformula, state).
/// Only states reachable from the queried one are visited.
class Evaluator {
 public:
  explicit Evaluator(const FiniteModel& m) : m_(m) {}

  Rational operator()(std::size_t x, const Formula& f) { return value(x, f); }

  const Rational& value(std::size_t x, const Formula& f) {
    if (x >= m_.size()) throw EvalError("state index out of range");
    auto& slot = memo_.try_emplace(f, m_.size()).first->second;
    if (!slot[x]) slot[x] = compute(x, f);
    return *memo_.find(f)->second[x];
  }

 private:
  Rational compute(std::size_t x, const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Zero: return Rational(0);
      case FormulaKind::Atom: {
        auto it = m_.atoms[x].find(f.name());
        if (it == m_.atoms[x].end()) throw EvalError("atom '" + f.name() + "' has no value at state " + m_.states[x]);
        return it->second;
      }
      case FormulaKind::Var: throw EvalError("cannot evaluate a variable on a model");
      case FormulaKind::Neg: return Rational(1) - value(x, f.arg());
      case FormulaKind::Minus: return monus(value(x, f.arg()), f.constant());
      case FormulaKind::And: {
        Rational l = value(x, f.left());
        return min(l, value(x, f.right()));
      }
      case FormulaKind::Modal: {
        check_kind(f.op());
        std::vector<Rational> succ;
        for (const auto& e : m_.trans[x]) succ.push_back(value(e.successor, f.arg()));
        return lift(f.op(), m_.trans[x], succ);
      }
    }
    return Rational(0);
  }

  void check_kind(const ModalOp& op) const {
    bool ok = false;
    switch (op.kind) {
      case ModalOp::Kind::Diamond: ok = m_.kind == ModelKind::FuzzyRel; break;
      case ModalOp::Kind::Generally:
      case ModalOp::Kind::MoreThan: ok = m_.kind == ModelKind::Prob; break;
      case ModalOp::Kind::MetricDiamond: ok = is_metric(m_.kind); break;
    }
    if (!ok) throw EvalError("modality " + op.str() + " does not apply to a " + to_string(m_.kind) + " model");
  }

  // f[k] is the argument's value at the target of edges[k].
  Rational lift(const ModalOp& op, const std::vector<Edge>& edges, const std::vector<Rational>& f) const {
    Rational best(0);
    auto mass_at_least = [&](const Rational& alpha) {
      Rational m(0);
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (f[k] >= alpha) m += edges[k].degree;
      }
      return m;
    };
    switch (op.kind) {
      case ModalOp::Kind::Diamond:
        for (std::size_t k = 0; k < edges.size(); ++k) best = max(best, min(edges[k].degree, f[k]));
        return best;
      case ModalOp::Kind::Generally:
        // sup_α min(α, μ{f >= α}) is attained at a support value.
        for (std::size_t k = 0; k < edges.size(); ++k) {
          if (edges[k].degree.is_zero()) continue;
          best = max(best, min(f[k], mass_at_least(f[k])));
        }
        return best;
      case ModalOp::Kind::MoreThan:
        for (std::size_t k = 0; k < edges.size(); ++k) {
          if (edges[k].degree.is_zero()) continue;
          if (f[k] > best && mass_at_least(f[k]) > op.param) best = f[k];
        }
        return best;
      case ModalOp::Kind::MetricDiamond: {
        std::size_t a = m_.space->require(op.label);
        for (std::size_t k = 0; k < edges.size(); ++k) {
          Rational reach = monus(op.param, m_.space->distance(a, edges[k].label));
          best = max(best, min(min(edges[k].degree, f[k]), reach));
        }
        return best;
      }
    }
    return best;
  }

  const FiniteModel& m_;
  std::map<Formula, std::vector<std::optional<Rational>>> memo_;
};

inline Rational eval(const FiniteModel& m, std::size_t x, const Formula& f) { return Evaluator(m)(x, f); }

inline bool check_sequent(const FiniteModel& m, std::size_t x, const Sequent& gamma) {
  Evaluator ev(m);
  for (const auto& [f, i] : gamma) {
    if (!i.contains(ev(x, f))) return false;
  }
  return true;
}

/// A model together with a designated state.
struct PointedModel {
  FiniteModel model;
  std::size_t root = 0;
};

/// Disjoint union of the children plus a fresh root carrying `t`.
/// Edge j of t targets the root of children[t.edges[j].successor].
inline PointedModel assemble_witness(ModelKind kind, const TransitionWitness& t,
                                     const std::vector<const PointedModel*>& children,
                                     std::shared_ptr<const MetricSpace> space = nullptr) {
  if (children.size() != t.num_successors) throw std::invalid_argument("child count does not match the transition");
  PointedModel out;
  out.model.kind = kind;
  out.model.space = std::move(space);
  out.model.add_state("s0");
  out.model.atoms[0] = t.atoms;
  std::vector<std::size_t> child_root(children.size());
  for (std::size_t c = 0; c < children.size(); ++c) {
    const FiniteModel& cm = children[c]->model;
    if (cm.kind != kind) throw std::invalid_argument("child model kind mismatch");
    const std::size_t offset = out.model.size();
    for (std::size_t s = 0; s < cm.size(); ++s) {
      std::size_t id = out.model.add_state("s" + std::to_string(offset + s));
      out.model.atoms[id] = cm.atoms[s];
      for (Edge e : cm.trans[s]) {
        e.successor += offset;
        out.model.trans[id].push_back(std::move(e));
      }
    }
    child_root[c] = offset + children[c]->root;
  }
  for (Edge e : t.edges) {
    e.successor = child_root.at(e.successor);
    out.model.trans[0].push_back(std::move(e));
  }
  if (kind == ModelKind::Prob && out.model.trans[0].empty()) out.model.trans[0].push_back({0, Rational(1), 0});
  return out;
}

/// Gives every listed atom the value 0 wherever the valuation leaves it open.
inline void complete_atoms(FiniteModel& m, const std::set<std::string>& names) {
  for (auto& val : m.atoms) {
    for (const auto& a : names) val.try_emplace(a, Rational(0));
  }
}

}  // namespace nexfuz

#endif  // NEXFUZ_MODEL_HPP
