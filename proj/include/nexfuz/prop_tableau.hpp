#ifndef NEXFUZ_PROP_TABLEAU_HPP
#define NEXFUZ_PROP_TABLEAU_HPP

#include "nexfuz/sequent.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nexfuz {

enum class TableauRule { Ax, Ax0, Drop0, Neg, Minus, MinusZero, And };

constexpr const char* to_string(TableauRule r) {
  switch (r) {
    case TableauRule::Ax: return "Ax";
    case TableauRule::Ax0: return "Ax0";
    case TableauRule::Drop0: return "drop0";
    case TableauRule::Neg: return "neg";
    case TableauRule::Minus: return "minus";
    case TableauRule::MinusZero: return "minus'";
    case TableauRule::And: return "and";
  }
  return "?";
}

struct RuleClosed {};
struct RuleOne {
  Sequent conclusion;
};
struct RuleTwo {
  Sequent left;
  Sequent right;
};
struct RuleSaturated {};

struct RuleApplication {
  TableauRule rule = TableauRule::Ax;
  Formula premise;  // label of the reduced literal
  std::variant<RuleClosed, RuleOne, RuleTwo, RuleSaturated> result;

  bool saturated() const { return std::holds_alternative<RuleSaturated>(result); }
};

/// Called for every rule application during saturation.
using TraceSink = std::function<void(const Sequent& premise, const RuleApplication&)>;

/// True for labels the propositional rules cannot reduce: ♥v and atoms.
inline bool is_end_label(const Formula& f) { return f.is_modal() || f.is_atom(); }

/// Applies the first applicable rule, scanning literals in label order.
///
/// (Ax) closes on an empty interval; (Ax 0) closes on 0 ∈ I with 0 ∉ I and
/// otherwise drops the 0-literal; (¬), (⊖), (⊖') rewrite in place; (⊓)
/// branches. Conclusions are built with insert, which performs (∩).
inline RuleApplication apply_rule(const Sequent& gamma) {
  for (const auto& [label, interval] : gamma) {
    if (interval.is_empty()) return {TableauRule::Ax, label, RuleClosed{}};
  }
  for (const auto& [label, interval] : gamma) {
    switch (label.kind()) {
      case FormulaKind::Zero: {
        if (!interval.contains(Rational(0))) return {TableauRule::Ax0, label, RuleClosed{}};
        Sequent rest = gamma;
        rest.erase(label);
        return {TableauRule::Drop0, label, RuleOne{std::move(rest)}};
      }
      case FormulaKind::Neg: {
        Sequent rest = gamma;
        rest.erase(label);
        rest.insert(label.arg(), interval.complement());
        return {TableauRule::Neg, label, RuleOne{std::move(rest)}};
      }
      case FormulaKind::Minus: {
        Sequent rest = gamma;
        rest.erase(label);
        const Rational& c = label.constant();
        if (!interval.contains(Rational(0))) {
          rest.insert(label.arg(), interval.shift_trunc(c));
          return {TableauRule::Minus, label, RuleOne{std::move(rest)}};
        }
        rest.insert(label.arg(), Interval::at_most(interval.hi() + c, interval.hi_open()));
        return {TableauRule::MinusZero, label, RuleOne{std::move(rest)}};
      }
      case FormulaKind::And: {
        Sequent rest = gamma;
        rest.erase(label);
        Interval loose = interval.lower_half();
        Sequent left = rest;
        left.insert(label.left(), interval);
        left.insert(label.right(), loose);
        Sequent right = std::move(rest);
        right.insert(label.left(), loose);
        right.insert(label.right(), interval);
        return {TableauRule::And, label, RuleTwo{std::move(left), std::move(right)}};
      }
      default:
        break;
    }
  }
  return {TableauRule::Ax, Formula::zero(), RuleSaturated{}};
}

/// Resumable depth-first enumeration of the open end-sequents Γ_G of a
/// sequent over one-step formulas. Every (⊓) choice is explored. Only the
/// current branch is held: the path is a vector of left/right decisions and
/// each branch is replayed from the root, so storage stays at one working
/// sequent. A (⊓) step whose two conclusions coincide is taken once.
class Saturation {
 public:
  explicit Saturation(Sequent gamma, TraceSink trace = {}) : root_(std::move(gamma)), trace_(std::move(trace)) {}

  std::optional<Sequent> next() {
    while (!done_) {
      std::optional<Sequent> leaf = run_branch();
      advance();
      if (leaf) return leaf;
    }
    return std::nullopt;
  }

  /// Largest combined size of the working sequent so far.
  std::size_t peak_size() const { return peak_; }

  /// Branches explored so far, open or closed.
  std::size_t branches() const { return branches_; }

 private:
  std::optional<Sequent> run_branch() {
    ++branches_;
    Sequent current = root_;
    std::size_t k = 0;
    while (true) {
      peak_ = std::max(peak_, combined_size(current));
      RuleApplication app = apply_rule(current);
      if (trace_) trace_(current, app);
      if (app.saturated()) return current;
      if (std::holds_alternative<RuleClosed>(app.result)) return std::nullopt;
      if (auto* one = std::get_if<RuleOne>(&app.result)) {
        current = std::move(one->conclusion);
        continue;
      }
      auto& two = std::get<RuleTwo>(app.result);
      if (two.left == two.right) {
        current = std::move(two.left);
        continue;
      }
      if (k == path_.size()) path_.push_back(false);
      current = path_[k++] ? std::move(two.right) : std::move(two.left);
    }
  }

  void advance() {
    while (!path_.empty() && path_.back()) path_.pop_back();
    if (path_.empty()) {
      done_ = true;
      return;
    }
    path_.back() = true;
  }

  Sequent root_;
  TraceSink trace_;
  std::vector<bool> path_;
  bool done_ = false;
  std::size_t peak_ = 0;
  std::size_t branches_ = 0;
};

/// All open end-sequents, in enumeration order; repeats are dropped.
inline std::vector<Sequent> saturate(const Sequent& gamma) {
  std::vector<Sequent> out;
  Saturation sat(gamma);
  while (auto g = sat.next()) {
    if (std::find(out.begin(), out.end(), *g) == out.end()) out.push_back(std::move(*g));
  }
  return out;
}

inline nlohmann::json trace_record(const Sequent& premise, const RuleApplication& app) {
  nlohmann::json conclusions = nlohmann::json::array();
  if (auto* one = std::get_if<RuleOne>(&app.result)) {
    conclusions.push_back(sequent_to_json(one->conclusion));
  } else if (auto* two = std::get_if<RuleTwo>(&app.result)) {
    conclusions.push_back(sequent_to_json(two->left));
    conclusions.push_back(sequent_to_json(two->right));
  }
  std::string rule = app.saturated() ? "saturated"
                     : std::holds_alternative<RuleClosed>(app.result) ? std::string(to_string(app.rule)) + ":closed"
                                                                      : to_string(app.rule);
  return {{"rule", rule}, {"premise", sequent_to_json(premise)}, {"conclusions", conclusions}};
}

}  // namespace nexfuz

#endif  // NEXFUZ_PROP_TABLEAU_HPP
