#ifndef NEXFUZ_FORMULA_HPP
#define NEXFUZ_FORMULA_HPP

#include "nexfuz/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace nexfuz {

/// A unary modality of one of the instance logics.
struct ModalOp {
  enum class Kind { Diamond, Generally, MoreThan, MetricDiamond };

  Kind kind = Kind::Diamond;
  Rational param;     // p of M_p, c of the metric diamond; zero otherwise
  std::string label;  // metric label; empty otherwise

  static ModalOp diamond() { return {Kind::Diamond, Rational(0), {}}; }
  static ModalOp generally() { return {Kind::Generally, Rational(0), {}}; }
  static ModalOp more_than(Rational p) { return {Kind::MoreThan, std::move(p), {}}; }
  static ModalOp metric_diamond(std::string label, Rational c) {
    return {Kind::MetricDiamond, std::move(c), std::move(label)};
  }

  /// Size |♥| of the operator: binary for M_p, one otherwise.
  std::size_t size() const { return kind == Kind::MoreThan ? binary_size(param) : 1; }

  std::string str() const {
    switch (kind) {
      case Kind::Diamond: return "dia";
      case Kind::Generally: return "G";
      case Kind::MoreThan: return "M{" + param.str() + "}";
      case Kind::MetricDiamond: return "dia{" + label + ", " + param.str() + "}";
    }
    return "?";
  }

  friend bool operator==(const ModalOp& a, const ModalOp& b) {
    return a.kind == b.kind && a.param == b.param && a.label == b.label;
  }
  friend std::strong_ordering operator<=>(const ModalOp& a, const ModalOp& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.param <=> b.param; c != 0) return c;
    return a.label.compare(b.label) <=> 0;
  }
};

enum class FormulaKind { Zero, Atom, Var, Neg, Minus, And, Modal };

/// Immutable formula tree with shared structure.
///
/// Var nodes are the variables of one-step formulas; they never come out of
/// the parser. Atoms are nullary modalities and may occur in every logic.
class Formula {
  struct Node;

 public:
  Formula() : Formula(zero()) {}

  static Formula zero() {
    static const Formula z(std::make_shared<const Node>(make_node(FormulaKind::Zero)));
    return z;
  }
  static Formula atom(std::string name) {
    Node n = make_node(FormulaKind::Atom);
    n.name = std::move(name);
    return make(std::move(n));
  }
  static Formula var(std::size_t index) {
    Node n = make_node(FormulaKind::Var);
    n.index = index;
    return make(std::move(n));
  }
  static Formula neg(Formula f) {
    Node n = make_node(FormulaKind::Neg);
    n.lhs = std::move(f).node_;
    return make(std::move(n));
  }
  static Formula minus(Formula f, Rational c) {
    if (c.sign() < 0 || c > Rational(1)) throw std::domain_error("shift constant outside [0,1]: " + c.str());
    Node n = make_node(FormulaKind::Minus);
    n.lhs = std::move(f).node_;
    n.constant = std::move(c);
    return make(std::move(n));
  }
  static Formula conj(Formula f, Formula g) {
    Node n = make_node(FormulaKind::And);
    n.lhs = std::move(f).node_;
    n.rhs = std::move(g).node_;
    return make(std::move(n));
  }
  /// f ⊔ g, defined as ¬(¬f ⊓ ¬g).
  static Formula disj(Formula f, Formula g) { return neg(conj(neg(std::move(f)), neg(std::move(g)))); }
  static Formula modal(ModalOp op, Formula f) {
    Node n = make_node(FormulaKind::Modal);
    n.op = std::move(op);
    n.lhs = std::move(f).node_;
    return make(std::move(n));
  }

  FormulaKind kind() const { return node_->kind; }
  bool is_modal() const { return kind() == FormulaKind::Modal; }
  bool is_atom() const { return kind() == FormulaKind::Atom; }

  const std::string& name() const { return node_->name; }
  std::size_t var_index() const { return node_->index; }
  const Rational& constant() const { return node_->constant; }
  const ModalOp& op() const { return node_->op; }
  Formula arg() const { return Formula(node_->lhs); }
  Formula left() const { return Formula(node_->lhs); }
  Formula right() const { return Formula(node_->rhs); }

  /// Syntactic size with constants measured in binary; variables count 1.
  std::size_t size() const { return node_->size; }
  std::size_t modal_depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }

  /// Identity of the shared node; stable while the formula is alive.
  const void* id() const { return node_.get(); }

  std::string str() const {
    std::string out;
    print(out, 0);
    return out;
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.node_ == b.node_ || (a.node_->hash == b.node_->hash && compare(*a.node_, *b.node_) == 0);
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    int c = compare(*a.node_, *b.node_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << f.str(); }

 private:
  struct Node {
    FormulaKind kind = FormulaKind::Zero;
    std::string name;
    std::size_t index = 0;
    Rational constant;
    ModalOp op;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::size_t size = 1;
    std::size_t depth = 0;
    std::size_t hash = 0;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Node make_node(FormulaKind k) {
    Node n;
    n.kind = k;
    return n;
  }

  static Formula make(Node n) {
    std::size_t h = std::hash<int>{}(static_cast<int>(n.kind));
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    switch (n.kind) {
      case FormulaKind::Zero:
        n.size = 1;
        break;
      case FormulaKind::Atom:
        n.size = 1;
        mix(std::hash<std::string>{}(n.name));
        break;
      case FormulaKind::Var:
        n.size = 1;
        mix(n.index);
        break;
      case FormulaKind::Neg:
        n.size = n.lhs->size + 1;
        n.depth = n.lhs->depth;
        mix(n.lhs->hash);
        break;
      case FormulaKind::Minus:
        n.size = n.lhs->size + binary_size(n.constant) + 1;
        n.depth = n.lhs->depth;
        mix(n.lhs->hash);
        mix(n.constant.hash());
        break;
      case FormulaKind::And:
        n.size = n.lhs->size + n.rhs->size + 1;
        n.depth = std::max(n.lhs->depth, n.rhs->depth);
        mix(n.lhs->hash);
        mix(n.rhs->hash);
        break;
      case FormulaKind::Modal:
        n.size = n.lhs->size + n.op.size();
        n.depth = n.lhs->depth + 1;
        mix(static_cast<std::size_t>(n.op.kind));
        mix(n.op.param.hash());
        mix(std::hash<std::string>{}(n.op.label));
        mix(n.lhs->hash);
        break;
    }
    n.hash = h;
    return Formula(std::make_shared<const Node>(std::move(n)));
  }

  static int compare(const Node& a, const Node& b) {
    if (&a == &b) return 0;
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    switch (a.kind) {
      case FormulaKind::Zero:
        return 0;
      case FormulaKind::Atom:
        return a.name.compare(b.name) < 0 ? -1 : (a.name == b.name ? 0 : 1);
      case FormulaKind::Var:
        return a.index < b.index ? -1 : (a.index == b.index ? 0 : 1);
      case FormulaKind::Neg:
        return compare(*a.lhs, *b.lhs);
      case FormulaKind::Minus:
        if (a.constant != b.constant) return a.constant < b.constant ? -1 : 1;
        return compare(*a.lhs, *b.lhs);
      case FormulaKind::And:
        if (int c = compare(*a.lhs, *b.lhs); c != 0) return c;
        return compare(*a.rhs, *b.rhs);
      case FormulaKind::Modal: {
        auto c = a.op <=> b.op;
        if (c != 0) return c < 0 ? -1 : 1;
        return compare(*a.lhs, *b.lhs);
      }
    }
    return 0;
  }

  // Precedence levels: 0 disjunction, 1 conjunction, 2 prefix unary, 3 postfix shift.
  void print(std::string& out, int context) const {
    auto wrap = [&](int level, auto&& body) {
      bool paren = level < context;
      if (paren) out += '(';
      body();
      if (paren) out += ')';
    };
    switch (kind()) {
      case FormulaKind::Zero:
        out += '0';
        return;
      case FormulaKind::Atom:
        out += name();
        return;
      case FormulaKind::Var:
        out += "$v" + std::to_string(var_index() + 1);
        return;
      case FormulaKind::Neg:
        if (Formula inner = arg(); inner.kind() == FormulaKind::And && inner.left().kind() == FormulaKind::Neg &&
                                   inner.right().kind() == FormulaKind::Neg) {
          wrap(0, [&] {
            inner.left().arg().print(out, 0);
            out += " | ";
            inner.right().arg().print(out, 1);
          });
          return;
        }
        wrap(2, [&] {
          out += '~';
          arg().print(out, 2);
        });
        return;
      case FormulaKind::Minus:
        wrap(3, [&] {
          arg().print(out, 3);
          out += " - " + constant().str();
        });
        return;
      case FormulaKind::And:
        wrap(1, [&] {
          left().print(out, 1);
          out += " & ";
          right().print(out, 2);
        });
        return;
      case FormulaKind::Modal:
        wrap(2, [&] {
          out += op().str() + ' ';
          arg().print(out, 2);
        });
        return;
    }
  }

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

namespace detail {
inline void collect_subformulas(const Formula& f, std::set<Formula>& out, bool stop_at_modal) {
  if (!out.insert(f).second) return;
  switch (f.kind()) {
    case FormulaKind::Neg:
    case FormulaKind::Minus:
      collect_subformulas(f.arg(), out, stop_at_modal);
      break;
    case FormulaKind::And:
      collect_subformulas(f.left(), out, stop_at_modal);
      collect_subformulas(f.right(), out, stop_at_modal);
      break;
    case FormulaKind::Modal:
      if (!stop_at_modal) collect_subformulas(f.arg(), out, stop_at_modal);
      break;
    default:
      break;
  }
}
}  // namespace detail

/// All subformulas, including f itself.
inline std::set<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  detail::collect_subformulas(f, out, false);
  return out;
}

/// Subformulas not in scope of a modal operator; modal subformulas are kept but not entered.
inline std::set<Formula> prop_subformulas(const Formula& f) {
  std::set<Formula> out;
  detail::collect_subformulas(f, out, true);
  return out;
}

inline std::size_t size(const Formula& f) { return f.size(); }
inline std::size_t modal_depth(const Formula& f) { return f.modal_depth(); }

/// Atom names occurring anywhere in f.
inline std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> names;
  for (const Formula& g : subformulas(f)) {
    if (g.is_atom()) names.insert(g.name());
  }
  return names;
}

}  // namespace nexfuz

#endif  // NEXFUZ_FORMULA_HPP
