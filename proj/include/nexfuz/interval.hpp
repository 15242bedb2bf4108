#ifndef NEXFUZ_INTERVAL_HPP
#define NEXFUZ_INTERVAL_HPP

#include "nexfuz/rational.hpp"

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace nexfuz {

enum class CompOp { Lt, Le, Gt, Ge };

/// Flips the direction, keeping strictness: > to <, >= to <=, and back.
constexpr CompOp comp_dual(CompOp op) {
  switch (op) {
    case CompOp::Gt: return CompOp::Lt;
    case CompOp::Ge: return CompOp::Le;
    case CompOp::Lt: return CompOp::Gt;
    case CompOp::Le: return CompOp::Ge;
  }
  return op;
}

/// Swaps strictness, keeping direction: > to >=, >= to >, < to <=, <= to <.
/// comp_dual(comp_negate(op)) is the logical negation of op.
constexpr CompOp comp_negate(CompOp op) {
  switch (op) {
    case CompOp::Gt: return CompOp::Ge;
    case CompOp::Ge: return CompOp::Gt;
    case CompOp::Lt: return CompOp::Le;
    case CompOp::Le: return CompOp::Lt;
  }
  return op;
}

constexpr CompOp comp_complement(CompOp op) { return comp_dual(comp_negate(op)); }

constexpr bool is_strict(CompOp op) { return op == CompOp::Lt || op == CompOp::Gt; }

inline bool compare(const Rational& x, CompOp op, const Rational& y) {
  switch (op) {
    case CompOp::Lt: return x < y;
    case CompOp::Le: return x <= y;
    case CompOp::Gt: return x > y;
    case CompOp::Ge: return x >= y;
  }
  return false;
}

constexpr std::string_view to_string(CompOp op) {
  switch (op) {
    case CompOp::Lt: return "<";
    case CompOp::Le: return "<=";
    case CompOp::Gt: return ">";
    case CompOp::Ge: return ">=";
  }
  return "?";
}

/// Sub-interval of [0,1] with independently open or closed endpoints.
///
/// Construction canonicalizes: bounds are clipped to [0,1] and every
/// degenerate description (lo > hi, or lo == hi with an open side) becomes
/// the single Empty value, so two intervals denote the same set iff they
/// compare equal.
class Interval {
 public:
  /// The unit interval [0,1].
  Interval() : lo_(0), hi_(1) {}

  Interval(Rational lo, bool lo_open, Rational hi, bool hi_open)
      : lo_(std::move(lo)), hi_(std::move(hi)), lo_open_(lo_open), hi_open_(hi_open) {
    canonicalize();
  }

  static Interval empty() {
    Interval i;
    i.set_empty();
    return i;
  }
  static Interval unit() { return Interval(); }
  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), false, std::move(hi), false}; }
  static Interval point(const Rational& q) { return {q, false, q, false}; }
  /// [lo,1] or (lo,1].
  static Interval at_least(Rational lo, bool open = false) { return {std::move(lo), open, Rational(1), false}; }
  /// [0,hi] or [0,hi).
  static Interval at_most(Rational hi, bool open = false) { return {Rational(0), false, std::move(hi), open}; }

  /// The set {x in [0,1] | x op bound}.
  static Interval from_comparison(CompOp op, const Rational& bound) {
    switch (op) {
      case CompOp::Lt: return at_most(bound, true);
      case CompOp::Le: return at_most(bound, false);
      case CompOp::Gt: return at_least(bound, true);
      case CompOp::Ge: return at_least(bound, false);
    }
    return empty();
  }

  /// Parses "[a,b]", "(a,b]", "[a,b)", "(a,b)" or "empty".
  static Interval parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
      if (ch != ' ' && ch != '\t') s.push_back(ch);
    }
    if (s == "empty" || s == "{}") return empty();
    if (s.size() < 5 || (s.front() != '[' && s.front() != '(') || (s.back() != ']' && s.back() != ')')) {
      throw ParseError("malformed interval '" + std::string(text) + "'");
    }
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("malformed interval '" + std::string(text) + "'");
    Rational lo = Rational::parse(std::string_view(s).substr(1, comma - 1));
    Rational hi = Rational::parse(std::string_view(s).substr(comma + 1, s.size() - comma - 2));
    if (lo.sign() < 0 || hi > Rational(1)) {
      throw ParseError("interval '" + std::string(text) + "' leaves [0,1]");
    }
    return {lo, s.front() == '(', hi, s.back() == ')'};
  }

  bool is_empty() const { return empty_; }
  bool is_point() const { return !empty_ && lo_ == hi_; }
  bool is_unit() const { return !empty_ && lo_.is_zero() && !lo_open_ && hi_ == Rational(1) && !hi_open_; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }

  /// Comparison implementing the lower endpoint: x in I implies x lower_op() lo().
  CompOp lower_op() const { return lo_open_ ? CompOp::Gt : CompOp::Ge; }
  CompOp upper_op() const { return hi_open_ ? CompOp::Lt : CompOp::Le; }

  /// True iff the lower bound holds for every value in [0,1] (lower end is a closed 0).
  bool lower_vacuous() const { return !empty_ && lo_.is_zero() && !lo_open_; }
  bool upper_vacuous() const { return !empty_ && hi_ == Rational(1) && !hi_open_; }

  /// ⟨lo,1] keeping the lower parenthesis.
  Interval lower_half() const { return empty_ ? empty() : at_least(lo_, lo_open_); }
  /// [0,hi⟩ keeping the upper parenthesis.
  Interval upper_half() const { return empty_ ? empty() : at_most(hi_, hi_open_); }

  bool contains(const Rational& x) const {
    if (empty_) return false;
    bool above = lo_open_ ? x > lo_ : x >= lo_;
    bool below = hi_open_ ? x < hi_ : x <= hi_;
    return above && below;
  }

  bool subset_of(const Interval& other) const {
    if (empty_) return true;
    if (other.empty_) return false;
    return intersect(other) == *this;
  }

  Interval intersect(const Interval& other) const {
    if (empty_ || other.empty_) return empty();
    Rational lo = lo_;
    bool lo_open = lo_open_;
    if (other.lo_ > lo || (other.lo_ == lo && other.lo_open_)) {
      lo = other.lo_;
      lo_open = other.lo_open_ || (other.lo_ == lo_ && lo_open_);
    }
    Rational hi = hi_;
    bool hi_open = hi_open_;
    if (other.hi_ < hi || (other.hi_ == hi && other.hi_open_)) {
      hi = other.hi_;
      hi_open = other.hi_open_ || (other.hi_ == hi_ && hi_open_);
    }
    return {std::move(lo), lo_open, std::move(hi), hi_open};
  }

  /// {1 - x | x in I}.
  Interval complement() const {
    if (empty_) return empty();
    return {Rational(1) - hi_, hi_open_, Rational(1) - lo_, lo_open_};
  }

  /// {x + c | x in I, x + c <= 1}.
  Interval shift_trunc(const Rational& c) const {
    if (empty_) return empty();
    return {lo_ + c, lo_open_, hi_ + c, hi_open_};
  }

  /// A canonical member: the point itself, or the midpoint of the endpoints.
  std::optional<Rational> pick() const {
    if (empty_) return std::nullopt;
    if (lo_ == hi_) return lo_;
    return (lo_ + hi_) / Rational(2);
  }

  std::string str() const {
    if (empty_) return "empty";
    return std::string(lo_open_ ? "(" : "[") + lo_.str() + "," + hi_.str() + (hi_open_ ? ")" : "]");
  }

  /// Literal size contribution of the endpoints: len(a1)+len(b1)+len(a2)+len(b2).
  std::size_t endpoint_size() const {
    if (empty_) return 0;
    return binary_size(lo_) + binary_size(hi_);
  }

  friend bool operator==(const Interval& a, const Interval& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_open_ == b.lo_open_ && a.hi_open_ == b.hi_open_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << i.str(); }

 private:
  void set_empty() {
    empty_ = true;
    lo_ = Rational(1);
    hi_ = Rational(0);
    lo_open_ = hi_open_ = true;
  }

  void canonicalize() {
    if (lo_.sign() < 0) {
      lo_ = Rational(0);
      lo_open_ = false;
    }
    if (hi_ > Rational(1)) {
      hi_ = Rational(1);
      hi_open_ = false;
    }
    if (lo_ > hi_ || (lo_ == hi_ && (lo_open_ || hi_open_))) set_empty();
  }

  Rational lo_;
  Rational hi_;
  bool lo_open_ = false;
  bool hi_open_ = false;
  bool empty_ = false;
};

}  // namespace nexfuz

#endif  // NEXFUZ_INTERVAL_HPP
