#ifndef NEXFUZ_RATIONAL_HPP
#define NEXFUZ_RATIONAL_HPP

#include "nexfuz/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nexfuz {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = boost::multiprecision::cpp_rational(num, den);
  }

  /// Accepts "a/b", "-a/b", integers and finite decimals ("0.25" is 1/4).
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    if (text.empty()) throw ParseError("empty rational");
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
      negative = text.front() == '-';
      text.remove_prefix(1);
    }
    auto digits = [&](std::string_view s) {
      if (s.empty()) throw ParseError("malformed rational '" + std::string(text) + "'");
      BigInt r = 0;
      for (char ch : s) {
        if (ch < '0' || ch > '9') throw ParseError("malformed rational '" + std::string(text) + "'");
        r = r * 10 + (ch - '0');
      }
      return r;
    };
    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      BigInt num = digits(trim(text.substr(0, slash)));
      BigInt den = digits(trim(text.substr(slash + 1)));
      if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
      result = Rational(num, den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view whole = text.substr(0, dot);
      std::string_view frac = text.substr(dot + 1);
      BigInt num = whole.empty() ? BigInt(0) : digits(whole);
      BigInt den = 1;
      if (!frac.empty()) {
        num = num * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size())) + digits(frac);
        den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
      } else if (whole.empty()) {
        throw ParseError("malformed rational '.'");
      }
      result = Rational(num, den);
    } else {
      result = Rational(digits(text), BigInt(1));
    }
    return negative ? -result : result;
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_.sign(); }

  std::string str() const {
    BigInt den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
  }

  /// Approximate value for diagnostics only; never used by the algorithms.
  double approx() const { return value_.convert_to<double>(); }

  Rational operator-() const { return Rational(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.value_ == 0) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

  std::size_t hash() const {
    return std::hash<std::string>{}(str());
  }

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
  boost::multiprecision::cpp_rational value_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Truncated subtraction max(0, a - b).
inline Rational monus(const Rational& a, const Rational& b) {
  Rational d = a - b;
  return d.sign() < 0 ? Rational(0) : d;
}

/// Number of binary digits of k, counting zero as one digit.
inline std::size_t binary_length(const BigInt& k) {
  BigInt m = k < 0 ? BigInt(-k) : k;
  if (m == 0) return 1;
  return static_cast<std::size_t>(boost::multiprecision::msb(m)) + 1;
}

/// Binary size of a rational a/b as used by the size measures: len(a) + len(b).
inline std::size_t binary_size(const Rational& q) {
  return binary_length(q.numerator()) + binary_length(q.denominator());
}

}  // namespace nexfuz

#endif  // NEXFUZ_RATIONAL_HPP
