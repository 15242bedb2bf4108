#ifndef NEXFUZ_PARSER_HPP
#define NEXFUZ_PARSER_HPP

#include "nexfuz/formula.hpp"

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

namespace nexfuz {

/// Called for every modality the parser builds; throws to reject it.
using ModalityCheck = std::function<void(const ModalOp&)>;

namespace detail {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, ModalityCheck check) : text_(text), check_(std::move(check)) {}

  Formula parse_all() {
    Formula f = parse_disj();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("syntax error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  static bool ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
  static bool ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

  std::string peek_ident() {
    skip_ws();
    std::size_t end = pos_;
    if (end < text_.size() && ident_start(text_[end])) {
      while (end < text_.size() && ident_char(text_[end])) ++end;
    }
    return std::string(text_.substr(pos_, end - pos_));
  }

  std::string read_ident() {
    std::string id = peek_ident();
    if (id.empty()) fail("expected identifier");
    pos_ += id.size();
    return id;
  }

  bool next_is(char ch) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  Rational read_rational() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (start == pos_) fail("expected rational constant");
    Rational q;
    try {
      q = Rational::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      fail(e.what());
    }
    if (q > Rational(1)) fail("constant " + q.str() + " outside [0,1]");
    return q;
  }

  Formula parse_disj() {
    Formula f = parse_conj();
    while (accept('|')) f = Formula::disj(f, parse_conj());
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_unary();
    while (accept('&')) f = Formula::conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept('~')) return Formula::neg(parse_unary());
    std::string id = peek_ident();
    if (id == "not") {
      pos_ += id.size();
      return Formula::neg(parse_unary());
    }
    if (id == "dia") {
      pos_ += id.size();
      ModalOp op = ModalOp::diamond();
      if (accept('{')) {
        std::string label = read_ident();
        expect(',');
        Rational c = read_rational();
        expect('}');
        op = ModalOp::metric_diamond(std::move(label), std::move(c));
      }
      return make_modal(std::move(op));
    }
    if (id == "G") {
      pos_ += id.size();
      return make_modal(ModalOp::generally());
    }
    if (id == "M") {
      pos_ += id.size();
      expect('{');
      Rational p = read_rational();
      expect('}');
      return make_modal(ModalOp::more_than(std::move(p)));
    }
    if (id == "probably" || id == "E") {
      fail("the expectation modality is not supported: its successor values are arithmetically entangled and "
           "admit no finite modal tableau rule");
    }
    return parse_postfix();
  }

  Formula make_modal(ModalOp op) {
    if (check_) {
      try {
        check_(op);
      } catch (const ParseError& e) {
        fail(e.what());
      }
    }
    return Formula::modal(std::move(op), parse_unary());
  }

  Formula parse_postfix() {
    Formula f = parse_primary();
    while (accept('-')) f = Formula::minus(f, read_rational());
    return f;
  }

  Formula parse_primary() {
    if (accept('(')) {
      Formula f = parse_disj();
      expect(')');
      return f;
    }
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) {
      char ch = text_[pos_++];
      if (pos_ < text_.size() && (ident_char(text_[pos_]) || text_[pos_] == '.' || text_[pos_] == '/')) {
        --pos_;
        fail("truth constants other than 0 and 1 need a shift, e.g. '~0 - 1/2'");
      }
      return ch == '0' ? Formula::zero() : Formula::neg(Formula::zero());
    }
    std::string id = peek_ident();
    if (id.empty()) {
      if (pos_ >= text_.size()) fail("unexpected end of input");
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    pos_ += id.size();
    return Formula::atom(std::move(id));
  }

  std::string_view text_;
  ModalityCheck check_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the concrete syntax:
///   disj := conj ('|' conj)*      conj := unary ('&' unary)*
///   unary := ('~' | 'not' | 'dia' | 'dia{l, c}' | 'G' | 'M{p}') unary | postfix
///   postfix := primary ('-' c)*   primary := '0' | '1' | atom | '(' disj ')'
/// The postfix shift binds tighter than the prefix operators, so
/// "dia a - 1/2" is dia (a - 1/2). '|' is sugar for ~(~x & ~y), '1' for ~0.
inline Formula parse_formula(std::string_view text, ModalityCheck check = {}) {
  return detail::FormulaParser(text, std::move(check)).parse_all();
}

}  // namespace nexfuz

#endif  // NEXFUZ_PARSER_HPP
