#include "dynzsig/parse.hpp"

#include <cctype>

namespace dynzsig {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedPoly parse_top() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    ParsedPoly out;
    FactoredForm factors;
    const bool negated = accept('-');
    Polynomial acc = term(&factors);
    bool single_term = true;
    if (negated) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + term(nullptr);
      } else if (accept('-')) {
        acc = acc - term(nullptr);
      } else {
        break;
      }
      single_term = false;
    }
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    out.poly = acc;
    if (single_term && !negated) out.factored = std::move(factors);
    return out;
  }

  Rational literal_only() {
    skip_ws();
    const Rational r = number();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    const bool negated = accept('-');
    Polynomial acc = term(nullptr);
    if (negated) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + term(nullptr);
      } else if (accept('-')) {
        acc = acc - term(nullptr);
      } else {
        return acc;
      }
    }
  }

  Polynomial term(FactoredForm* factors) {
    Polynomial acc = factor(factors);
    while (accept('*')) acc = acc * factor(factors);
    return acc;
  }

  Polynomial factor(FactoredForm* factors) {
    const Polynomial base = atom();
    unsigned e = 1;
    if (accept('^')) e = exponent();
    if (factors != nullptr) factors->emplace_back(base, e);
    return e == 1 ? base : base.pow(e);
  }

  unsigned exponent() {
    skip_ws();
    const std::size_t at = pos_;
    if (at >= text_.size()) throw ParseError("missing exponent", at);
    const char c = text_[at];
    if (c == '-') throw ExponentError("negative exponent", at);
    if (c == 'z' || c == '(') throw ExponentError("exponent must be a literal", at);
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected exponent", at);
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > kMaxExponent) throw ExponentError("exponent exceeds " + std::to_string(kMaxExponent), at);
      ++pos_;
    }
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') throw ExponentError("exponent must be a natural number", at);
    return static_cast<unsigned>(value);
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == 'z') {
      ++pos_;
      return Polynomial::z();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(number());
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return parse_bigint(text_.substr(start, pos_ - start));
  }

  Rational number() {
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const BigInt num = digits();
    BigInt den = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      den = digits();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    return Rational(negative ? BigInt(-num) : num, den);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedPoly parse_poly(std::string_view text) { return Parser(text).parse_top(); }

Rational parse_rational_literal(std::string_view text) { return Parser(text).literal_only(); }

}  // namespace dynzsig
