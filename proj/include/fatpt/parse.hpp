#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "fatpt/polynomial.hpp"

namespace fatpt {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::size_t ambient) : text_(text), ambient_(ambient) {}

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    skipSpace();
    if (atEnd()) throw ParseError("empty polynomial", pos_);
    bool firstTerm = true;
    while (!atEnd()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skipSpace();
      } else if (!firstTerm) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      firstTerm = false;
      terms.push_back(term(negative));
      skipSpace();
    }
    return Polynomial::fromTerms(ambient_, std::move(terms));
  }

 private:
  Polynomial::Term term(bool negative) {
    Rational coeff = 1;
    bool sawFactor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = integer();
      Integer den = 1;
      skipSpace();
      if (peek() == '/') {
        ++pos_;
        skipSpace();
        std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coeff = makeRational(num, den);
      sawFactor = true;
      skipSpace();
      if (peek() == '*') {
        ++pos_;
        skipSpace();
        if (peek() != 'X') throw ParseError("expected variable after '*'", pos_);
      }
    }
    Monomial m(ambient_);
    while (peek() == 'X') {
      std::size_t at = pos_++;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected variable index", pos_);
      Integer idx = integer();
      if (idx >= static_cast<unsigned long>(ambient_)) throw ParseError("variable index out of range", at);
      unsigned e = 1;
      skipSpace();
      if (peek() == '^') {
        ++pos_;
        skipSpace();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
        Integer ex = integer();
        if (ex > 60000) throw ParseError("exponent too large", pos_);
        e = static_cast<unsigned>(ex.get_ui());
      }
      std::size_t i = idx.get_ui();
      m.set(i, m[i] + e);
      sawFactor = true;
      skipSpace();
      if (peek() == '*') {
        ++pos_;
        skipSpace();
        if (peek() != 'X') throw ParseError("expected variable after '*'", pos_);
      }
    }
    if (!sawFactor) throw ParseError("expected coefficient or variable", pos_);
    if (negative) coeff = -coeff;
    return {m, coeff};
  }

  Integer integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skipSpace() {
    while (!atEnd() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return atEnd() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t ambient_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Reads the textual grammar `[sign][coeff][*](X<i>[^e][*])*` term by term.
/// Whitespace is ignored; coefficients are integers or `p/q`.
inline Polynomial parsePolynomial(std::string_view text, std::size_t ambient) {
  return detail::PolynomialParser(text, ambient).parse();
}

}  // namespace fatpt
