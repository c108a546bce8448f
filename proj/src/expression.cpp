#include "mckay/expression.hpp"

#include <cctype>
#include <limits>

namespace mckay {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  CyclotomicNumber parse() {
    CyclotomicNumber v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  long small_integer() {
    std::size_t at = pos_;
    Integer v = integer();
    if (!v.fits_slong_p() || v > std::numeric_limits<int>::max())
      throw ParseError("integer too large", at);
    return v.get_si();
  }

  CyclotomicNumber expr() {
    CyclotomicNumber v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  CyclotomicNumber term() {
    CyclotomicNumber v = unary();
    while (accept('*')) v *= unary();
    return v;
  }

  CyclotomicNumber unary() {
    if (accept('-')) return -unary();
    return power();
  }

  CyclotomicNumber power() {
    CyclotomicNumber base = primary();
    if (!accept('^')) return base;
    bool neg = accept('-');
    std::size_t at = pos_;
    long e = small_integer();
    if (neg && base.is_zero()) throw ParseError("negative power of zero", at);
    return base.pow(neg ? -e : e);
  }

  CyclotomicNumber primary() {
    skip_ws();
    if (accept('(')) {
      CyclotomicNumber v = expr();
      expect(')');
      return v;
    }
    if (accept('z')) {
      expect('(');
      std::size_t at = pos_;
      long m = small_integer();
      if (m < 1) throw ParseError("conductor must be positive", at);
      expect(')');
      return CyclotomicNumber::zeta(static_cast<int>(m), 1);
    }
    Integer num = integer();
    if (accept('/')) {
      std::size_t at = pos_;
      Integer den = integer();
      if (den == 0) throw ParseError("zero denominator", at);
      Rational q(num, den);
      q.canonicalize();
      return CyclotomicNumber(q);
    }
    return CyclotomicNumber(Rational(num));
  }
};

std::string rational_string(const Rational& q) { return q.get_str(); }

}  // namespace

CyclotomicNumber parse_cyclotomic(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const CyclotomicNumber& a) {
  const int m = a.conductor();
  std::string out;
  bool first = true;
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    Rational c = a.coeffs()[j];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (j == 0) {
      out += rational_string(mag);
      continue;
    }
    if (mag != 1) out += rational_string(mag) + "*";
    out += "z(" + std::to_string(m) + ")";
    if (j > 1) out += "^" + std::to_string(j);
  }
  return first ? "0" : out;
}

std::string to_display_string(const CyclotomicNumber& a) { return to_string(minimize_conductor(a)); }

}  // namespace mckay
