#pragma once

// Multivariate polynomials over cyclotomic coefficients, division and
// Buchberger's algorithm. Rings are tiny (two variables in practice), so
// monomials are dense exponent vectors and polynomials are sorted term lists.

#include <optional>
#include <string>
#include <vector>

#include "mckay/cyclotomic.hpp"

namespace mckay {

enum class MonomialOrder { Lex, GradedLex };

struct Monomial {
  std::vector<int> exponents;

  static Monomial one(int nvars) { return Monomial{std::vector<int>(static_cast<std::size_t>(nvars), 0)}; }
  static Monomial variable(int nvars, int index, int power = 1);

  int nvars() const { return static_cast<int>(exponents.size()); }
  int degree() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);

/// Strict comparison a < b in the given order; variable 0 is the largest.
bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order);

struct Term {
  Monomial monomial;
  CyclotomicNumber coeff;
};

class Polynomial {
 public:
  Polynomial(int nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}
  static Polynomial constant(int nvars, MonomialOrder order, const CyclotomicNumber& c);
  static Polynomial monomial(const Monomial& m, const CyclotomicNumber& c, MonomialOrder order);

  int nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  /// Terms in strictly decreasing monomial order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Leading term; requires a nonzero polynomial.
  const Term& leading() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  /// Multiplication by c * m.
  Polynomial scaled(const CyclotomicNumber& c, const Monomial& m) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  int nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;

  void add_term(const Monomial& m, const CyclotomicNumber& c);
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum q_i g_i + r with no term of r divisible by
/// any leading monomial of the basis.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& basis);

/// Reduced Groebner basis, monic and sorted by increasing leading monomial.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens);

struct IdealBasis {
  std::vector<Polynomial> generators;
  std::optional<std::vector<Polynomial>> groebner;

  /// Computes and caches the reduced Groebner basis.
  const std::vector<Polynomial>& groebner_basis();
  /// True iff f reduces to zero modulo the ideal.
  bool contains(const Polynomial& f);
};

struct QuotientBasis {
  bool infinite = false;
  std::vector<Monomial> monomials;  // standard monomials, increasing order; empty if infinite

  std::size_t dimension() const { return monomials.size(); }
};

/// Standard monomials of a Groebner basis.
QuotientBasis quotient_basis(const std::vector<Polynomial>& gb);

/// Renders with the given variable names; coefficients use the cyclotomic grammar.
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);
std::string to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace mckay
