#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// An element is stored at a conductor m as its coordinate vector in the power
// basis {1, zeta_m, ..., zeta_m^(phi(m)-1)} after reduction modulo the m-th
// cyclotomic polynomial. Binary operations lift both operands to the lcm of
// their conductors; no automatic conductor minimization happens.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mckay {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over Q, coefficients from degree 0 upward.
struct QPolynomial {
  std::vector<Rational> coeffs;

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return degree() < 0; }
  void trim();

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b);

  /// Quotient and remainder by a nonzero divisor.
  static std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& f, const QPolynomial& g);
};

/// Phi_m, monic of degree phi(m).
QPolynomial cyclotomic_polynomial(int m);

class CyclotomicNumber {
 public:
  /// Zero at conductor 1.
  CyclotomicNumber();
  CyclotomicNumber(const Rational& q);  // NOLINT: rationals are conductor-1 elements
  CyclotomicNumber(long n);             // NOLINT
  CyclotomicNumber(int n) : CyclotomicNumber(static_cast<long>(n)) {}  // NOLINT

  /// Element at conductor m with the given power-basis coordinates.
  CyclotomicNumber(int m, std::vector<Rational> coeffs);

  /// zeta_m^k for any integer k.
  static CyclotomicNumber zeta(int m, std::int64_t k = 1);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error if the element is not rational.
  Rational to_rational() const;

  /// Same element at conductor L, a multiple of conductor().
  CyclotomicNumber lift(int L) const;

  /// The automorphism zeta_m -> zeta_m^k. k must be coprime to the conductor.
  CyclotomicNumber galois(std::int64_t k) const;
  /// Complex conjugation, galois(-1).
  CyclotomicNumber conj() const { return galois(-1); }

  /// Throws std::domain_error on zero.
  CyclotomicNumber inverse() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& b);
  CyclotomicNumber& operator-=(const CyclotomicNumber& b);
  CyclotomicNumber& operator*=(const CyclotomicNumber& b);
  CyclotomicNumber& operator/=(const CyclotomicNumber& b);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) {
    return a += b;
  }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) {
    return a -= b;
  }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) {
    return a *= b;
  }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) {
    return a /= b;
  }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// Integer power; negative exponents invert.
  CyclotomicNumber pow(std::int64_t e) const;

  /// Total order on normal forms at a common conductor; used for
  /// deterministic containers, carries no field meaning.
  friend bool canonical_less(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// Smallest conductor d | m at which a can be written, and a rewritten there.
CyclotomicNumber minimize_conductor(const CyclotomicNumber& a);

/// True iff every automorphism in the subgroup of (Z/modulus)^* generated by
/// `generators` fixes a. The subgroup is pulled back to the lcm of modulus and
/// the conductor of a.
bool is_in_fixed_field(const CyclotomicNumber& a, int modulus, std::span<const int> generators);

/// Reduce a polynomial in zeta_m (arbitrary length, exponents taken mod m)
/// to the power-basis normal form at conductor m.
std::vector<Rational> reduce_cyclotomic(std::vector<Rational> poly, int m);

}  // namespace mckay
