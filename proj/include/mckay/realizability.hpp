#pragma once

// Realizability of the finite subgroups of SL(2,C) inside SL(2,K): Hilbert
// symbols over Q, a semi-decision procedure for conics over abelian number
// fields, and explicit generator matrices.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mckay/galois.hpp"
#include "mckay/groups.hpp"

namespace mckay {

struct Matrix2 {
  CyclotomicNumber a = 1, b = 0, c = 0, d = 1;

  static Matrix2 identity() { return {}; }
  static Matrix2 scalar(const CyclotomicNumber& s) { return {s, 0, 0, s}; }

  CyclotomicNumber det() const { return a * d - b * c; }
  CyclotomicNumber trace() const { return a + d; }
  Matrix2 pow(long e) const;  // e >= 0

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Matrix2& x, const Matrix2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

/// [[a, b], [c, d]] with entries in display syntax.
std::string to_string(const Matrix2& m);

/// Local Hilbert symbol (a,b)_p for p prime, or p = 0 for the real place.
int hilbert_symbol_local(const Rational& a, const Rational& b, long p);

struct ConicPoint {
  CyclotomicNumber x, y, z;  // z^2 - a x^2 - b y^2 = 0, not all zero
};

struct HilbertResult {
  int value = 1;
  std::vector<std::pair<long, int>> local;  // (place, symbol), place 0 is the real place
  std::optional<ConicPoint> witness;         // rational point when value is 1 and the search finds one
};

/// (a,b)_Q by the product over 2, the real place and the odd primes dividing a or b.
/// A witness is searched with integer coordinates of absolute value at most bound.
HilbertResult hilbert_symbol_Q(const Rational& a, const Rational& b, int bound = 50);

/// Places where (a,b) can be -1: the real place, 2 and the odd primes dividing a or b.
std::vector<long> bad_places(const Rational& a, const Rational& b);

/// Square root in K, if a is a square there.
std::optional<CyclotomicNumber> sqrt_in_field(const CyclotomicNumber& a, const FieldSpec& k);

struct ConicResult {
  enum class Kind { Witness, RealObstruction, LocalObstruction, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<ConicPoint> point;
  int embedding = 0;  // for RealObstruction
  long place = 0;     // for LocalObstruction over Q
  std::string detail;
};

/// Nontrivial zero of z^2 - a x^2 - b y^2 over K: witness, a real embedding
/// under which the form is definite, a failing local symbol when K = Q, or
/// Unknown once the height bound or the search budget is exhausted.
ConicResult conic_solve_K(const CyclotomicNumber& a, const CyclotomicNumber& b, const FieldSpec& k, int height_bound);

bool on_conic(const ConicPoint& p, const CyclotomicNumber& a, const CyclotomicNumber& b);

struct Witness {
  std::vector<std::pair<std::string, Matrix2>> generators;
};

enum class Status { Realizable, NotRealizable, Unknown };

std::string to_string(Status s);

struct Verdict {
  Status status = Status::Unknown;
  std::string certificate;
  std::optional<Witness> witness;
};

/// c = (zeta + zeta^-1)/2 for a primitive root of unity of order 2n (BD_n),
/// n (cyclic) or 2k with k = 3, 4, 5 (BT, BO, BI).
CyclotomicNumber half_trace(const GroupId& g);

/// M_tau = [[x, y], [y - 2cx, -x]] and M_sigma = [[0, -1], [1, 2c]].
Witness bd_witness(int n, const CyclotomicNumber& x, const CyclotomicNumber& y);
/// M_a = [[x, y], [y + 2c(1 - x), 1 - x]] and M_b = [[0, -1], [1, 2c]].
Witness polyhedral_witness(const GroupId& g, const CyclotomicNumber& x, const CyclotomicNumber& y);

/// Presentation relations, entries in K, determinant one, and the order of
/// the generated group by closure enumeration.
Report verify_witness(const GroupId& g, const Witness& w, const FieldSpec& k);

Verdict realizable(const GroupId& g, const FieldSpec& k, int height_bound = 50);

/// Solutions of x^2 + y^2 = -1 and x'^2 + 2y'^2 = -1 correspond under these maps.
std::pair<CyclotomicNumber, CyclotomicNumber> bt_to_minus_two(const CyclotomicNumber& x, const CyclotomicNumber& y);
std::pair<CyclotomicNumber, CyclotomicNumber> bt_from_minus_two(const CyclotomicNumber& x, const CyclotomicNumber& y);

}  // namespace mckay
