#include "mckay/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "mckay/modular.hpp"

namespace mckay {

int QPolynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[i] != 0) return i;
  return -1;
}

void QPolynomial::trim() { coeffs.resize(static_cast<std::size_t>(degree() + 1)); }

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  QPolynomial r;
  r.coeffs.assign(static_cast<std::size_t>(a.degree() + b.degree() + 1), Rational(0));
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  r.trim();
  return r;
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial r = a;
  if (r.coeffs.size() < b.coeffs.size()) r.coeffs.resize(b.coeffs.size(), Rational(0));
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  r.trim();
  return r;
}

bool operator==(const QPolynomial& a, const QPolynomial& b) {
  int d = a.degree();
  if (d != b.degree()) return false;
  for (int i = 0; i <= d; ++i)
    if (a.coeffs[i] != b.coeffs[i]) return false;
  return true;
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& f,
                                                        const QPolynomial& g) {
  int dg = g.degree();
  if (dg < 0) throw std::domain_error("polynomial division by zero");
  QPolynomial r = f;
  r.trim();
  QPolynomial q;
  int dr = r.degree();
  if (dr >= dg) q.coeffs.assign(static_cast<std::size_t>(dr - dg + 1), Rational(0));
  while ((dr = r.degree()) >= dg) {
    Rational c = r.coeffs[dr] / g.coeffs[dg];
    q.coeffs[dr - dg] = c;
    for (int i = 0; i <= dg; ++i) r.coeffs[dr - dg + i] -= c * g.coeffs[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

namespace {

// Phi_m has small integer coefficients in the range we use; cache them as
// immutable vectors keyed by m. The cache never hands out mutable state.
std::shared_ptr<const std::vector<long>> phi_coeffs(int m) {
  static std::mutex lock;
  static std::map<int, std::shared_ptr<const std::vector<long>>> cache;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // x^m - 1 divided by Phi_d for every proper divisor d.
  QPolynomial f;
  f.coeffs.assign(static_cast<std::size_t>(m + 1), Rational(0));
  f.coeffs[0] = -1;
  f.coeffs[m] = 1;
  for (int d : divisors(m)) {
    if (d == m) continue;
    auto sub = phi_coeffs(d);
    QPolynomial g;
    for (long c : *sub) g.coeffs.emplace_back(c);
    f = QPolynomial::divmod(f, g).first;
  }
  auto out = std::make_shared<std::vector<long>>();
  for (const auto& c : f.coeffs) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
      throw std::overflow_error("cyclotomic polynomial coefficient out of range");
    out->push_back(c.get_num().get_si());
  }
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(m, std::move(out)).first->second;
}

}  // namespace

QPolynomial cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  QPolynomial p;
  for (long c : *phi_coeffs(m)) p.coeffs.emplace_back(c);
  return p;
}

std::vector<Rational> reduce_cyclotomic(std::vector<Rational> poly, int m) {
  const int phi = euler_phi(m);
  // First fold exponents modulo m using zeta^m = 1.
  if (static_cast<int>(poly.size()) > m) {
    for (std::size_t i = static_cast<std::size_t>(m); i < poly.size(); ++i)
      poly[i % static_cast<std::size_t>(m)] += poly[i];
    poly.resize(static_cast<std::size_t>(m));
  }
  auto phic = phi_coeffs(m);
  for (int k = static_cast<int>(poly.size()) - 1; k >= phi; --k) {
    if (poly[k] == 0) continue;
    Rational c = poly[k];
    for (int i = 0; i <= phi; ++i) {
      long pc = (*phic)[i];
      if (pc != 0) poly[k - phi + i] -= c * pc;
    }
  }
  poly.resize(static_cast<std::size_t>(phi), Rational(0));
  return poly;
}

CyclotomicNumber::CyclotomicNumber() : conductor_(1), coeffs_{Rational(0)} {}

CyclotomicNumber::CyclotomicNumber(const Rational& q) : conductor_(1), coeffs_{q} {
  coeffs_[0].canonicalize();
}

CyclotomicNumber::CyclotomicNumber(long n) : conductor_(1), coeffs_{Rational(n)} {}

CyclotomicNumber::CyclotomicNumber(int m, std::vector<Rational> coeffs) : conductor_(m) {
  if (m < 1) throw std::invalid_argument("conductor must be positive");
  for (auto& c : coeffs) c.canonicalize();
  coeffs_ = reduce_cyclotomic(std::move(coeffs), m);
}

CyclotomicNumber CyclotomicNumber::zeta(int m, std::int64_t k) {
  if (m < 1) throw std::invalid_argument("conductor must be positive");
  std::vector<Rational> c(static_cast<std::size_t>(m), Rational(0));
  c[static_cast<std::size_t>(mod(k, m))] = 1;
  return CyclotomicNumber(m, std::move(c));
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::lift(int L) const {
  if (L == conductor_) return *this;
  if (L % conductor_ != 0) throw std::invalid_argument("lift: conductor must divide target");
  const std::size_t step = static_cast<std::size_t>(L / conductor_);
  std::vector<Rational> c(static_cast<std::size_t>(L), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j * step] = coeffs_[j];
  CyclotomicNumber r;
  r.conductor_ = L;
  r.coeffs_ = reduce_cyclotomic(std::move(c), L);
  return r;
}

CyclotomicNumber CyclotomicNumber::galois(std::int64_t k) const {
  const int m = conductor_;
  if (std::gcd(mod(k, m), m) != 1 && m != 1)
    throw std::invalid_argument("galois: exponent " + std::to_string(k) +
                                " is not coprime to conductor " + std::to_string(m));
  if (m <= 2) return *this;
  std::vector<Rational> c(static_cast<std::size_t>(m), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) c[mod(static_cast<std::int64_t>(j) * k, m)] += coeffs_[j];
  CyclotomicNumber r;
  r.conductor_ = m;
  r.coeffs_ = reduce_cyclotomic(std::move(c), m);
  return r;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

void align(CyclotomicNumber& a, CyclotomicNumber& b) {
  if (a.conductor() == b.conductor()) return;
  int L = std::lcm(a.conductor(), b.conductor());
  a = a.lift(L);
  b = b.lift(L);
}

}  // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& b) {
  CyclotomicNumber bb = b;
  align(*this, bb);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += bb.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& b) {
  CyclotomicNumber bb = b;
  align(*this, bb);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= bb.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& b) {
  if (b.conductor_ == 1 && conductor_ == 1) {
    coeffs_[0] *= b.coeffs_[0];
    return *this;
  }
  if (b.conductor_ == 1) {
    for (auto& c : coeffs_) c *= b.coeffs_[0];
    return *this;
  }
  CyclotomicNumber bb = b;
  align(*this, bb);
  const std::size_t n = coeffs_.size();
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (bb.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * bb.coeffs_[j];
  }
  coeffs_ = reduce_cyclotomic(std::move(prod), conductor_);
  return *this;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (conductor_ == 1) return CyclotomicNumber(Rational(1) / coeffs_[0]);
  // Extended Euclid: find u with u*a = 1 mod Phi_m.
  QPolynomial r0 = cyclotomic_polynomial(conductor_);
  QPolynomial r1{coeffs_};
  r1.trim();
  QPolynomial s0{{Rational(0)}};
  QPolynomial s1{{Rational(1)}};
  while (r1.degree() > 0) {
    auto [q, r] = QPolynomial::divmod(r0, r1);
    QPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi_m is irreducible and a != 0.
  Rational c = r1.coeffs.at(0);
  for (auto& x : s1.coeffs) x /= c;
  return CyclotomicNumber(conductor_, s1.coeffs);
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& b) {
  return *this *= b.inverse();
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  CyclotomicNumber aa = a;
  CyclotomicNumber bb = b;
  align(aa, bb);
  return aa.coeffs_ == bb.coeffs_;
}

bool canonical_less(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  CyclotomicNumber aa = a;
  CyclotomicNumber bb = b;
  align(aa, bb);
  return aa.coeffs_ < bb.coeffs_;
}

CyclotomicNumber CyclotomicNumber::pow(std::int64_t e) const {
  CyclotomicNumber base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  CyclotomicNumber result(1L);
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

namespace {

// Solve the lift equations for a at conductor d: returns coordinates at d.
std::vector<Rational> descend(const CyclotomicNumber& a, int d) {
  const int m = a.conductor();
  const int phid = euler_phi(d);
  const int phim = euler_phi(m);
  // Columns: images of zeta_d^j at conductor m. Augmented Gaussian elimination.
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(phim),
                                          std::vector<Rational>(phid + 1, Rational(0)));
  for (int j = 0; j < phid; ++j) {
    auto col = CyclotomicNumber::zeta(d, j).lift(m).coeffs();
    for (int i = 0; i < phim; ++i) rows[i][j] = col[i];
  }
  for (int i = 0; i < phim; ++i) rows[i][phid] = a.coeffs()[i];
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < phid && r < phim; ++c) {
    int p = r;
    while (p < phim && rows[p][c] == 0) ++p;
    if (p == phim) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (int i = 0; i < phim; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (int k = 0; k <= phid; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<Rational> out(static_cast<std::size_t>(phid), Rational(0));
  for (int i = 0; i < r; ++i) out[pivot_col[i]] = rows[i][phid];
  return out;
}

}  // namespace

CyclotomicNumber minimize_conductor(const CyclotomicNumber& a) {
  const int m = a.conductor();
  if (a.is_rational()) return CyclotomicNumber(a.coeffs()[0]);
  for (int d : divisors(m)) {
    if (d == m) break;
    // a lies in Q(zeta_d) iff it is fixed by every k = 1 mod d.
    bool fixed = true;
    for (int k : units_mod(m)) {
      if (mod(k, d) != mod(1, d)) continue;
      if (!(a.galois(k) == a)) {
        fixed = false;
        break;
      }
    }
    if (!fixed) continue;
    CyclotomicNumber cand(d, descend(a, d));
    if (cand == a) return cand;
  }
  return a;
}

bool is_in_fixed_field(const CyclotomicNumber& a, int modulus, std::span<const int> generators) {
  const int L = std::lcm(modulus, a.conductor());
  auto sub = subgroup_closure(modulus, generators);
  auto lifted = lift_subgroup(modulus, sub, L);
  CyclotomicNumber al = a.lift(L);
  for (int k : generating_set(L, lifted))
    if (!(al.galois(k) == al)) return false;
  return true;
}

}  // namespace mckay
