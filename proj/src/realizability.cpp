#include "mckay/realizability.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mckay/expression.hpp"
#include "mckay/modular.hpp"

namespace mckay {

namespace {

using Z = CyclotomicNumber;

Matrix2 neg_identity() { return Matrix2::scalar(-1); }

// Representative of the square class of a nonzero rational: the integer num * den.
Integer square_class_integer(const Rational& q) { return q.get_num() * q.get_den(); }

// v_p(n) for n != 0; divides n in place.
int strip(Integer& n, long p) {
  int v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
    n /= p;
    ++v;
  }
  return v;
}

int legendre(const Integer& u, long p) {
  Integer pz = p;
  Integer r = u % pz;
  if (r < 0) r += pz;
  return mpz_legendre(r.get_mpz_t(), pz.get_mpz_t());
}

// (A,B)_2 for A, B in {1,3,5,7,2,6,10,14}, by searching primitive zeros of
// z^2 - A x^2 - B y^2 modulo 2^8. A primitive zero modulo 2^5 already lifts,
// since a unit coordinate has partial derivative of valuation at most 2.
int two_adic_table(int a, int b) {
  static const std::array<std::array<int, 16>, 16> table = [] {
    constexpr int M = 256;
    std::array<bool, M> any{}, odd{};
    for (int z = 0; z < M; ++z) {
      any[z * z % M] = true;
      if (z % 2 == 1) odd[z * z % M] = true;
    }
    std::array<std::array<int, 16>, 16> t{};
    for (int A = 1; A < 16; ++A)
      for (int B = 1; B < 16; ++B) {
        bool found = false;
        for (int x = 0; x < M && !found; ++x)
          for (int y = 0; y < M && !found; ++y) {
            int r = (A * x * x + B * y * y) % M;
            found = (x % 2 == 1 || y % 2 == 1) ? any[r] : odd[r];
          }
        t[A][B] = found ? 1 : -1;
      }
    return t;
  }();
  return table[a][b];
}

int two_adic_normal(const Rational& q) {
  Integer n = square_class_integer(q);
  int v = strip(n, 2) % 2;
  Integer r = n % 8;
  if (r < 0) r += 8;
  return static_cast<int>(r.get_si()) * (v ? 2 : 1);
}

std::string place_name(long p) { return p == 0 ? "inf" : std::to_string(p); }

std::vector<long> odd_primes_of(const Rational& q) {
  std::vector<long> out;
  for (const Integer& part : {Integer(q.get_num()), Integer(q.get_den())}) {
    Integer a = abs(part);
    if (!a.fits_slong_p()) throw std::overflow_error("Hilbert symbol argument too large to factor");
    for (auto p : prime_factors(a.get_si()))
      if (p != 2) out.push_back(static_cast<long>(p));
  }
  return out;
}

bool is_rational_square(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) || !mpz_perfect_square_p(q.get_den().get_mpz_t())) return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

}  // namespace

Matrix2 Matrix2::pow(long e) const {
  Matrix2 r, base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string to_string(const Matrix2& m) {
  return "[[" + to_display_string(m.a) + ", " + to_display_string(m.b) + "], [" + to_display_string(m.c) + ", " +
         to_display_string(m.d) + "]]";
}

// ---------------------------------------------------------------- Hilbert symbols over Q

int hilbert_symbol_local(const Rational& a, const Rational& b, long p) {
  if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  if (p == 2) return two_adic_table(two_adic_normal(a), two_adic_normal(b));
  Integer u = square_class_integer(a), v = square_class_integer(b);
  int alpha = strip(u, p), beta = strip(v, p);
  int s = ((alpha * beta) % 2 == 1 && p % 4 == 3) ? -1 : 1;
  if (beta % 2 == 1) s *= legendre(u, p);
  if (alpha % 2 == 1) s *= legendre(v, p);
  return s;
}

std::vector<long> bad_places(const Rational& a, const Rational& b) {
  std::vector<long> places{0, 2};
  for (const auto& q : {a, b})
    for (long p : odd_primes_of(q))
      if (std::find(places.begin(), places.end(), p) == places.end()) places.push_back(p);
  std::sort(places.begin() + 2, places.end());
  return places;
}

HilbertResult hilbert_symbol_Q(const Rational& a, const Rational& b, int bound) {
  HilbertResult res;
  for (long p : bad_places(a, b)) {
    int s = hilbert_symbol_local(a, b, p);
    res.local.emplace_back(p, s);
    if (s == -1) res.value = -1;
  }
  if (res.value == -1) return res;
  const Integer A = square_class_integer(a), B = square_class_integer(b);
  for (int r = 0; r <= bound && !res.witness; ++r)
    for (int x = -r; x <= r && !res.witness; ++x)
      for (int y = -r; y <= r && !res.witness; ++y) {
        if (std::max(std::abs(x), std::abs(y)) != r || (x == 0 && y == 0)) continue;
        Integer w = A * x * x + B * y * y;
        if (w < 0 || !mpz_perfect_square_p(w.get_mpz_t())) continue;
        Integer z;
        mpz_sqrt(z.get_mpz_t(), w.get_mpz_t());
        res.witness = ConicPoint{Z(Rational(Integer(a.get_den()) * x)), Z(Rational(Integer(b.get_den()) * y)), Z(Rational(z))};
      }
  return res;
}

// ---------------------------------------------------------------- square roots and conics over K

namespace {

using Cplx = std::complex<double>;

// Complex embeddings of a Q-basis of K, one row per embedding, and its inverse.
struct FieldNumerics {
  std::vector<Z> basis;
  std::vector<std::vector<Cplx>> e;
  std::vector<std::vector<Cplx>> inv;
  std::vector<int> reps;  // residues modulo L
  int L = 1;

  FieldNumerics(const FieldSpec& k, int extra_conductor) {
    basis = k.basis();
    L = std::lcm(k.modulus(), extra_conductor);
    for (int r : k.embeddings()) {
      int c = mod(r, k.modulus());
      while (std::gcd(c, L) != 1) c += k.modulus();
      reps.push_back(c);
    }
    for (int r : reps) {
      e.emplace_back();
      for (const auto& b : basis) e.back().push_back(embed(b, r));
    }
    inv = invert(e);
  }

  Cplx embed(const Z& x, int r) const {
    const int M = std::lcm(L, x.conductor());
    int c = r;
    while (std::gcd(c, M) != 1) c += L;
    auto em = embed_real(x.lift(M), c, 60);
    return {em.value.lower.get_d(), em.imag.lower.get_d()};
  }

  std::vector<Cplx> embed_all(const Z& x) const {
    std::vector<Cplx> out;
    for (int r : reps) out.push_back(embed(x, r));
    return out;
  }

  static std::vector<std::vector<Cplx>> invert(std::vector<std::vector<Cplx>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Cplx>> r(n, std::vector<Cplx>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      for (std::size_t i = c + 1; i < n; ++i)
        if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
      std::swap(m[p], m[c]);
      std::swap(r[p], r[c]);
      Cplx d = m[c][c];
      for (std::size_t j = 0; j < n; ++j) m[c][j] /= d, r[c][j] /= d;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c) continue;
        Cplx f = m[i][c];
        for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[c][j], r[i][j] -= f * r[c][j];
      }
    }
    return r;
  }
};

std::optional<Rational> reconstruct(double v) {
  if (!std::isfinite(v) || std::abs(v) > 1e9) return std::nullopt;
  // continued fraction convergents
  double x = v;
  Integer h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  for (int step = 0; step < 40; ++step) {
    double fl = std::floor(x);
    Integer a = static_cast<long>(fl);
    Integer h = a * h0 + h1, k = a * k0 + k1;
    h1 = h0, h0 = h, k1 = k0, k0 = k;
    if (k0 > 100000) return std::nullopt;
    Rational q(h0, k0);
    if (std::abs(q.get_d() - v) < 1e-7) {
      q.canonicalize();
      return q;
    }
    double frac = x - fl;
    if (frac < 1e-12) return std::nullopt;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

// Square root from the embedded values w_k: try every sign pattern, read
// off rational coordinates in the basis and verify exactly.
std::optional<Z> sqrt_from_numerics(const Z& w, const std::vector<Cplx>& wk, const FieldNumerics& num) {
  const std::size_t d = wk.size();
  std::vector<Cplx> roots(d);
  for (std::size_t i = 0; i < d; ++i) roots[i] = std::sqrt(wk[i]);
  for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
    std::vector<Cplx> s(d);
    for (std::size_t i = 0; i < d; ++i) s[i] = (i > 0 && (mask >> (i - 1) & 1)) ? -roots[i] : roots[i];
    Z cand;
    bool ok = true;
    for (std::size_t j = 0; j < d && ok; ++j) {
      Cplx q = 0.0;
      for (std::size_t i = 0; i < d; ++i) q += num.inv[j][i] * s[i];
      if (std::abs(q.imag()) > 1e-6) {
        ok = false;
        break;
      }
      auto r = reconstruct(q.real());
      if (!r) ok = false;
      else if (*r != 0) cand += Z(*r) * num.basis[j];
    }
    if (ok && cand * cand == w) return minimize_conductor(cand);
  }
  return std::nullopt;
}

Z form_value(const ConicPoint& p, const Z& a, const Z& b) { return p.z * p.z - a * p.x * p.x - b * p.y * p.y; }

}  // namespace

std::optional<Z> sqrt_in_field(const Z& a, const FieldSpec& k) {
  if (a.is_zero()) return Z(0);
  if (!k.contains(a)) return std::nullopt;
  if (a.is_rational()) {
    Rational root;
    if (is_rational_square(a.to_rational(), root)) return Z(root);
    if (k.degree() == 1) return std::nullopt;
  }
  FieldNumerics num(k, a.conductor());
  return sqrt_from_numerics(a, num.embed_all(a), num);
}

bool on_conic(const ConicPoint& p, const Z& a, const Z& b) {
  if (p.x.is_zero() && p.y.is_zero() && p.z.is_zero()) return false;
  return form_value(p, a, b).is_zero();
}

ConicResult conic_solve_K(const Z& a, const Z& b, const FieldSpec& k, int height_bound) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("conic coefficients must be nonzero");
  if (!k.contains(a) || !k.contains(b)) throw std::invalid_argument("conic coefficients must lie in K");
  ConicResult res;
  auto found = [&](Z x, Z y, Z z, std::string how) {
    res.kind = ConicResult::Kind::Witness;
    res.point = ConicPoint{std::move(x), std::move(y), std::move(z)};
    res.detail = std::move(how);
    if (!on_conic(*res.point, a, b)) throw std::logic_error("conic witness fails verification");
    return res;
  };
  if (k.is_real())
    for (int e : k.embeddings())
      if (k.sign(a, e) < 0 && k.sign(b, e) < 0) {
        res.kind = ConicResult::Kind::RealObstruction;
        res.embedding = e;
        res.detail = "a = " + to_display_string(a) + " and b = " + to_display_string(b) +
                     " are both negative under the real embedding zeta_" + std::to_string(k.modulus()) +
                     " -> exp(2 pi i " + std::to_string(e) + "/" + std::to_string(k.modulus()) +
                     "), so z^2 - a x^2 - b y^2 is positive definite there";
        return res;
      }
  if (auto s = sqrt_in_field(a, k)) return found(1, 0, *s, "a is a square");
  if (auto s = sqrt_in_field(b, k)) return found(0, 1, *s, "b is a square");
  if (auto s = sqrt_in_field(-b / a, k)) return found(*s, 1, 0, "-b/a is a square");
  if (auto s = sqrt_in_field(a + b, k)) return found(1, 1, *s, "a + b is a square");
  if (k.degree() == 1) {
    auto h = hilbert_symbol_Q(a.to_rational(), b.to_rational(), height_bound);
    if (h.witness) return found(h.witness->x, h.witness->y, h.witness->z, "rational search");
    if (h.value == -1) {
      for (auto [p, s] : h.local)
        if (s == -1) {
          res.kind = p == 0 ? ConicResult::Kind::RealObstruction : ConicResult::Kind::LocalObstruction;
          res.place = p;
          res.detail = "local Hilbert symbol at " + place_name(p) + " is -1";
          return res;
        }
    }
    res.detail = "Hilbert symbol is 1 but no rational point of height <= " + std::to_string(height_bound);
    return res;
  }
  // Shell search over integer coordinates in the trace basis.
  FieldNumerics num(k, std::lcm(a.conductor(), b.conductor()));
  const std::size_t d = num.basis.size();
  const auto ak = num.embed_all(a), bk = num.embed_all(b);
  constexpr long budget = 400000;
  long tested = 0;
  int reached = 0;
  for (int r = 1; r <= height_bound; ++r) {
    std::vector<std::vector<int>> vecs;
    std::vector<int> c(d, -r);
    for (;;) {
      vecs.push_back(c);
      std::size_t i = 0;
      while (i < d && c[i] == r) c[i++] = -r;
      if (i == d) break;
      ++c[i];
    }
    auto height = [](const std::vector<int>& v) {
      int h = 0;
      for (int x : v) h = std::max(h, std::abs(x));
      return h;
    };
    auto value = [&](const std::vector<int>& v, std::size_t e) {
      Cplx s = 0.0;
      for (std::size_t j = 0; j < d; ++j) s += static_cast<double>(v[j]) * num.e[e][j];
      return s;
    };
    auto exact = [&](const std::vector<int>& v) {
      Z s;
      for (std::size_t j = 0; j < d; ++j)
        if (v[j] != 0) s += Z(v[j]) * num.basis[j];
      return s;
    };
    for (const auto& xv : vecs)
      for (const auto& yv : vecs) {
        if (std::max(height(xv), height(yv)) != r) continue;
        if (++tested > budget) {
          res.detail = "search budget exhausted at height " + std::to_string(reached);
          return res;
        }
        std::vector<Cplx> wk(d);
        for (std::size_t e = 0; e < d; ++e) {
          Cplx xe = value(xv, e), ye = value(yv, e);
          wk[e] = ak[e] * xe * xe + bk[e] * ye * ye;
        }
        // cheap numeric filter before any exact arithmetic
        bool plausible = true;
        for (const auto& w : wk) plausible = plausible && std::isfinite(std::abs(w));
        if (!plausible) continue;
        Z x = exact(xv), y = exact(yv);
        Z w = a * x * x + b * y * y;
        if (w.is_zero()) return found(x, y, 0, "shell search");
        if (auto s = sqrt_from_numerics(w, wk, num)) return found(x, y, *s, "shell search");
      }
    reached = r;
  }
  res.detail = "no point with basis coordinates of height <= " + std::to_string(height_bound);
  return res;
}

// ---------------------------------------------------------------- witnesses

std::string to_string(Status s) {
  switch (s) {
    case Status::Realizable: return "Realizable";
    case Status::NotRealizable: return "NotRealizable";
    case Status::Unknown: return "Unknown";
  }
  return {};
}

CyclotomicNumber half_trace(const GroupId& g) {
  int m = 1;
  switch (g.family) {
    case Family::Cyclic: m = g.n; break;
    case Family::BinaryDihedral: m = 2 * g.n; break;
    case Family::BinaryTetrahedral: m = 6; break;
    case Family::BinaryOctahedral: m = 8; break;
    case Family::BinaryIcosahedral: m = 10; break;
  }
  return minimize_conductor(Z(Rational(1, 2)) * (Z::zeta(m) + Z::zeta(m, -1)));
}

Witness bd_witness(int n, const Z& x, const Z& y) {
  const Z c = half_trace(GroupId::binary_dihedral(n));
  Witness w;
  w.generators.emplace_back("sigma", Matrix2{0, -1, 1, Z(2) * c});
  w.generators.emplace_back("tau", Matrix2{x, y, y - Z(2) * c * x, -x});
  return w;
}

Witness polyhedral_witness(const GroupId& g, const Z& x, const Z& y) {
  const Z c = half_trace(g);
  Witness w;
  w.generators.emplace_back("a", Matrix2{x, y, y + Z(2) * c * (Z(1) - x), Z(1) - x});
  w.generators.emplace_back("b", Matrix2{0, -1, 1, Z(2) * c});
  return w;
}

namespace {

std::size_t closure_size(const std::vector<Matrix2>& gens, std::size_t cap) {
  std::vector<Matrix2> elems{Matrix2::identity()};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Matrix2 p = elems[i] * g;
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) {
        elems.push_back(p);
        if (elems.size() > cap) return elems.size();
      }
    }
  return elems.size();
}

int polyhedral_k(const GroupId& g) {
  switch (g.family) {
    case Family::BinaryTetrahedral: return 3;
    case Family::BinaryOctahedral: return 4;
    case Family::BinaryIcosahedral: return 5;
    default: return 0;
  }
}

}  // namespace

Report verify_witness(const GroupId& g, const Witness& w, const FieldSpec& k) {
  Report rep;
  std::vector<Matrix2> gens;
  for (const auto& [name, m] : w.generators) gens.push_back(m);
  bool in_k = true, unimodular = true;
  for (const auto& m : gens) {
    for (const auto& e : {m.a, m.b, m.c, m.d}) in_k = in_k && k.contains(e);
    unimodular = unimodular && m.det() == Z(1);
  }
  rep.add("entries in K", in_k);
  rep.add("determinant one", unimodular);
  const Matrix2 minus = neg_identity();
  switch (g.family) {
    case Family::Cyclic: {
      bool ok = gens.size() == 1 && gens[0].pow(g.n) == Matrix2::identity();
      rep.add("g^n = 1", ok);
      break;
    }
    case Family::BinaryDihedral: {
      bool ok = gens.size() == 2;
      if (ok) {
        const auto& s = gens[0];
        const auto& t = gens[1];
        rep.add("tau^2 = -1", t.pow(2) == minus);
        rep.add("sigma^n = -1", s.pow(g.n) == minus);
        rep.add("(tau sigma)^2 = -1", (t * s).pow(2) == minus);
      } else {
        rep.add("two generators", false);
      }
      break;
    }
    default: {
      bool ok = gens.size() == 2;
      if (ok) {
        const auto& a = gens[0];
        const auto& b = gens[1];
        rep.add("a^3 = -1", a.pow(3) == minus);
        rep.add("b^k = -1", b.pow(polyhedral_k(g)) == minus);
        rep.add("(ab)^2 = -1", (a * b).pow(2) == minus);
      } else {
        rep.add("two generators", false);
      }
      break;
    }
  }
  const std::size_t order = static_cast<std::size_t>(g.order());
  const std::size_t got = closure_size(gens, order);
  rep.add("generated group has order " + std::to_string(order), got == order, "closure has " + std::to_string(got) + " elements");
  return rep;
}

namespace {

// A second point on z^2 - a x^2 - b y^2 = 0 with x != 0, from a known point.
std::optional<ConicPoint> point_with_x(const ConicPoint& p, const Z& a, const Z& b) {
  if (!p.x.is_zero()) return p;
  auto bil = [&](const ConicPoint& u, const ConicPoint& v) { return u.z * v.z - a * u.x * v.x - b * u.y * v.y; };
  for (const auto& dir : {ConicPoint{1, 0, 0}, ConicPoint{1, 1, 0}, ConicPoint{1, 0, 1}, ConicPoint{1, 1, 1},
                          ConicPoint{1, 2, 1}, ConicPoint{1, 1, 2}, ConicPoint{2, 1, 3}}) {
    Z q = bil(dir, dir);
    if (q.is_zero()) continue;
    Z f = Z(-2) * bil(p, dir);
    ConicPoint r{q * p.x + f * dir.x, q * p.y + f * dir.y, q * p.z + f * dir.z};
    if (!r.x.is_zero() && on_conic(r, a, b)) return r;
  }
  return std::nullopt;
}

struct Quaternion {
  Z w, x, y, z;
};

Matrix2 quaternion_matrix(const Quaternion& q, const Z& p, const Z& r) {
  // i -> [[0,1],[-1,0]], j -> [[p,r],[r,-p]], k = ij -> [[r,-p],[-p,-r]] with p^2 + r^2 = -1
  return {q.w + q.y * p + q.z * r, q.x + q.y * r - q.z * p, -q.x + q.y * r - q.z * p, q.w - q.y * p - q.z * r};
}

std::string conic_certificate(const std::string& symbol, const ConicResult& cr) {
  switch (cr.kind) {
    case ConicResult::Kind::RealObstruction:
    case ConicResult::Kind::LocalObstruction: return symbol + " = -1: " + cr.detail;
    case ConicResult::Kind::Unknown: return symbol + " undecided: " + cr.detail;
    case ConicResult::Kind::Witness:
      return symbol + " = 1: (x, y, z) = (" + to_display_string(cr.point->x) + ", " + to_display_string(cr.point->y) +
             ", " + to_display_string(cr.point->z) + ") solves z^2 - a x^2 - b y^2 = 0 (" + cr.detail + ")";
  }
  return {};
}

Verdict from_conic(const std::string& symbol, const ConicResult& cr) {
  Verdict v;
  v.certificate = conic_certificate(symbol, cr);
  v.status = cr.kind == ConicResult::Kind::Unknown ? Status::Unknown : Status::NotRealizable;
  return v;
}

}  // namespace

Verdict realizable(const GroupId& g, const FieldSpec& k, int height_bound) {
  Verdict v;
  for (const auto& val : natural_character(g))
    if (!k.contains(val)) {
      v.status = Status::NotRealizable;
      v.certificate = "trace condition fails: character value " + to_display_string(val) + " is not in K = " +
                      k.to_string();
      return v;
    }
  const Z c = half_trace(g);
  if (g.family == Family::Cyclic) {
    Matrix2 m = g.n == 1 ? Matrix2::identity() : g.n == 2 ? neg_identity() : Matrix2{0, -1, 1, Z(2) * c};
    v.status = Status::Realizable;
    v.certificate = "cyclic group: zeta + zeta^-1 = " + to_display_string(Z(2) * c) + " lies in K";
    v.witness = Witness{{{"g", m}}};
    return v;
  }
  if (g.family == Family::BinaryDihedral) {
    const Z a = -1, b = c * c - Z(1);
    const std::string symbol = "(-1, c^2 - 1)_K = (-1, " + to_display_string(b) + ")_K";
    ConicResult cr = conic_solve_K(a, b, k, height_bound);
    if (cr.kind != ConicResult::Kind::Witness) return from_conic(symbol, cr);
    auto p = point_with_x(*cr.point, a, b);
    if (!p) throw std::logic_error("no affine point on the binary dihedral conic");
    // z^2 + x^2 + (1 - c^2) y^2 = 0 gives u^2 + (1 - c^2) v^2 + 1 = 0 with u = z/x, v = y/x
    Z u = p->z / p->x, w = p->y / p->x;
    Z x = u + c * w, y = w;
    v.status = Status::Realizable;
    v.certificate = conic_certificate(symbol, cr) + "; x^2 + y^2 - 2cxy + 1 = 0 at (x, y) = (" + to_display_string(x) +
                    ", " + to_display_string(y) + ")";
    v.witness = bd_witness(g.n, x, y);
    return v;
  }
  const std::string symbol = "(-1, -1)_K";
  ConicResult cr = conic_solve_K(-1, -1, k, height_bound);
  if (cr.kind != ConicResult::Kind::Witness) return from_conic(symbol, cr);
  Z p, r;
  if (!cr.point->z.is_zero()) {
    p = cr.point->x / cr.point->z;
    r = cr.point->y / cr.point->z;
  } else {
    p = cr.point->y / cr.point->x;  // a square root of -1
    r = 0;
  }
  const Z h(Rational(1, 2));
  Quaternion qa{h, h, h, h};
  Quaternion qb;
  switch (g.family) {
    case Family::BinaryTetrahedral: qb = {h, h, h, -h}; break;
    case Family::BinaryOctahedral: qb = {c, c, 0, 0}; break;
    default: qb = {c, c - h, h, 0}; break;
  }
  Matrix2 A = quaternion_matrix(qa, p, r), B = quaternion_matrix(qb, p, r);
  // Basis (u, Bu) puts B into companion form [[0,-1],[1,2c]].
  Matrix2 P;
  bool have = false;
  for (auto [u0, u1] : {std::pair<Z, Z>{1, 0}, {0, 1}, {1, 1}}) {
    Z bu0 = B.a * u0 + B.b * u1, bu1 = B.c * u0 + B.d * u1;
    P = Matrix2{u0, bu0, u1, bu1};
    if (!P.det().is_zero()) {
      have = true;
      break;
    }
  }
  if (!have) throw std::logic_error("no cyclic vector for the generator b");
  Z di = P.det().inverse();
  Matrix2 Pinv{P.d * di, -P.b * di, -P.c * di, P.a * di};
  Matrix2 Ma = Pinv * A * P;
  Witness w = polyhedral_witness(g, Ma.a, Ma.b);
  if (!(w.generators[0].second == Ma) || !(w.generators[1].second == Pinv * B * P))
    throw std::logic_error("conjugated generators do not match the normal form");
  v.status = Status::Realizable;
  v.certificate = conic_certificate(symbol, cr) + "; x^2 + y^2 - 2cxy - x + 2cy + 1 = 0 at (x, y) = (" +
                  to_display_string(Ma.a) + ", " + to_display_string(Ma.b) + ")";
  v.witness = w;
  return v;
}

std::pair<Z, Z> bt_to_minus_two(const Z& x, const Z& y) {
  if (x == y) return {Z(0), x};
  Z d = (x - y).inverse();
  return {(x + y) * d, d};
}

std::pair<Z, Z> bt_from_minus_two(const Z& x, const Z& y) {
  if (y.is_zero()) return {x, Z(0)};
  Z d = (Z(2) * y).inverse();
  return {(x + Z(1)) * d, (x - Z(1)) * d};
}

}  // namespace mckay
