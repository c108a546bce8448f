#include "mckay/real_interval.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mckay/modular.hpp"

namespace mckay {

RealInterval operator*(const Rational& c, const RealInterval& a) {
  if (c >= 0) return {c * a.lower, c * a.upper};
  return {c * a.upper, c * a.lower};
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  Rational p[4] = {a.lower * b.lower, a.lower * b.upper, a.upper * b.lower, a.upper * b.upper};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

std::string to_string(const RealInterval& iv) {
  return "[" + iv.lower.get_str() + ", " + iv.upper.get_str() + "]";
}

namespace {

Rational pow2(int bits) {
  Integer one = 1;
  return Rational(Integer(one << static_cast<unsigned long>(bits)));
}

// Outward rounding to a dyadic grid of spacing 2^-bits.
RealInterval round_out(const RealInterval& iv, int bits) {
  Rational scale = pow2(bits);
  Rational lo = iv.lower * scale;
  Rational hi = iv.upper * scale;
  Integer flo, chi;
  mpz_fdiv_q(flo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  mpz_cdiv_q(chi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  return {Rational(flo) / scale, Rational(chi) / scale};
}

// Enclosure of arctan(1/x) for integer x >= 2, width <= 2^-bits.
RealInterval arctan_inverse(long x, int bits) {
  Rational eps = Rational(1) / pow2(bits);
  Rational sum = 0;
  Rational xpow = x;  // x^(2k+1)
  Rational x2 = x * x;
  for (long k = 0;; ++k) {
    Rational term = Rational(1) / (Rational(2 * k + 1) * xpow);
    Rational next = Rational(1) / (Rational(2 * k + 3) * xpow * x2);
    sum += (k % 2 == 0) ? term : Rational(-term);
    if (next <= eps) return {sum - next, sum + next};
    xpow *= x2;
  }
}

// Taylor enclosures on an exact rational argument with 0 <= t < 1.
RealInterval cos_taylor(const Rational& t, int bits) {
  Rational eps = Rational(1) / pow2(bits);
  Rational sum = 0;
  Rational term = 1;  // t^(2k)/(2k)!
  Rational t2 = t * t;
  for (long k = 0;; ++k) {
    sum += (k % 2 == 0) ? term : Rational(-term);
    Rational next = term * t2 / Rational((2 * k + 1) * (2 * k + 2));
    if (next <= eps) return {sum - next, sum + next};
    term = next;
  }
}

RealInterval sin_taylor(const Rational& t, int bits) {
  Rational eps = Rational(1) / pow2(bits);
  Rational sum = 0;
  Rational term = t;  // t^(2k+1)/(2k+1)!
  Rational t2 = t * t;
  for (long k = 0;; ++k) {
    sum += (k % 2 == 0) ? term : Rational(-term);
    Rational next = term * t2 / Rational((2 * k + 2) * (2 * k + 3));
    if (next <= eps) return {sum - next, sum + next};
    term = next;
  }
}

// Fractional part in [0, 1).
Rational frac(const Rational& r) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return r - Rational(fl);
}

// theta = 2*pi*r with r in [0, 1/8], so theta lies in [0, pi/4] where cos is
// decreasing and sin increasing; evaluate at the endpoints of the theta enclosure.
RealInterval theta_enclosure(const Rational& r, int bits) {
  RealInterval pi = pi_interval(bits + 4);
  return round_out((2 * r) * pi, bits + 6);
}

RealInterval cos_small(const Rational& r, int bits) {
  if (r == 0) return RealInterval::point(1);
  RealInterval th = theta_enclosure(r, bits + 2);
  RealInterval at_hi = cos_taylor(th.upper, bits + 3);
  RealInterval at_lo = cos_taylor(th.lower, bits + 3);
  return round_out({at_hi.lower, at_lo.upper}, bits + 2);
}

RealInterval sin_small(const Rational& r, int bits) {
  if (r == 0) return RealInterval::point(0);
  RealInterval th = theta_enclosure(r, bits + 2);
  RealInterval at_lo = sin_taylor(th.lower, bits + 3);
  RealInterval at_hi = sin_taylor(th.upper, bits + 3);
  return round_out({at_lo.lower, at_hi.upper}, bits + 2);
}

}  // namespace

RealInterval pi_interval(int bits) {
  // pi = 16 arctan(1/5) - 4 arctan(1/239)
  RealInterval a5 = arctan_inverse(5, bits + 6);
  RealInterval a239 = arctan_inverse(239, bits + 4);
  RealInterval pi = Rational(16) * a5 + Rational(-4) * a239;
  return round_out(pi, bits + 2);
}

RealInterval cos_2pi(const Rational& r_in, int bits) {
  Rational r = frac(r_in);
  if (r > Rational(1, 2)) r = 1 - r;
  if (r > Rational(1, 4)) return -cos_2pi(Rational(1, 2) - r, bits);
  if (r > Rational(1, 8)) return sin_2pi(Rational(1, 4) - r, bits);
  return cos_small(r, bits);
}

RealInterval sin_2pi(const Rational& r_in, int bits) {
  Rational r = frac(r_in);
  if (r > Rational(1, 2)) return -sin_2pi(1 - r, bits);
  if (r > Rational(1, 4)) r = Rational(1, 2) - r;
  if (r > Rational(1, 8)) return cos_2pi(Rational(1, 4) - r, bits);
  return sin_small(r, bits);
}

RealEmbedding embed_real(const CyclotomicNumber& a, std::int64_t embedding_k,
                         int precision_bits) {
  const int m = a.conductor();
  if (m > 2 && std::gcd(mod(embedding_k, m), m) != 1)
    throw std::invalid_argument("embedding index must be coprime to the conductor");
  RealEmbedding out;
  out.is_real = (a.conj() == a);
  if (a.is_rational()) {
    out.value = RealInterval::point(a.coeffs()[0]);
    out.imag = RealInterval::point(0);
    return out;
  }
  Rational weight = 0;
  for (const auto& c : a.coeffs()) weight += abs(c);
  int extra = static_cast<int>(mpz_sizeinbase(Integer(weight.get_num() / weight.get_den() + 1).get_mpz_t(), 2));
  const Rational target = Rational(1) / pow2(precision_bits);
  for (int bits = precision_bits + extra + 4;; bits += 16) {
    RealInterval re = RealInterval::point(0);
    RealInterval im = RealInterval::point(0);
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
      const Rational& c = a.coeffs()[j];
      if (c == 0) continue;
      Rational r(mod(static_cast<std::int64_t>(j) * embedding_k, m), m);
      r.canonicalize();
      re = re + c * cos_2pi(r, bits);
      im = im + c * sin_2pi(r, bits);
    }
    if (re.width() <= target) {
      out.value = re;
      out.imag = out.is_real ? RealInterval::point(0) : im;
      return out;
    }
  }
}

int certified_sign(const CyclotomicNumber& a, std::int64_t embedding_k) {
  if ((a + a.conj()).is_zero()) return 0;
  for (int bits = 32;; bits *= 2) {
    RealInterval v = embed_real(a, embedding_k, bits).value;
    if (v.is_positive()) return 1;
    if (v.is_negative()) return -1;
  }
}

}  // namespace mckay
