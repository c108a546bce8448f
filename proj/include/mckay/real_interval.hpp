#pragma once

// Certified real enclosures with rational endpoints, and real embeddings of
// cyclotomic numbers. No floating point is involved.

#include <cstdint>
#include <string>

#include "mckay/cyclotomic.hpp"

namespace mckay {

struct RealInterval {
  Rational lower;
  Rational upper;

  static RealInterval point(const Rational& q) { return {q, q}; }

  Rational width() const { return upper - lower; }
  bool contains(const Rational& q) const { return lower <= q && q <= upper; }
  bool contains(const RealInterval& o) const { return lower <= o.lower && o.upper <= upper; }
  bool is_positive() const { return lower > 0; }
  bool is_negative() const { return upper < 0; }

  friend RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    return {a.lower + b.lower, a.upper + b.upper};
  }
  friend RealInterval operator-(const RealInterval& a) { return {-a.upper, -a.lower}; }
  friend RealInterval operator*(const Rational& c, const RealInterval& a);
  friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
};

std::string to_string(const RealInterval& iv);

/// Enclosure of pi with width at most 2^-bits.
RealInterval pi_interval(int bits);

/// Enclosures of cos(2*pi*r) and sin(2*pi*r) for rational r, width at most 2^-bits.
RealInterval cos_2pi(const Rational& r, int bits);
RealInterval sin_2pi(const Rational& r, int bits);

struct RealEmbedding {
  RealInterval value;  // real part
  RealInterval imag;   // imaginary part
  bool is_real = false;  // exact: the image has imaginary part zero
};

/// Image of a under zeta_m -> exp(2*pi*i*k/m). The real part is enclosed in an
/// interval of width at most 2^-precision_bits.
RealEmbedding embed_real(const CyclotomicNumber& a, std::int64_t embedding_k, int precision_bits);

/// Sign of a nonzero real element under the embedding, refined until certain.
/// Returns +1 or -1; 0 only when a is exactly zero.
int certified_sign(const CyclotomicNumber& a, std::int64_t embedding_k);

}  // namespace mckay
