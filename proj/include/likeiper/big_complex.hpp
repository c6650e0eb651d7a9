#pragma once

// Minimal complex arithmetic over BigReal: just what the zeta evaluation and
// the probe need.

#include <utility>

#include "likeiper/big_real.hpp"

namespace likeiper {

struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(BigReal r) : re(std::move(r)), im(0L, re.digits()) {}
  BigComplex(long r, int digits) : re(r, digits), im(0L, digits) {}

  int digits() const { return std::min(re.digits(), im.digits()); }
  BigComplex with_digits(int d) const { return {re.with_digits(d), im.with_digits(d)}; }
  bool is_real() const { return im.is_zero(); }

  BigComplex operator-() const { return {-re, -im}; }

  BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
  BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
  BigComplex& operator*=(const BigComplex& o) {
    BigReal r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  BigComplex& operator/=(const BigComplex& o) {
    const BigReal den = o.re * o.re + o.im * o.im;
    BigReal r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(r);
    return *this;
  }
  BigComplex& operator+=(const BigReal& o) { re += o; return *this; }
  BigComplex& operator-=(const BigReal& o) { re -= o; return *this; }
  BigComplex& operator*=(const BigReal& o) { re *= o; im *= o; return *this; }
  BigComplex& operator/=(const BigReal& o) { re /= o; im /= o; return *this; }
  BigComplex& operator+=(long o) { re += o; return *this; }
  BigComplex& operator-=(long o) { re -= o; return *this; }
  BigComplex& operator*=(long o) { re *= o; im *= o; return *this; }
  BigComplex& operator/=(long o) { re /= o; im /= o; return *this; }

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigReal& b) { return a /= b; }
  friend BigComplex operator+(BigComplex a, long b) { return a += b; }
  friend BigComplex operator-(BigComplex a, long b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, long b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, long b) { return a /= b; }
};

inline BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline BigReal abs(const BigComplex& z) { return hypot(z.re, z.im); }

/// exp(x) (cos y + i sin y)
inline BigComplex exp(const BigComplex& z) {
  const BigReal m = exp(z.re);
  BigReal c(0L, z.im.digits()), s(0L, z.im.digits());
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  return {m * c, m * s};
}

/// Principal branch.
inline BigComplex log(const BigComplex& z) { return {log(abs(z)), atan2(z.im, z.re)}; }

/// n^(-s) for a positive integer n, given log n.
inline BigComplex int_pow_neg(const BigReal& log_n, const BigComplex& s) {
  return exp(BigComplex(-(s.re * log_n), -(s.im * log_n)));
}

}  // namespace likeiper
