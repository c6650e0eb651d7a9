#pragma once

// Coefficient-type adaptor so series and recurrence templates run both on
// BigReal and on exact rationals (mpq_class). Exact mode separates algebra
// from roundoff in the property tests.

#include <gmpxx.h>

#include <concepts>
#include <string>

#include "likeiper/big_real.hpp"

namespace likeiper {

using Rational = mpq_class;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<BigReal> {
  static constexpr bool exact = false;
  static BigReal from_int(long v, const BigReal& like) { return BigReal(v, like.digits()); }
  static BigReal from_integer(const mpz_class& v, const BigReal& like) { return BigReal(v, like.digits()); }
  static BigReal zero_like(const BigReal& like) { return BigReal(0L, like.digits()); }
  static BigReal abs(const BigReal& x) { return likeiper::abs(x); }
  static std::string str(const BigReal& x) { return x.to_sci(x.digits()); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational from_int(long v, const Rational&) { return Rational(v); }
  static Rational from_integer(const mpz_class& v, const Rational&) { return Rational(v); }
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static std::string str(const Rational& x) { return x.get_str(); }
};

template <class T>
concept Scalar = requires(const T& a, const T& b, long n) {
  { T(a + b) } -> std::same_as<T>;
  { T(a - b) } -> std::same_as<T>;
  { T(a * b) } -> std::same_as<T>;
  { T(a / b) } -> std::same_as<T>;
  { scalar_traits<T>::from_int(n, a) } -> std::same_as<T>;
  { scalar_traits<T>::zero_like(a) } -> std::same_as<T>;
};

}  // namespace likeiper
