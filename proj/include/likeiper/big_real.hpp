#pragma once

// Arbitrary-precision real numbers backed by MPFR.
//
// A BigReal carries its working precision in decimal digits. The underlying
// MPFR mantissa is sized to that many digits plus a fixed number of guard
// bits; results of binary operations take the smaller precision of the two
// operands.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace likeiper {

inline constexpr int kDefaultDigits = 50;

class BigReal {
 public:
  static constexpr int kMinDigits = 10;
  static constexpr mpfr_prec_t kGuardBits = 32;

  static mpfr_prec_t bits_for(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + kGuardBits;
  }

  BigReal(long value, int digits) : digits_(checked(digits)) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_si(v_, value, MPFR_RNDN);
  }

  BigReal(int value, int digits) : BigReal(static_cast<long>(value), digits) {}

  BigReal(double value, int digits) : digits_(checked(digits)) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_d(v_, value, MPFR_RNDN);
  }

  BigReal(const mpz_class& value, int digits) : digits_(checked(digits)) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }

  BigReal(const mpq_class& value, int digits) : digits_(checked(digits)) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }

  /// Parses a decimal literal ("-1.25", "3e-7"). Throws std::invalid_argument
  /// if the whole string is not a number.
  BigReal(std::string_view decimal, int digits) : digits_(checked(digits)) {
    mpfr_init2(v_, bits_for(digits_));
    std::string s(decimal);
    if (s.empty() || mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      throw std::invalid_argument("not a decimal number: '" + s + "'");
    }
  }

  BigReal(const BigReal& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  BigReal(BigReal&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }

  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      digits_ = o.digits_;
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  BigReal& operator=(BigReal&& o) noexcept {
    digits_ = o.digits_;
    mpfr_swap(v_, o.v_);
    return *this;
  }

  ~BigReal() { mpfr_clear(v_); }

  int digits() const { return digits_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  /// Same value re-rounded to a different working precision.
  BigReal with_digits(int digits) const {
    BigReal r(0L, digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigReal operator-() const {
    BigReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  BigReal& operator+=(const BigReal& o) { return apply(o, mpfr_add); }
  BigReal& operator-=(const BigReal& o) { return apply(o, mpfr_sub); }
  BigReal& operator*=(const BigReal& o) { return apply(o, mpfr_mul); }
  BigReal& operator/=(const BigReal& o) { return apply(o, mpfr_div); }

  BigReal& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
  BigReal& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
  BigReal& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  BigReal& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

  BigReal& operator*=(const mpz_class& o) {
    mpfr_mul_z(v_, v_, o.get_mpz_t(), MPFR_RNDN);
    return *this;
  }

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator+(BigReal a, long b) { return a += b; }
  friend BigReal operator-(BigReal a, long b) { return a -= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }
  friend BigReal operator*(long a, BigReal b) { return b *= a; }
  friend BigReal operator+(long a, BigReal b) { return b += a; }
  friend BigReal operator-(long a, const BigReal& b) { return -(b - a); }
  friend BigReal operator*(BigReal a, const mpz_class& b) { return a *= b; }
  friend BigReal operator*(const mpz_class& a, BigReal b) { return b *= a; }

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, long b) {
    const int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  /// Fixed-point rendering with `decimals` digits after the point, rounded
  /// to nearest (ties to even). Locale independent.
  std::string to_fixed(int decimals) const { return format("%.*RNf", decimals); }

  /// Scientific rendering with `significant` digits.
  std::string to_sci(int significant) const { return format("%.*RNe", std::max(0, significant - 1)); }

  /// Fixed rendering truncated toward zero, matching how printed tables drop
  /// trailing digits.
  std::string to_fixed_truncated(int decimals) const { return format("%.*RZf", decimals); }

 private:
  static int checked(int digits) {
    if (digits < kMinDigits) {
      throw std::invalid_argument("precision must be at least " + std::to_string(kMinDigits) +
                                  " digits, got " + std::to_string(digits));
    }
    return digits;
  }

  template <class F>
  BigReal& apply(const BigReal& o, F f) {
    if (o.digits_ < digits_) {
      digits_ = o.digits_;
      mpfr_prec_round(v_, bits_for(digits_), MPFR_RNDN);
    }
    f(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  std::string format(const char* fmt, int n) const {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, fmt, n, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  int digits_;
  mpfr_t v_;

  friend BigReal unary(const BigReal&, int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t));
  friend BigReal atan2(const BigReal&, const BigReal&);
  friend BigReal pow(const BigReal&, const BigReal&);
  friend BigReal pow(const BigReal&, long);
  friend BigReal hypot(const BigReal&, const BigReal&);
};

inline BigReal unary(const BigReal& x, int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  BigReal r(0L, x.digits());
  f(r.v_, x.v_, MPFR_RNDN);
  return r;
}

inline BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
inline BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
inline BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
inline BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
inline BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
inline BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
inline BigReal log10(const BigReal& x) { return unary(x, mpfr_log10); }

inline BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(0L, std::min(y.digits(), x.digits()));
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}

inline BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r(0L, std::min(y.digits(), x.digits()));
  mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

inline BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(0L, std::min(y.digits(), x.digits()));
  mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

inline BigReal pow(const BigReal& x, long e) {
  BigReal r(0L, x.digits());
  mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
  return r;
}

inline BigReal pi(int digits) {
  BigReal r(0L, digits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

inline BigReal log2_const(int digits) {
  BigReal r(0L, digits);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

/// 10^e at the given precision.
inline BigReal pow10(long e, int digits) { return pow(BigReal(10L, digits), e); }

/// "Agrees to D digits": |x - ref| < 0.5e-D when |ref| < 1, relative
/// difference < 0.5e-D otherwise.
inline bool agrees_to(const BigReal& x, const BigReal& ref, int decimals) {
  const int d = std::max({x.digits(), ref.digits(), decimals + 10});
  const BigReal diff = abs(x.with_digits(d) - ref.with_digits(d));
  BigReal tol = pow10(-decimals, d) / 2L;
  const BigReal mag = abs(ref.with_digits(d));
  if (mag >= 1L) tol *= mag;
  return diff < tol;
}

/// Number of leading decimal digits on which x and ref agree, using the same
/// absolute/relative convention as agrees_to.
inline int agreeing_digits(const BigReal& x, const BigReal& ref) {
  const BigReal diff = abs(x - ref);
  if (diff.is_zero()) return std::min(x.digits(), ref.digits());
  BigReal scale = abs(ref);
  if (scale < 1L) scale = BigReal(1L, ref.digits());
  const double d = -log10(diff / scale).to_double() + std::log10(0.5);
  return std::max(0, static_cast<int>(std::floor(d)));
}

}  // namespace likeiper
