#pragma once

// Fundamental constants and the special-function values the expansions need:
// Euler-Mascheroni gamma, zeta at integers, and polygamma at 1/2.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "likeiper/bernoulli.hpp"
#include "likeiper/big_real.hpp"

namespace likeiper {

inline BigReal euler_gamma(int digits) {
  BigReal r(0L, digits);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

struct FundamentalConstants {
  BigReal gamma;
  BigReal log2pi;
  BigReal log4pi;
  /// (gamma - 1 - log 2pi)/2 = -1.1303...; the linear coefficient of the
  /// trend asymptotics (n/2) log n + c n.
  BigReal c_trend;

  static FundamentalConstants at(int digits) {
    BigReal g = euler_gamma(digits);
    BigReal p = pi(digits);
    BigReal l2p = log(p * 2L);
    BigReal l4p = log(p * 4L);
    BigReal c = (g - 1L - l2p) / 2L;
    return {std::move(g), std::move(l2p), std::move(l4p), std::move(c)};
  }
};

/// zeta(k) for integer k >= 2 by Euler-Maclaurin summation: a direct sum to
/// N-1, the integral and half-term at N, then Bernoulli corrections until
/// they drop below the working precision.
inline BigReal zeta_int(long k, int digits) {
  if (k < 2) throw std::domain_error("zeta_int: k must be >= 2, got " + std::to_string(k));
  const int wp = digits + 10;
  const long n_cut = digits / 2 + 10;

  BigReal sum(0L, wp);
  for (long n = 1; n < n_cut; ++n) sum += pow(BigReal(n, wp), -k);

  const BigReal big_n(n_cut, wp);
  const BigReal n_pow = pow(big_n, -k);  // N^-s
  sum += n_pow * big_n / (k - 1);
  sum += n_pow / 2L;

  // factor_j = s(s+1)...(s+2j-2) / (2j)! * N^(-s-2j+1)
  BigReal factor = n_pow / big_n * k / 2L;
  const BigReal inv_n2 = BigReal(1L, wp) / (big_n * big_n);
  const BigReal eps = pow10(-(wp + 2), wp);
  BigReal prev_mag(0L, wp);
  for (int j = 1;; ++j) {
    const BigReal term = factor * BigReal(bernoulli_even(j), wp);
    const BigReal mag = abs(term);
    sum += term;
    if (mag < eps * abs(sum)) break;
    if (j > 4 && mag > prev_mag) {
      throw std::runtime_error("zeta_int: Euler-Maclaurin tail diverged before convergence");
    }
    prev_mag = mag;
    factor *= (k + 2L * j - 1) * (k + 2L * j);
    factor /= (2L * j + 1) * (2L * j + 2);
    factor *= inv_n2;
  }
  return sum.with_digits(digits);
}

/// psi^(k)(1/2): -gamma - 2 log 2 for k = 0, otherwise
/// (-1)^(k+1) k! (2^(k+1) - 1) zeta(k+1).
inline BigReal polygamma_half(long k, int digits) {
  if (k < 0) throw std::domain_error("polygamma_half: k must be >= 0");
  if (k == 0) return -euler_gamma(digits) - log2_const(digits) * 2L;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k + 1));
  const mpz_class weight = fact * (two_pow - 1);
  BigReal v = zeta_int(k + 1, digits) * weight;
  return (k % 2 == 1) ? v : -v;
}

}  // namespace likeiper
