#pragma once

// Li-Keiper coefficients lambda(n) = lambda_trend(n) + lambda_tiny(n).
//
// With s = 1/(1-z):
//   lambda_tiny(n)/n  = [z^n] log((s-1) zeta(s)),
//   lambda_trend(n)/n = [z^n] log(s pi^(-s/2) Gamma(s/2)).
// Both are built as Taylor series in u = s-1 and mapped to z by
// u = z/(1-z).

#include <gmpxx.h>

#include <string>
#include <vector>

#include "likeiper/big_real.hpp"
#include "likeiper/constants.hpp"
#include "likeiper/power_series.hpp"
#include "likeiper/stieltjes.hpp"

namespace likeiper {

namespace detail {

inline void require_positive_order(int n_max, const char* what) {
  if (n_max < 1) throw std::invalid_argument(std::string(what) + ": n_max must be >= 1");
}

}  // namespace detail

/// Series whose z^n coefficient is lambda_tiny(n)/n, n = 0..n_max.
/// Needs gamma_0..gamma_{n_max-1}.
inline PowerSeries<BigReal> tiny_series(int n_max, int digits, const StieltjesTable& stieltjes) {
  detail::require_positive_order(n_max, "tiny_series");
  stieltjes.at(n_max - 1);
  if (stieltjes.working_digits() < digits || stieltjes.digits() < digits) {
    throw DataError("Stieltjes table holds " + std::to_string(std::min(stieltjes.digits(), stieltjes.working_digits())) +
                    " digits, " + std::to_string(digits) + " requested");
  }
  // (s-1) zeta(s) = 1 + sum_k (-1)^k gamma_k u^(k+1) / k!
  auto u_series = PowerSeries<BigReal>::zero(n_max, BigReal(0L, digits));
  u_series[0] = BigReal(1L, digits);
  mpz_class fact = 1;
  for (int k = 0; k < n_max; ++k) {
    if (k > 0) fact *= k;
    BigReal c = stieltjes.at(k).with_digits(digits) / BigReal(fact, digits);
    u_series[k + 1] = (k % 2 == 0) ? c : -c;
  }
  return series_log(series_compose_zmap(u_series));
}

/// Series whose z^n coefficient is lambda_trend(n)/n, n = 0..n_max.
inline PowerSeries<BigReal> trend_series(int n_max, int digits) {
  detail::require_positive_order(n_max, "trend_series");
  // log(1+u) - ((1+u)/2) log(pi) + log Gamma((1+u)/2); the constant terms
  // cancel since Gamma(1/2) = sqrt(pi).
  const BigReal half_log_pi = log(pi(digits)) / 2L;
  auto u_series = PowerSeries<BigReal>::zero(n_max, BigReal(0L, digits));
  mpz_class fact = 1;
  mpz_class two_pow = 1;
  for (int k = 1; k <= n_max; ++k) {
    fact *= k;
    two_pow *= 2;
    BigReal c = BigReal(1L, digits) / static_cast<long>(k);
    if (k % 2 == 0) c = -c;
    c += polygamma_half(k - 1, digits) / BigReal(mpz_class(two_pow * fact), digits);
    if (k == 1) c -= half_log_pi;
    u_series[k] = std::move(c);
  }
  return series_compose_zmap(u_series);
}

struct LambdaRow {
  int n;
  BigReal trend;  ///< lambda_trend(n)
  BigReal tiny;   ///< lambda_tiny(n)
  BigReal total;  ///< trend + tiny
};

struct LambdaTable {
  int n_max;
  int digits;
  std::vector<LambdaRow> rows;  ///< rows[i] holds n = i + 1

  const LambdaRow& row(int n) const { return rows.at(static_cast<std::size_t>(n - 1)); }

  /// Sequences indexed from 0 with the lambda(0) = 0 convention, ready to be
  /// used as recurrence histories.
  std::vector<BigReal> totals() const { return collect(&LambdaRow::total); }
  std::vector<BigReal> tinies() const { return collect(&LambdaRow::tiny); }
  std::vector<BigReal> trends() const { return collect(&LambdaRow::trend); }

 private:
  std::vector<BigReal> collect(BigReal LambdaRow::*field) const {
    std::vector<BigReal> out;
    out.reserve(rows.size() + 1);
    out.emplace_back(0L, digits);
    for (const auto& r : rows) out.push_back(r.*field);
    return out;
  }
};

inline LambdaTable lambda_table(int n_max, int digits, const StieltjesTable& stieltjes) {
  const auto tiny = tiny_series(n_max, digits, stieltjes);
  const auto trend = trend_series(n_max, digits);
  LambdaTable t{n_max, digits, {}};
  t.rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    BigReal tr = trend[n] * static_cast<long>(n);
    BigReal ti = tiny[n] * static_cast<long>(n);
    BigReal total = tr + ti;
    t.rows.push_back({n, std::move(tr), std::move(ti), std::move(total)});
  }
  return t;
}

/// Koebe-perturbation view of the tiny part. With gamma = lambda_tiny(1):
///   a[n] = lambda_tiny(n) / (n gamma)       (a[0] = 0, a[1] = 1 exactly)
///   psi  = (1/gamma) Psi(z), psi[m] = (l(m+1) - 2 l(m) + l(m-1)) / gamma
/// with l = lambda_tiny and l(0) = l(-1) = 0, so that K(z) psi(z) has z^n
/// coefficient n a[n].
struct CoeffDecomposition {
  std::vector<BigReal> a;
  PowerSeries<BigReal> psi;
};

inline CoeffDecomposition psi_perturbation(int n_max, int digits, const StieltjesTable& stieltjes) {
  detail::require_positive_order(n_max, "psi_perturbation");
  const auto tiny = tiny_series(n_max + 1, digits, stieltjes);
  std::vector<BigReal> lam;  // lam[n] = lambda_tiny(n), lam[0] = 0
  lam.reserve(static_cast<std::size_t>(n_max) + 2);
  for (int n = 0; n <= n_max + 1; ++n) lam.push_back(tiny[n] * static_cast<long>(n));
  lam[0] = BigReal(0L, digits);
  const BigReal& gamma = lam[1];

  std::vector<BigReal> a;
  a.reserve(static_cast<std::size_t>(n_max) + 1);
  a.emplace_back(0L, digits);
  a.emplace_back(1L, digits);
  for (int n = 2; n <= n_max; ++n) a.push_back(lam[n] / (gamma * static_cast<long>(n)));

  auto psi = PowerSeries<BigReal>::zero(n_max, BigReal(0L, digits));
  for (int m = 0; m <= n_max; ++m) {
    BigReal v = lam[m + 1] - lam[m] * 2L;
    if (m >= 1) v += lam[m - 1];
    psi[m] = v / gamma;
  }
  return {std::move(a), std::move(psi)};
}

struct ScanRow {
  int n;
  BigReal ratio;  ///< lambda_tiny(n) / (n gamma)
  bool within_bound;
};

/// Checks |lambda_tiny(n)/(n gamma)| <= 1 for n = 1..n_max.
inline std::vector<ScanRow> conjecture_scan(int n_max, int digits, const StieltjesTable& stieltjes) {
  const auto tiny = tiny_series(n_max, digits, stieltjes);
  const BigReal& gamma = tiny[1];
  std::vector<ScanRow> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    BigReal r = (n == 1) ? BigReal(1L, digits) : tiny[n] / gamma;
    const bool ok = abs(r) <= 1L;
    out.push_back({n, std::move(r), ok});
  }
  return out;
}

}  // namespace likeiper
