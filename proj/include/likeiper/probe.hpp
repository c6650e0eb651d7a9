#pragma once

// Sampling of
//
//   f(s) = (1/gamma) s (s-1) d/ds log((s-1) zeta(s))
//
// along straight lines of the s-plane, with a sampled-injectivity diagnostic.
// With s = 1/(1-z) the Taylor coefficients of f are lambda_tiny(n)/gamma, so
// f is the tiny-part analogue of the Koebe function.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "likeiper/bernoulli.hpp"
#include "likeiper/big_complex.hpp"
#include "likeiper/big_real.hpp"
#include "likeiper/constants.hpp"

namespace likeiper {

class ZeroProximityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline BigComplex zeta_em(const BigComplex& s, int wp, long n_cut, bool& diverged) {
  diverged = false;
  BigComplex sum(0L, wp);
  for (long n = 1; n < n_cut; ++n) sum += int_pow_neg(log(BigReal(n, wp)), s);

  const BigReal big_n(n_cut, wp);
  const BigComplex n_pow = int_pow_neg(log(big_n), s);  // N^-s
  sum += n_pow * big_n / (s - 1L);
  sum += n_pow / 2L;

  // factor_j = s(s+1)...(s+2j-2) / (2j)! * N^(-s-2j+1)
  BigComplex factor = n_pow * s / (big_n * 2L);
  const BigReal inv_n2 = BigReal(1L, wp) / (big_n * big_n);
  const BigReal eps = pow10(-(wp + 2), wp);
  BigReal prev(0L, wp);
  for (int j = 1; j < 4 * wp; ++j) {
    const BigComplex term = factor * BigReal(bernoulli_even(j), wp);
    const BigReal mag = abs(term);
    sum += term;
    if (mag < eps) return sum;
    if (j > 4 && mag > prev) break;
    prev = mag;
    factor *= (s + (2L * j - 1)) * (s + 2L * j);
    factor /= (2L * j + 1) * (2L * j + 2);
    factor *= inv_n2;
  }
  diverged = true;
  return sum;
}

}  // namespace detail

/// zeta(s) by Euler-Maclaurin summation, s != 1.
inline BigComplex zeta_complex(const BigComplex& s, int digits) {
  if (s.im.is_zero() && s.re == 1L) throw std::domain_error("zeta_complex: pole at s = 1");
  // Extra digits cover the cancellation in the direct sum for Re s < 1.
  const int wp = digits + 15;
  const BigComplex sw = s.with_digits(wp);
  const double mod = abs(s).to_double();
  long n_cut = digits / 2 + static_cast<long>(std::ceil(mod / 2)) + 10;
  for (int attempt = 0; attempt < 5; ++attempt, n_cut *= 2) {
    bool diverged = false;
    BigComplex z = detail::zeta_em(sw, wp, n_cut, diverged);
    if (!diverged) return z.with_digits(digits);
  }
  throw std::runtime_error("zeta_complex: Euler-Maclaurin did not converge");
}

inline BigReal zeta_real(const BigReal& s, int digits) {
  return zeta_complex(BigComplex(s.with_digits(digits)), digits).re;
}

/// f(s) at `digits` digits.
///
/// g(s) = (s-1) zeta(s) is entire, so f = (1/gamma) s (s-1) g'/g. g' comes
/// from central differences at step h = 10^(-digits/2) and h/2 with one
/// Richardson step, all at doubled working precision. Within 10^(-digits/4)
/// of s = 1 the removable singularity is replaced by f = s (s-1) + O((s-1)^2).
/// Throws ZeroProximityError where |zeta(s)| < 10^(-digits/2).
inline BigComplex f_eval(const BigComplex& s, int digits) {
  const int wp = 2 * digits;
  const BigComplex sw = s.with_digits(wp);
  const BigComplex u = sw - 1L;
  const BigReal mod_u = abs(u);
  if (mod_u < pow10(-(digits / 4), wp)) return (sw * u).with_digits(digits);

  const auto g = [&](const BigComplex& x) { return (x - 1L) * zeta_complex(x, wp); };
  const BigComplex zeta_s = zeta_complex(sw, wp);
  if (abs(zeta_s) < pow10(-(digits / 2), wp)) {
    throw ZeroProximityError("f_eval: |zeta(s)| < 1e-" + std::to_string(digits / 2) + " at s = " +
                             s.re.to_fixed(6) + (s.im.sign() < 0 ? " - " : " + ") + abs(s.im).to_fixed(6) + "i");
  }
  const BigComplex g_s = u * zeta_s;
  const BigReal h = pow10(-(digits / 2), wp);
  const BigReal h2 = h / 2L;
  const auto central = [&](const BigReal& step) {
    BigComplex plus = sw;
    plus.re += step;
    BigComplex minus = sw;
    minus.re -= step;
    return (g(plus) - g(minus)) / (step * 2L);
  };
  const BigComplex d1 = central(h);
  const BigComplex d2 = central(h2);
  const BigComplex dg = (d2 * 4L - d1) / 3L;
  const BigReal gamma = euler_gamma(wp);
  return (sw * u * dg / g_s / gamma).with_digits(digits);
}

/// Taylor coefficients c_0..c_n_max of f(1/(1-z)) by the discrete Cauchy
/// integral on |z| = radius with `points` nodes. Expected: c_n =
/// lambda_tiny(n)/gamma.
inline std::vector<BigReal> f_taylor_coefficients(int n_max, int digits, int points = 64, double radius = 0.5) {
  if (n_max < 0 || points <= 2 * n_max) throw std::invalid_argument("f_taylor_coefficients: need points > 2 n_max");
  const int wp = digits + 5;
  const BigReal r(radius, wp);
  const BigReal two_pi = pi(wp) * 2L;
  std::vector<BigComplex> values;
  values.reserve(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) {
    const BigReal theta = two_pi * static_cast<long>(j) / static_cast<long>(points);
    const BigComplex z(r * cos(theta), r * sin(theta));
    const BigComplex s = BigComplex(1L, wp) / (BigComplex(1L, wp) - z);
    values.push_back(f_eval(s, digits).with_digits(wp));
  }
  std::vector<BigReal> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    BigComplex acc(0L, wp);
    for (int j = 0; j < points; ++j) {
      const BigReal theta = -(two_pi * (static_cast<long>(j) * n % points)) / static_cast<long>(points);
      acc += values[j] * BigComplex(cos(theta), sin(theta));
    }
    out.push_back((acc.re / static_cast<long>(points) / pow(r, static_cast<long>(n))).with_digits(digits));
  }
  return out;
}

enum class LineKind { kVaryRe, kVaryIm };

inline const char* line_kind_name(LineKind k) { return k == LineKind::kVaryRe ? "vary_re" : "vary_im"; }

struct LineSpec {
  LineKind kind;
  BigReal fixed;  ///< Im s for vary_re, Re s for vary_im
  BigReal lo;
  BigReal hi;
  int samples;
  int digits = 30;
  double tol = 1e-6;
};

struct ProbeSample {
  BigReal param;
  BigComplex s;
  std::optional<BigComplex> f;
  std::string issue;  ///< why f is missing
};

struct Collision {
  int i;
  int j;
  double distance;
};

struct ProbeReport {
  LineSpec spec;
  std::vector<ProbeSample> samples;
  std::vector<Collision> collisions;
  int failures = 0;
  bool re_monotone = false;  ///< Re f strictly monotone over evaluated samples
  bool im_monotone = false;
  bool sampled_injective() const { return collisions.empty(); }
};

namespace detail {

inline bool strictly_monotone(const std::vector<double>& v) {
  if (v.size() < 2) return true;
  bool up = true, down = true;
  for (std::size_t k = 1; k < v.size(); ++k) {
    up = up && v[k] > v[k - 1];
    down = down && v[k] < v[k - 1];
  }
  return up || down;
}

}  // namespace detail

/// Samples f on a uniform grid of `samples` points over [lo, hi] and flags
/// every non-adjacent pair with |f(s1) - f(s2)| < tol. Failed evaluations
/// are recorded per sample and excluded from the diagnostic.
inline ProbeReport line_probe(const LineSpec& spec) {
  if (spec.samples < 2) throw std::invalid_argument("line_probe: samples must be >= 2");
  if (!(spec.hi > spec.lo)) throw std::invalid_argument("line_probe: empty range");
  const int d = spec.digits;
  ProbeReport rep{spec, {}, {}, 0, false, false};
  rep.samples.reserve(static_cast<std::size_t>(spec.samples));
  const BigReal lo = spec.lo.with_digits(d);
  const BigReal width = spec.hi.with_digits(d) - lo;
  const BigReal fixed = spec.fixed.with_digits(d);
  for (int i = 0; i < spec.samples; ++i) {
    BigReal p = lo + width * static_cast<long>(i) / static_cast<long>(spec.samples - 1);
    BigComplex s = spec.kind == LineKind::kVaryRe ? BigComplex(p, fixed) : BigComplex(fixed, p);
    ProbeSample sample{std::move(p), std::move(s), std::nullopt, {}};
    try {
      sample.f = f_eval(sample.s, d);
    } catch (const std::exception& e) {
      sample.issue = e.what();
      ++rep.failures;
    }
    rep.samples.push_back(std::move(sample));
  }

  std::vector<int> idx;
  std::vector<double> re, im;
  for (int i = 0; i < spec.samples; ++i) {
    const auto& f = rep.samples[i].f;
    if (!f) continue;
    idx.push_back(i);
    re.push_back(f->re.to_double());
    im.push_back(f->im.to_double());
  }
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[b] - idx[a] <= 1) continue;
      const double dist = std::hypot(re[a] - re[b], im[a] - im[b]);
      if (dist < spec.tol) rep.collisions.push_back({idx[a], idx[b], dist});
    }
  }
  rep.re_monotone = detail::strictly_monotone(re);
  rep.im_monotone = detail::strictly_monotone(im);
  return rep;
}

}  // namespace likeiper
