#include <gtest/gtest.h>

#include "likeiper/lambda.hpp"
#include "likeiper/probe.hpp"

using namespace likeiper;

namespace {

BigReal mpfr_zeta_real(const BigReal& s) {
  BigReal r(0L, s.digits());
  mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
  return r;
}

LineSpec line(LineKind kind, const char* fixed, const char* lo, const char* hi, int samples, int digits = 20) {
  return {kind, BigReal(fixed, digits), BigReal(lo, digits), BigReal(hi, digits), samples, digits};
}

}  // namespace

TEST(Zeta, KnownValues) {
  const int d = 40;
  EXPECT_TRUE(agrees_to(zeta_real(BigReal(2L, d), d), pi(d) * pi(d) / 6L, 20));
  EXPECT_TRUE(agrees_to(zeta_real(BigReal(0L, d), d), BigReal("-0.5", d), 20));
  EXPECT_TRUE(agrees_to(zeta_real(BigReal(-1L, d), d), BigReal(-1L, d) / 12L, 20));
}

TEST(Zeta, RealLineMatchesIntegerEvaluation) {
  for (long k : {2L, 3L, 4L}) {
    EXPECT_TRUE(agrees_to(zeta_real(BigReal(k, 40), 40), zeta_int(k, 40), 30)) << "k = " << k;
  }
  for (const char* s : {"0.3", "0.75", "1.5", "2.5", "7.25"}) {
    EXPECT_TRUE(agrees_to(zeta_real(BigReal(s, 40), 40), mpfr_zeta_real(BigReal(s, 60)), 30)) << s;
  }
}

TEST(Zeta, NearFirstZeroAndConjugateSymmetry) {
  const int d = 30;
  const BigComplex s(BigReal("0.5", d), BigReal("14.134725", d));
  EXPECT_LT(abs(zeta_complex(s, d)), BigReal("1e-4", d));
  const BigComplex w(BigReal("0.8", d), BigReal("23.5", d));
  const BigComplex a = zeta_complex(w, d);
  const BigComplex b = zeta_complex(BigComplex(w.re, -w.im), d);
  EXPECT_TRUE(agrees_to(a.re, b.re, 25));
  EXPECT_TRUE(agrees_to(a.im, -b.im, 25));
}

TEST(Zeta, PoleRejected) { EXPECT_THROW(zeta_complex(BigComplex(1L, 30), 30), std::domain_error); }

TEST(FEval, AtTwoMatchesFiniteDifferenceOracle) {
  const int d = 30;
  const int hp = 120;
  const BigReal two(2L, hp);
  const BigReal h = pow10(-30, hp);
  const BigReal zp = (mpfr_zeta_real(two + h) - mpfr_zeta_real(two - h)) / (h * 2L);
  const BigReal expected = (BigReal(1L, hp) + zp / mpfr_zeta_real(two)) * 2L / euler_gamma(hp);
  const BigComplex f = f_eval(BigComplex(2L, d), d);
  EXPECT_TRUE(agrees_to(f.re, expected.with_digits(d), 20));
  EXPECT_TRUE(agrees_to(f.im, BigReal(0L, d), 20));
}

TEST(FEval, RemovableSingularityAtOne) {
  const int d = 30;
  EXPECT_TRUE(f_eval(BigComplex(1L, d), d).re.is_zero());
  const BigReal delta("1e-4", d);
  const BigComplex f = f_eval(BigComplex(BigReal(1L, d) + delta, BigReal(0L, d)), d);
  EXPECT_NEAR((f.re / delta).to_double(), 1.0, 1e-3);
}

TEST(FEval, TaylorCoefficientsAreTinyRatios) {
  const int d = 30;
  const auto c = f_taylor_coefficients(6, d);
  const auto st = load_stieltjes(std::string(LIKEIPER_DATA_DIR) + "/stieltjes.tsv", d);
  const auto tiny = tiny_series(6, d, st);
  EXPECT_LT(abs(c[0]), BigReal("1e-12", d));
  EXPECT_TRUE(agrees_to(c[1], BigReal(1L, d), 12));
  for (int n = 1; n <= 6; ++n) {
    EXPECT_TRUE(agrees_to(c[n], tiny[n] * static_cast<long>(n) / tiny[1], 12)) << "n = " << n;
  }
}

TEST(FEval, FlagsZeroProximity) {
  const int d = 20;
  const BigComplex rho(BigReal("0.5", d), BigReal("14.13472514173469379045725198356247027078", d));
  EXPECT_THROW(f_eval(rho, d), ZeroProximityError);
}

TEST(LineProbe, RealDirectionAtHeightOne) {
  const auto rep = line_probe(line(LineKind::kVaryRe, "1", "1", "10", 200));
  EXPECT_TRUE(rep.sampled_injective());
  EXPECT_EQ(rep.failures, 0);
  EXPECT_TRUE(rep.re_monotone);
  EXPECT_EQ(rep.samples.size(), 200u);
}

TEST(LineProbe, ImaginaryDirectionShortRange) {
  const auto rep = line_probe(line(LineKind::kVaryIm, "1", "0", "4.5", 100));
  EXPECT_TRUE(rep.sampled_injective());
  EXPECT_EQ(rep.failures, 0);
  EXPECT_TRUE(rep.samples.front().f->re.is_zero());  // s = 1
}

TEST(LineProbe, LargeToleranceProducesCollisions) {
  auto spec = line(LineKind::kVaryIm, "1", "0", "4.5", 40);
  spec.tol = 100;
  const auto rep = line_probe(spec);
  EXPECT_FALSE(rep.sampled_injective());
  for (const auto& c : rep.collisions) EXPECT_GT(c.j - c.i, 1);
}

TEST(LineProbe, ZeroOnLineIsRecordedNotFatal) {
  const auto rep = line_probe(line(LineKind::kVaryIm, "0.5", "14.13472514173469379045725198356247027078", "14.2", 3));
  EXPECT_EQ(rep.failures, 1);
  EXPECT_FALSE(rep.samples[0].f.has_value());
  EXPECT_FALSE(rep.samples[0].issue.empty());
  EXPECT_TRUE(rep.samples[1].f.has_value());
}

TEST(LineProbe, Deterministic) {
  const auto a = line_probe(line(LineKind::kVaryRe, "1", "1", "3", 20));
  const auto b = line_probe(line(LineKind::kVaryRe, "1", "1", "3", 20));
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_EQ(a.samples[i].f->re, b.samples[i].f->re);
    EXPECT_EQ(a.samples[i].f->im, b.samples[i].f->im);
  }
}

TEST(LineProbe, BadArguments) {
  EXPECT_THROW(line_probe(line(LineKind::kVaryRe, "1", "1", "3", 1)), std::invalid_argument);
  EXPECT_THROW(line_probe(line(LineKind::kVaryRe, "1", "3", "3", 5)), std::invalid_argument);
}
