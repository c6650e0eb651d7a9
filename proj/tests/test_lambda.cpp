#include <gtest/gtest.h>

#include "likeiper/binomial.hpp"
#include "likeiper/lambda.hpp"

using namespace likeiper;

namespace {

const std::string kStieltjes = std::string(LIKEIPER_DATA_DIR) + "/stieltjes.tsv";

const StieltjesTable& table() {
  static const StieltjesTable t = load_stieltjes(kStieltjes, 80);
  return t;
}

BigReal mpfr_zeta(long k, int d) {
  BigReal r(0L, d);
  mpfr_zeta_ui(r.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
  return r;
}

// lambda_trend(n) = 1 - (n/2)(gamma + log pi + 2 log 2)
//                   + sum_{m=2}^{n} (-1)^m C(n,m) (1 - 2^-m) zeta(m)
BigReal trend_oracle(int n, int d) {
  BigReal s = BigReal(1L, d) - (euler_gamma(d) + log(pi(d)) + log2_const(d) * 2L) * static_cast<long>(n) / 2L;
  for (long m = 2; m <= n; ++m) {
    BigReal t = (BigReal(1L, d) - pow(BigReal(2L, d), -m)) * mpfr_zeta(m, d) * binomial(n, m);
    s += (m % 2 == 0) ? t : -t;
  }
  return s;
}

// lambda_tiny(n)/n = sum_m l_m C(n-1, m-1), l_m the u-coefficients of
// log((s-1) zeta(s)); the log uses the n a_n = sum k b_k a_{n-k} recurrence
// on plain vectors.
std::vector<BigReal> tiny_oracle(int n_max, int d) {
  std::vector<BigReal> a(static_cast<std::size_t>(n_max) + 1, BigReal(0L, d));
  a[0] = BigReal(1L, d);
  mpz_class fact = 1;
  for (int k = 0; k < n_max; ++k) {
    if (k > 0) fact *= k;
    const BigReal c = table().at(k).with_digits(d) / BigReal(fact, d);
    a[k + 1] = (k % 2 == 0) ? c : -c;
  }
  std::vector<BigReal> l(a.size(), BigReal(0L, d));
  for (int n = 1; n <= n_max; ++n) {
    BigReal acc = a[n] * static_cast<long>(n);
    for (int k = 1; k < n; ++k) acc -= l[k] * static_cast<long>(k) * a[n - k];
    l[n] = acc / static_cast<long>(n);
  }
  std::vector<BigReal> out(a.size(), BigReal(0L, d));
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 1; m <= n; ++m) out[n] += l[m] * binomial(n - 1, m - 1);
    out[n] *= static_cast<long>(n);
  }
  return out;
}

}  // namespace

TEST(Lambda, FirstCoefficientClosedForm) {
  const int d = 50;
  const auto t = lambda_table(3, d, table());
  const BigReal g = euler_gamma(d);
  const BigReal expected = BigReal(1L, d) + g / 2L - log(pi(d) * 4L) / 2L;
  EXPECT_TRUE(agrees_to(t.row(1).total, expected, 48));
  EXPECT_TRUE(agrees_to(t.row(1).tiny, g, 48));
  EXPECT_EQ(t.row(1).total, t.row(1).trend + t.row(1).tiny);
}

TEST(Lambda, TrendMatchesZetaValueFormula) {
  const int d = 60;
  const auto tr = trend_series(40, d);
  for (int n = 1; n <= 40; ++n) {
    EXPECT_TRUE(agrees_to(tr[n] * static_cast<long>(n), trend_oracle(n, 90), 50)) << "n = " << n;
  }
}

TEST(Lambda, TinyMatchesBinomialComposition) {
  const int d = 60;
  const auto ti = tiny_series(40, d, table());
  const auto oracle = tiny_oracle(40, 80);
  for (int n = 1; n <= 40; ++n) {
    EXPECT_TRUE(agrees_to(ti[n] * static_cast<long>(n), oracle[n], 50)) << "n = " << n;
  }
}

TEST(Lambda, TotalsAreSumsOfParts) {
  const auto t = lambda_table(20, 40, table());
  for (const auto& r : t.rows) EXPECT_EQ(r.total, r.trend + r.tiny);
  const auto tot = t.totals();
  ASSERT_EQ(tot.size(), 21u);
  EXPECT_TRUE(tot[0].is_zero());
}

TEST(Lambda, SeriesCoefficients) {
  const auto ti = tiny_series(5, 40, table());
  EXPECT_EQ(ti[0].to_fixed(30), BigReal(0L, 40).to_fixed(30));
  EXPECT_EQ(ti[2].to_fixed(12), "0.483442548481");
  EXPECT_EQ(ti[5].to_fixed(12), "0.291653700039");
  const auto tr = trend_series(15, 40);
  EXPECT_EQ(tr[1].to_fixed(12), "-0.554119955935");
  EXPECT_EQ(tr[15].to_fixed_truncated(12), "0.273502730062");
}

TEST(Lambda, PrecisionStability) {
  const auto lo = lambda_table(32, 50, table());
  const auto hi = lambda_table(32, 80, table());
  for (int n = 1; n <= 32; ++n) {
    EXPECT_GE(agreeing_digits(lo.row(n).total.with_digits(80), hi.row(n).total), 45) << "n = " << n;
  }
}

TEST(Lambda, KoebeCoefficientsDecreaseBelowOne) {
  const auto dec = psi_perturbation(20, 40, table());
  EXPECT_EQ(dec.a[1], 1L);
  EXPECT_TRUE(dec.a[0].is_zero());
  EXPECT_EQ(dec.a[2].to_fixed_truncated(3), "0.837");
  for (int n = 2; n <= 20; ++n) {
    EXPECT_GT(dec.a[n], 0L);
    EXPECT_LT(dec.a[n], 1L);
    EXPECT_LT(dec.a[n], dec.a[n - 1]) << "n = " << n;
  }
}

TEST(Lambda, PsiReconstructsCoefficients) {
  const int n_max = 20;
  const auto dec = psi_perturbation(n_max, 40, table());
  EXPECT_TRUE(agrees_to(dec.psi[0], BigReal(1L, 40), 35));
  const auto prod = series_mul(koebe_series(n_max, 40), dec.psi);
  for (int n = 1; n <= n_max; ++n) {
    EXPECT_TRUE(agrees_to(prod[n], dec.a[n] * static_cast<long>(n), 35)) << "n = " << n;
  }
}

TEST(Lambda, TrendFollowsAsymptotics) {
  const auto tr = trend_series(32, 40);
  const auto c = FundamentalConstants::at(40);
  const BigReal n(32L, 40);
  const BigReal model = n * (log(n) / 2L + c.c_trend);
  const double ratio = (tr[32] * 32L / model).to_double();
  EXPECT_NEAR(ratio, 1.0, 0.15);
}

TEST(Lambda, ConjectureScanToSixtyFour) {
  const auto rows = conjecture_scan(64, 50, table());
  ASSERT_EQ(rows.size(), 64u);
  for (const auto& r : rows) EXPECT_TRUE(r.within_bound) << "n = " << r.n;
  EXPECT_EQ(rows[0].ratio, 1L);
  EXPECT_EQ(rows[4].ratio.to_fixed(4), "0.5053");
  EXPECT_EQ(rows[4].ratio.to_fixed_truncated(4), "0.5052");
  EXPECT_EQ(rows[9].ratio.to_fixed(4), "0.2293");
}

TEST(Lambda, CoverageAndPrecisionErrors) {
  const auto small = parse_stieltjes(
      "# digits: 40\n0\t0.5772156649015328606065120900824024310421593359399235988\n"
      "1\t-0.07281584548367672486058637587490131913773633833438\n",
      40);
  EXPECT_NO_THROW(tiny_series(2, 40, small));
  try {
    tiny_series(5, 40, small);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("gamma_4"), std::string::npos) << e.what();
  }
  EXPECT_THROW(tiny_series(2, 60, small), DataError);
  EXPECT_THROW(tiny_series(0, 40, small), std::invalid_argument);
}
