#include <gtest/gtest.h>

#include <cmath>

#include "likeiper/probe.hpp"
#include "likeiper/zeros.hpp"

using namespace likeiper;

namespace {

const std::string kData = LIKEIPER_DATA_DIR;

const ZeroList& zeros() {
  static const ZeroList z = load_zeros(kData + "/zeros.tsv", 50);
  return z;
}

const LambdaTable& lambdas() {
  static const LambdaTable t = lambda_table(8, 50, load_stieltjes(kData + "/stieltjes.tsv", 50));
  return t;
}

}  // namespace

TEST(Zeros, ShippedFileIsValid) {
  const auto& z = zeros();
  EXPECT_GE(z.count(), 100);
  EXPECT_GE(z.digits(), 30);
  EXPECT_FALSE(z.source().empty());
  EXPECT_TRUE(z.warnings().empty());
  EXPECT_EQ(z.ordinates()[0].to_fixed(6), "14.134725");
}

TEST(Zeros, OrdinatesAreZerosOfZeta) {
  for (int k = 0; k < 10; ++k) {
    const BigComplex s(BigReal("0.5", 40), zeros().ordinates()[k].with_digits(40));
    EXPECT_LT(abs(zeta_complex(s, 40)), BigReal("1e-30", 40)) << "k = " << k + 1;
  }
}

TEST(Zeros, ValidationErrors) {
  EXPECT_THROW(parse_zeros("1\t13.9\n2\t21.0\n", 30), ValidationError);
  EXPECT_THROW(parse_zeros("1\t14.134725\n2\t21.022\n3\t21.0\n", 30), ValidationError);
  EXPECT_THROW(parse_zeros("1\t14.134725\n2\t14.134725\n", 30), ValidationError);
  EXPECT_THROW(parse_zeros("0\t14.134725\n", 30), ParseError);
}

TEST(Zeros, SingleZeroAcceptedWithWarning) {
  const auto z = parse_zeros("1\t14.134725141734693790457251983562\n", 30);
  EXPECT_EQ(z.count(), 1);
  ASSERT_EQ(z.warnings().size(), 1u);
  const double t = 14.134725141734693790;
  EXPECT_NEAR(z_partial(1, z, 30).to_double(), 1.0 / (0.25 + t * t), 1e-15);
  EXPECT_EQ(z_partial(1, z, 30).to_fixed(7), "0.0049990");
}

TEST(Zeros, PartialSumsShrinkWithJ) {
  for (int j = 1; j < 8; ++j) EXPECT_LT(z_partial(j + 1, zeros(), 50), z_partial(j, zeros(), 50));
}

TEST(Zeros, PartialSumsUnderFirstZeroBound) {
  const BigReal t1("14.134", 50);
  for (int j = 1; j <= 8; ++j) {
    EXPECT_LT(abs(z_partial(j, zeros(), 50)), pow(t1, -(2L * j - 1))) << "j = " << j;
  }
}

TEST(TailBound, ClosedFormAtHundred) {
  // antiderivative of (1/2pi) log(t/2pi) t^-2 is -(log(t/2pi) + 1)/(2pi t)
  const double T = 100, tp = 2 * M_PI;
  const double integral = (std::log(T / tp) + 1) / (tp * T);
  const BigReal b = z_tail_bound(1, BigReal(100L, 30));
  EXPECT_NEAR(b.to_double(), 2 * integral, 1e-15);
  EXPECT_LT(b, BigReal("0.02", 30));
  EXPECT_GT(b, 0L);
}

TEST(TailBound, WholeSumAtFourteen) {
  const BigReal b = z_tail_bound(5, BigReal(14L, 30));
  EXPECT_LT(b, BigReal("1e-11", 30));
  EXPECT_GT(b, BigReal("1e-13", 30));
  EXPECT_EQ(b, delta_bound(5, 30) * 2L);
}

TEST(TailBound, DecreasesInJ) {
  for (int j = 1; j < 10; ++j) EXPECT_LT(z_tail_bound(j + 1, zeros()), z_tail_bound(j, zeros()));
}

TEST(DeltaBound, Values) {
  EXPECT_LT(delta_bound(5), BigReal("1e-11", 30));
  EXPECT_GT(delta_bound(1), 0L);
  EXPECT_TRUE(delta_bound(1).is_finite());
  for (int n = 2; n < 20; ++n) EXPECT_LT(delta_bound(n + 1) / delta_bound(n), BigReal(1L, 30) / 196L);
  EXPECT_THROW(delta_bound(0), std::invalid_argument);
}

TEST(Inversion, ConsistentUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    const auto r = inversion_check(n, lambdas(), zeros());
    EXPECT_TRUE(r.consistent) << "n = " << n;
    // the omitted zeros only add, so the gap is non-negative
    EXPECT_GE(r.gap, -r.allowance) << "n = " << n;
  }
  EXPECT_LT(abs(inversion_check(5, lambdas(), zeros()).gap), BigReal("1e-11", 30));
}

TEST(Inversion, FirstBracketContainsLambdaOne) {
  const BigReal& l1 = lambdas().row(1).total;
  for (int count = 10; count <= zeros().count(); count += 10) {
    const auto z = zeros().prefix(count);
    const BigReal lo = z_partial(1, z, 50);
    EXPECT_LE(lo, l1) << count;
    EXPECT_GE(lo + z_tail_bound(1, z), l1) << count;
  }
}

TEST(Inversion, NeedsLambdaCoverage) {
  EXPECT_THROW(inversion_check(9, lambdas(), zeros()), std::out_of_range);
  EXPECT_THROW(inversion_check(0, lambdas(), zeros()), std::invalid_argument);
}
