#pragma once

// Sums over nontrivial zeros rho = 1/2 + i t_k, using ordinates read from a
// data file.
//
//   Z(j) = sum_k 1/(1/4 + t_k^2)^j
//
// The omitted tail beyond the last ordinate T is bounded with the smooth zero
// density dN = (1/2pi) log(t/2pi) dt:
//
//   int_T^inf (1/2pi) log(t/2pi) t^(-2j) dt
//       = T^(1-2j) / (2pi (2j-1)) * (log(T/2pi) + 1/(2j-1)),
//
// times a safety factor of 2 for the fluctuation of the zero count around the
// smooth density.

#include <string>
#include <utility>
#include <vector>

#include "likeiper/big_real.hpp"
#include "likeiper/binomial.hpp"
#include "likeiper/data_file.hpp"
#include "likeiper/lambda.hpp"

namespace likeiper {

inline constexpr long kTailSafetyFactor = 2;

class ZeroList {
 public:
  ZeroList(std::vector<BigReal> ordinates, int digits, std::string source)
      : t_(std::move(ordinates)), digits_(digits), source_(std::move(source)) {
    if (t_.empty()) throw ValidationError("zero list is empty");
    if (!(t_.front() > BigReal("14.1", t_.front().digits()) && t_.front() < BigReal("14.2", t_.front().digits()))) {
      throw ValidationError("first ordinate " + t_.front().to_fixed(6) + " outside (14.1, 14.2)");
    }
    for (std::size_t k = 1; k < t_.size(); ++k) {
      if (!(t_[k] > t_[k - 1])) {
        throw ValidationError("ordinates not strictly increasing at k = " + std::to_string(k + 1));
      }
    }
    if (t_.size() < 10) {
      warnings_.push_back("only " + std::to_string(t_.size()) +
                          " ordinates: the tail bound dominates the partial sums");
    }
  }

  int count() const { return static_cast<int>(t_.size()); }
  const std::vector<BigReal>& ordinates() const { return t_; }
  const BigReal& last() const { return t_.back(); }
  int digits() const { return digits_; }
  int working_digits() const { return t_.front().digits(); }
  const std::string& source() const { return source_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// The first `count` ordinates.
  ZeroList prefix(int count) const {
    if (count < 1 || count > this->count()) throw std::out_of_range("ZeroList::prefix: bad count");
    return ZeroList(std::vector<BigReal>(t_.begin(), t_.begin() + count), digits_, source_);
  }

 private:
  std::vector<BigReal> t_;
  int digits_;
  std::string source_;
  std::vector<std::string> warnings_;
};

inline ZeroList parse_zeros(std::string_view text, int digits, const std::string& name = "<zeros>") {
  IndexedFile f = parse_indexed(text, 1, name);
  auto values = to_reals(f, digits, name);
  try {
    return ZeroList(std::move(values), f.digits > 0 ? f.digits : digits, f.source);
  } catch (const ValidationError& e) {
    throw ValidationError(name + ": " + e.what());
  }
}

inline ZeroList load_zeros(const std::string& path, int digits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_zeros(ss.str(), digits, path);
}

/// sum_{k=1..count} (1/4 + t_k^2)^(-j), ascending k.
inline BigReal z_partial(int j, const ZeroList& zeros, int digits) {
  if (j < 1) throw std::invalid_argument("z_partial: j must be >= 1");
  BigReal sum(0L, digits);
  const BigReal quarter = BigReal(1L, digits) / 4L;
  for (const auto& t : zeros.ordinates()) {
    const BigReal tt = t.with_digits(digits);
    sum += pow(quarter + tt * tt, -static_cast<long>(j));
  }
  return sum;
}

/// Bound on sum over zeros with ordinate above `cutoff` of (1/4+t^2)^(-j).
inline BigReal z_tail_bound(int j, const BigReal& cutoff) {
  if (j < 1) throw std::invalid_argument("z_tail_bound: j must be >= 1");
  const int d = cutoff.digits();
  const long p1 = 2L * j - 1;
  const BigReal two_pi = pi(d) * 2L;
  const BigReal integral =
      pow(cutoff, -p1) / (two_pi * p1) * (log(cutoff / two_pi) + BigReal(1L, d) / p1);
  return integral * kTailSafetyFactor;
}

/// Tail bound beyond the last ordinate of `zeros`; an empty prefix would use
/// the height 14 below the first zero.
inline BigReal z_tail_bound(int j, const ZeroList& zeros) { return z_tail_bound(j, zeros.last()); }

/// Bound on the dropped remainder sum_rho (-1)^(n-1) rho^(-n) of the
/// full-history recurrence:
///   (1/2pi) (1/14)^(2n-1) (1/(2n-1)) (log(14/2pi) + 1/(2n-1)).
inline BigReal delta_bound(int n, int digits = kDefaultDigits) {
  if (n < 1) throw std::invalid_argument("delta_bound: n must be >= 1");
  const long p1 = 2L * n - 1;
  const BigReal fourteen(14L, digits);
  const BigReal two_pi = pi(digits) * 2L;
  return pow(fourteen, -p1) / (two_pi * p1) * (log(fourteen / two_pi) + BigReal(1L, digits) / p1);
}

struct InversionResult {
  int n;
  BigReal lhs;        ///< sum_{k=0..n} (-1)^(k+1) C(2n, n-k) lambda_k
  BigReal partial;    ///< z_partial(n) over the available zeros
  BigReal tail;       ///< z_tail_bound(n)
  BigReal allowance;  ///< rounding allowance for the lambda inputs
  BigReal gap;        ///< lhs - partial; the true value lies in [0, tail]
  bool consistent;    ///< |gap| <= tail + allowance
};

/// Binomial inversion of Z(n) in terms of lambda_0..lambda_n, checked
/// against the zero sum. lambda_0 = 0, so the k = 0 term vanishes.
inline InversionResult inversion_check(int n, const LambdaTable& lambdas, const ZeroList& zeros) {
  if (n < 1) throw std::invalid_argument("inversion_check: n must be >= 1");
  if (n > lambdas.n_max) {
    throw std::out_of_range("inversion_check: lambda table covers 1.." + std::to_string(lambdas.n_max) + ", need " +
                            std::to_string(n));
  }
  const int d = lambdas.digits;
  const auto lam = lambdas.totals();
  BigReal lhs(0L, d);
  mpz_class weight_sum = 0;
  for (int k = 1; k <= n; ++k) {
    const mpz_class w = binomial(2L * n, n - k);
    weight_sum += w;
    if (k % 2 == 1) {
      lhs += lam[k] * w;
    } else {
      lhs -= lam[k] * w;
    }
  }
  BigReal partial = z_partial(n, zeros, d);
  BigReal tail = z_tail_bound(n, zeros.last().with_digits(d));
  BigReal allowance = BigReal(weight_sum, d) * pow10(-d, d);
  BigReal gap = lhs - partial;
  const bool ok = abs(gap) <= tail + allowance;
  return {n, std::move(lhs), std::move(partial), std::move(tail), std::move(allowance), std::move(gap), ok};
}

}  // namespace likeiper
