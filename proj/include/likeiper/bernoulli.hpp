#pragma once

#include <gmpxx.h>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace likeiper {

namespace detail {

// Even-index Bernoulli numbers B_2, B_4, ..., B_{2n} from the tangent
// numbers (Brent-Harvey), all integer arithmetic until the final division.
inline std::vector<mpq_class> even_bernoulli(int n) {
  std::vector<mpz_class> t(static_cast<std::size_t>(n) + 1);
  if (n >= 1) t[1] = 1;
  for (int k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
  for (int k = 2; k <= n; ++k) {
    for (int j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  }
  std::vector<mpq_class> b(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    mpq_class v(mpz_class(2 * k) * t[k], four_k * (four_k - 1));
    v.canonicalize();
    b[k] = (k % 2 == 1) ? v : mpq_class(-v);
  }
  return b;
}

}  // namespace detail

/// B_{2k} as an exact rational, k >= 1. Cached and safe to call concurrently.
inline mpq_class bernoulli_even(int k) {
  if (k < 1) throw std::invalid_argument("bernoulli_even: k must be >= 1");
  static std::mutex mu;
  static std::vector<mpq_class> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(cache.size()) <= k) {
    int n = 64;
    while (n < k) n *= 2;
    cache = detail::even_bernoulli(n);
  }
  return cache[k];
}

}  // namespace likeiper
