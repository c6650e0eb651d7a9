#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace likeiper {

/// Exact C(n, k). Throws std::out_of_range unless 0 <= k <= n.
inline mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::out_of_range("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                            "): need 0 <= k <= n");
  }
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Pascal triangle of exact integers, rows 0..max_n, built by the additive
/// recurrence.
class BinomialTable {
 public:
  explicit BinomialTable(int max_n) {
    if (max_n < 0) throw std::invalid_argument("BinomialTable: max_n must be >= 0");
    rows_.reserve(static_cast<std::size_t>(max_n) + 1);
    rows_.push_back({mpz_class(1)});
    for (int n = 1; n <= max_n; ++n) {
      const auto& prev = rows_.back();
      std::vector<mpz_class> row(static_cast<std::size_t>(n) + 1);
      row.front() = 1;
      row.back() = 1;
      for (int k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k];
      rows_.push_back(std::move(row));
    }
  }

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

  const mpz_class& operator()(int n, int k) const {
    if (n < 0 || n > max_n() || k < 0 || k > n) {
      throw std::out_of_range("BinomialTable(" + std::to_string(n) + ", " + std::to_string(k) +
                              ") outside table of " + std::to_string(max_n()) + " rows");
    }
    return rows_[n][k];
  }

  const std::vector<mpz_class>& row(int n) const { return rows_.at(n); }

 private:
  std::vector<std::vector<mpz_class>> rows_;
};

}  // namespace likeiper
