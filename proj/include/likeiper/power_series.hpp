#pragma once

// Truncated power series in one variable with an explicit inclusive order.
// Coefficient k multiplies z^k. Binary operations require equal orders; the
// caller truncates first.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "likeiper/scalar.hpp"

namespace likeiper {

class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <Scalar T>
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw SeriesError("power series needs at least the constant term");
  }

  static PowerSeries zero(int order, const T& like) {
    if (order < 0) throw SeriesError("negative series order");
    return PowerSeries(std::vector<T>(static_cast<std::size_t>(order) + 1,
                                      scalar_traits<T>::zero_like(like)));
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  T& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  std::span<const T> coeffs() const { return c_; }

  PowerSeries truncated(int order) const {
    if (order < 0 || order > this->order()) {
      throw SeriesError("cannot truncate order " + std::to_string(this->order()) + " series to " +
                        std::to_string(order));
    }
    return PowerSeries(std::vector<T>(c_.begin(), c_.begin() + order + 1));
  }

 private:
  std::vector<T> c_;
};

namespace detail {

template <class T>
void require_same_order(const PowerSeries<T>& a, const PowerSeries<T>& b, const char* op) {
  if (a.order() != b.order()) {
    throw SeriesError(std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                      std::to_string(b.order()) + ")");
  }
}

template <class T>
bool is_unit_constant(const T& c) {
  if constexpr (scalar_traits<T>::exact) {
    return c == 1;
  } else {
    return abs(c - 1L) < pow10(-(c.digits() - 2), c.digits());
  }
}

}  // namespace detail

template <class T>
PowerSeries<T> operator+(const PowerSeries<T>& a, const PowerSeries<T>& b) {
  detail::require_same_order(a, b, "series_add");
  std::vector<T> out;
  out.reserve(a.coeffs().size());
  for (int k = 0; k <= a.order(); ++k) out.push_back(T(a[k] + b[k]));
  return PowerSeries<T>(std::move(out));
}

template <class T>
PowerSeries<T> operator-(const PowerSeries<T>& a, const PowerSeries<T>& b) {
  detail::require_same_order(a, b, "series_sub");
  std::vector<T> out;
  out.reserve(a.coeffs().size());
  for (int k = 0; k <= a.order(); ++k) out.push_back(T(a[k] - b[k]));
  return PowerSeries<T>(std::move(out));
}

template <class T>
PowerSeries<T> scaled(const PowerSeries<T>& a, const T& factor) {
  std::vector<T> out;
  out.reserve(a.coeffs().size());
  for (const T& c : a.coeffs()) out.push_back(T(c * factor));
  return PowerSeries<T>(std::move(out));
}

/// Cauchy product truncated at the common order.
template <class T>
PowerSeries<T> series_mul(const PowerSeries<T>& a, const PowerSeries<T>& b) {
  detail::require_same_order(a, b, "series_mul");
  const int n = a.order();
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    T acc = T(a[0] * b[k]);
    for (int i = 1; i <= k; ++i) acc = T(acc + a[i] * b[k - i]);
    out.push_back(std::move(acc));
  }
  return PowerSeries<T>(std::move(out));
}

template <class T>
PowerSeries<T> operator*(const PowerSeries<T>& a, const PowerSeries<T>& b) {
  return series_mul(a, b);
}

/// log(a) for a series with unit constant term, from (log a)' = a'/a.
/// The constant term of the result is exactly zero.
template <class T>
PowerSeries<T> series_log(const PowerSeries<T>& a) {
  if (!detail::is_unit_constant(a[0])) {
    throw SeriesError("series_log: constant term must be 1, got " + scalar_traits<T>::str(a[0]));
  }
  const int n = a.order();
  auto out = PowerSeries<T>::zero(n, a[0]);
  for (int m = 1; m <= n; ++m) {
    T acc = T(a[m] * scalar_traits<T>::from_int(m, a[0]));
    for (int k = 1; k < m; ++k) acc = T(acc - out[k] * a[m - k] * scalar_traits<T>::from_int(k, a[0]));
    out[m] = T(acc / (a[0] * scalar_traits<T>::from_int(m, a[0])));
  }
  return out;
}

/// Substitutes u = z/(1-z) = z + z^2 + ... into a series in u, by Horner's
/// scheme over truncated series. Same order in, same order out.
template <class T>
PowerSeries<T> series_compose_zmap(const PowerSeries<T>& a) {
  const int n = a.order();
  auto u = PowerSeries<T>::zero(n, a[0]);
  for (int k = 1; k <= n; ++k) u[k] = scalar_traits<T>::from_int(1, a[0]);

  auto acc = PowerSeries<T>::zero(n, a[0]);
  acc[0] = a[n];
  for (int j = n - 1; j >= 0; --j) {
    acc = series_mul(acc, u);
    acc[0] = T(acc[0] + a[j]);
  }
  return acc;
}

/// Term-by-term derivative; the order drops by one (a constant stays an
/// order-0 zero series).
template <class T>
PowerSeries<T> series_derivative(const PowerSeries<T>& a) {
  if (a.order() == 0) return PowerSeries<T>::zero(0, a[0]);
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(a.order()));
  for (int k = 1; k <= a.order(); ++k) out.push_back(T(a[k] * scalar_traits<T>::from_int(k, a[k])));
  return PowerSeries<T>(std::move(out));
}

/// K(z) = z/(1-z)^2 = z + 2z^2 + 3z^3 + ... truncated at `order` (>= 1).
template <class T>
PowerSeries<T> koebe_series(int order, const T& like) {
  if (order < 1) throw SeriesError("koebe_series: order must be >= 1");
  auto k = PowerSeries<T>::zero(order, like);
  for (int n = 1; n <= order; ++n) k[n] = scalar_traits<T>::from_int(n, like);
  return k;
}

inline PowerSeries<BigReal> koebe_series(int order, int digits = kDefaultDigits) {
  return koebe_series<BigReal>(order, BigReal(0L, digits));
}

}  // namespace likeiper
