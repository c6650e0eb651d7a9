#pragma once

// Discrete-derivative recurrences and the approximation schemes built on
// them. Histories are sequences indexed from 0 with h[0] = lambda(0) = 0.
//
//   order m       Delta^m h = 0 at the top index:
//                   h(n) = sum_{j=1..m} (-1)^(j+1) C(m,j) h(n-j)
//   full history  Delta^n h(0) = 0:
//                   h(n) = sum_{k=1..n-1} (-1)^(k-n+1) C(n,k) h(k)
//   Voros         h(n) = (-1)^(n+1) sum_{k=1..n-1} (-1)^k C(2n,n-k) h(k)
//
// Everything here is linear in the history and templated on the scalar so the
// same code runs in exact rational mode.

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "likeiper/big_real.hpp"
#include "likeiper/binomial.hpp"
#include "likeiper/constants.hpp"
#include "likeiper/scalar.hpp"

namespace likeiper {

class HistoryError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

namespace detail {

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

template <class T>
void require_history(std::span<const T> h, long needed_top, const char* who) {
  if (h.empty() || static_cast<long>(h.size()) <= needed_top) {
    throw HistoryError(std::string(who) + ": history must cover index " + std::to_string(needed_top) +
                       " (has " + std::to_string(h.size()) + " entries)");
  }
}

template <class T>
void add_signed(T& acc, const T& x, const mpz_class& weight, int sign) {
  if (sign > 0) {
    acc = T(acc + x * weight);
  } else {
    acc = T(acc - x * weight);
  }
}

}  // namespace detail

/// m-th forward difference at `base`: sum_{k=0..m} (-1)^k C(m,k) f(base+m-k).
template <Scalar T>
T discrete_derivative(std::span<const T> f, int m, int base = 0) {
  if (m < 0 || base < 0) throw std::invalid_argument("discrete_derivative: m and base must be >= 0");
  detail::require_history(f, static_cast<long>(base) + m, "discrete_derivative");
  T acc = scalar_traits<T>::zero_like(f[0]);
  for (int k = 0; k <= m; ++k) detail::add_signed(acc, f[base + m - k], binomial(m, k), detail::sign_pow(k));
  return acc;
}

/// Prediction of h(n) from Delta^m = 0. Indices below 0 count as 0, so only
/// h[max(0, n-m) .. n-1] is read.
template <Scalar T>
T predict_order_m(std::span<const T> h, int n, int m) {
  if (m < 1) throw std::invalid_argument("predict_order_m: order must be >= 1");
  if (n < 1) throw std::invalid_argument("predict_order_m: n must be >= 1");
  detail::require_history(h, n - 1, "predict_order_m");
  T acc = scalar_traits<T>::zero_like(h[0]);
  for (int j = 1; j <= m && n - j >= 0; ++j) detail::add_signed(acc, h[n - j], binomial(m, j), detail::sign_pow(j + 1));
  return acc;
}

/// Full-history prediction (Delta^n h(0) = 0 with the zero-sum remainder
/// dropped). Reads h[1..n-1].
template <Scalar T>
T predict_full_history(std::span<const T> h, int n) {
  if (n < 1) throw std::invalid_argument("predict_full_history: n must be >= 1");
  detail::require_history(h, n - 1, "predict_full_history");
  T acc = scalar_traits<T>::zero_like(h[0]);
  for (int k = 1; k < n; ++k) detail::add_signed(acc, h[k], binomial(n, k), detail::sign_pow(k - n + 1));
  return acc;
}

/// Voros-type prediction with weights C(2n, n-k). Reads h[1..n-1].
template <Scalar T>
T predict_voros(std::span<const T> h, int n) {
  if (n < 1) throw std::invalid_argument("predict_voros: n must be >= 1");
  detail::require_history(h, n - 1, "predict_voros");
  T acc = scalar_traits<T>::zero_like(h[0]);
  for (int k = 1; k < n; ++k) {
    detail::add_signed(acc, h[k], binomial(2L * n, n - k), detail::sign_pow(k + n + 1));
  }
  return acc;
}

enum class SchemeKind { kOrderM, kFullHistory, kVoros };

struct RecurrenceScheme {
  SchemeKind kind = SchemeKind::kFullHistory;
  int m = 0;  ///< only for kOrderM, >= 2

  static RecurrenceScheme order_m(int m) {
    if (m < 2) throw std::invalid_argument("ORDER_M scheme requires m >= 2");
    return {SchemeKind::kOrderM, m};
  }
  static RecurrenceScheme full_history() { return {SchemeKind::kFullHistory, 0}; }
  static RecurrenceScheme voros() { return {SchemeKind::kVoros, 0}; }

  /// CLI names: a1 = order 2, b = order 3, d = full history, a2 = Voros,
  /// m:k = order k.
  static RecurrenceScheme parse(const std::string& name) {
    if (name == "a1") return order_m(2);
    if (name == "b") return order_m(3);
    if (name == "d") return full_history();
    if (name == "a2") return voros();
    if (name.starts_with("m:")) {
      std::size_t used = 0;
      int k = 0;
      try {
        k = std::stoi(name.substr(2), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != name.size() - 2) throw std::invalid_argument("bad scheme order in '" + name + "'");
      return order_m(k);
    }
    throw std::invalid_argument("unknown scheme '" + name + "' (expected a1, b, d, a2 or m:k)");
  }

  std::string name() const {
    switch (kind) {
      case SchemeKind::kOrderM:
        return "m:" + std::to_string(m);
      case SchemeKind::kFullHistory:
        return "d";
      case SchemeKind::kVoros:
        return "a2";
    }
    return "?";
  }

  friend bool operator==(const RecurrenceScheme&, const RecurrenceScheme&) = default;
};

template <Scalar T>
T predict(const RecurrenceScheme& s, std::span<const T> h, int n) {
  switch (s.kind) {
    case SchemeKind::kOrderM:
      return predict_order_m(h, n, s.m);
    case SchemeKind::kFullHistory:
      return predict_full_history(h, n);
    case SchemeKind::kVoros:
      return predict_voros(h, n);
  }
  throw std::logic_error("unreachable scheme kind");
}

struct PredictionResult {
  int n;
  BigReal predicted;
  std::optional<BigReal> exact;
  std::optional<BigReal> abs_error;  ///< |predicted - exact|
  std::optional<BigReal> rel_error;  ///< abs_error / |exact|
};

inline PredictionResult make_result(int n, BigReal predicted, std::optional<BigReal> exact) {
  PredictionResult r{n, std::move(predicted), std::move(exact), std::nullopt, std::nullopt};
  if (r.exact) {
    r.abs_error = abs(r.predicted - *r.exact);
    if (!r.exact->is_zero()) r.rel_error = *r.abs_error / abs(*r.exact);
  }
  return r;
}

/// Exact-history mode: every prediction for n in [n_from, n_to] reads the
/// true values below n.
inline std::vector<PredictionResult> run_exact_history(const RecurrenceScheme& s, std::span<const BigReal> exact,
                                                       int n_from, int n_to) {
  if (n_from < 1 || n_to >= static_cast<int>(exact.size()) + 1) {
    throw HistoryError("run_exact_history: exact values must cover 0.." + std::to_string(n_to - 1));
  }
  std::vector<PredictionResult> out;
  for (int n = n_from; n <= n_to; ++n) {
    std::optional<BigReal> truth;
    if (n < static_cast<int>(exact.size())) truth = exact[n];
    out.push_back(make_result(n, predict(s, exact.first(static_cast<std::size_t>(n)), n), std::move(truth)));
  }
  return out;
}

/// Self-seeded mode: starts from lambda(0) = 0, lambda(1) and, when `c` is
/// given, lambda(2) = c lambda(1); every later value is the scheme's own
/// prediction. Returns the sequence indexed 0..n_max.
template <Scalar T>
std::vector<T> self_seeded_run(const RecurrenceScheme& s, const T& lambda1, const std::optional<T>& c, int n_max) {
  if (n_max < 1) throw std::invalid_argument("self_seeded_run: n_max must be >= 1");
  std::vector<T> h;
  h.reserve(static_cast<std::size_t>(n_max) + 1);
  h.push_back(scalar_traits<T>::zero_like(lambda1));
  h.push_back(lambda1);
  if (c && n_max >= 2) h.push_back(T(*c * lambda1));
  for (int n = static_cast<int>(h.size()); n <= n_max; ++n) {
    T next = predict(s, std::span<const T>(h), n);
    h.push_back(std::move(next));
  }
  return h;
}

template <Scalar T>
struct ResidualRow {
  int n;
  T input;      ///< f(n)
  T predicted;  ///< full-history prediction from f(1..n-1)
  T residual;   ///< predicted - input
};

/// Full-history predictions for a trial solution f (f(0) taken as 0).
/// Used for the n^v and log n probes; makes no claim about the outcome.
template <Scalar T>
std::vector<ResidualRow<T>> probe_residuals(const std::function<T(long)>& f, int n_max, const T& like) {
  std::vector<T> h;
  h.push_back(scalar_traits<T>::zero_like(like));
  for (long k = 1; k <= n_max; ++k) h.push_back(f(k));
  std::vector<ResidualRow<T>> out;
  for (int n = 2; n <= n_max; ++n) {
    T p = predict_full_history(std::span<const T>(h), n);
    T r = T(p - h[n]);
    out.push_back({n, h[n], std::move(p), std::move(r)});
  }
  return out;
}

template <Scalar T>
struct LinearCheckRow {
  int n;
  T predicted;       ///< full-history prediction from alpha k + beta, k < n
  T residual;        ///< predicted - alpha n: beta (1 + (-1)^n)
  T input_residual;  ///< predicted - (alpha n + beta)
};

/// Inserts lambda(k) = alpha k + beta into the full-history scheme. The
/// prediction is alpha n + beta (1 + (-1)^n): the linear part is reproduced
/// exactly and the constant leaves 2 beta for even n, 0 for odd n.
template <Scalar T>
std::vector<LinearCheckRow<T>> closed_form_check_linear(const T& alpha, const T& beta, int n_max) {
  std::vector<T> h;
  h.push_back(scalar_traits<T>::zero_like(alpha));
  for (long k = 1; k <= n_max; ++k) h.push_back(T(alpha * scalar_traits<T>::from_int(k, alpha) + beta));
  std::vector<LinearCheckRow<T>> out;
  for (int n = 2; n <= n_max; ++n) {
    T p = predict_full_history(std::span<const T>(h), n);
    T lin = T(alpha * scalar_traits<T>::from_int(n, alpha));
    T r = T(p - lin);
    T ir = T(p - h[n]);
    out.push_back({n, std::move(p), std::move(r), std::move(ir)});
  }
  return out;
}

struct PhiPair {
  BigReal phi1;  ///< sum_{k=1..n-1} (-1)^k C(n,k) k log k
  BigReal phi2;  ///< (-1)^(n-1) n log n
};

inline PhiPair phi_nlogn(int n, int digits) {
  if (n < 1) throw std::invalid_argument("phi_nlogn: n must be >= 1");
  BigReal phi1(0L, digits);
  for (int k = 2; k < n; ++k) {
    BigReal term = BigReal(static_cast<long>(k), digits) * log(BigReal(static_cast<long>(k), digits)) * binomial(n, k);
    if (k % 2 == 0) {
      phi1 += term;
    } else {
      phi1 -= term;
    }
  }
  BigReal phi2 = BigReal(static_cast<long>(n), digits) * log(BigReal(static_cast<long>(n), digits));
  if (n % 2 == 0) phi2 = -phi2;
  return {std::move(phi1), std::move(phi2)};
}

enum class ModelSign {
  kConsistent,  ///< (-1)^(k-n+1), the full-history convention
  kAsPrinted,   ///< (-1)^k; differs from the above by (-1)^(n-1)
};

/// Full-history prediction applied to g(k) = (1/2) k log k + (c + gamma) k,
/// c the trend constant.
inline BigReal model_predictor(int n, int digits, ModelSign sign = ModelSign::kConsistent) {
  if (n < 2) throw std::invalid_argument("model_predictor: n must be >= 2");
  const auto fc = FundamentalConstants::at(digits);
  const BigReal slope = fc.c_trend + fc.gamma;
  std::vector<BigReal> g;
  g.emplace_back(0L, digits);
  for (long k = 1; k < n; ++k) {
    const BigReal kk(k, digits);
    g.push_back(kk * log(kk) / 2L + slope * k);
  }
  BigReal p = predict_full_history(std::span<const BigReal>(g), n);
  if (sign == ModelSign::kAsPrinted && n % 2 == 0) p = -p;
  return p;
}

}  // namespace likeiper
