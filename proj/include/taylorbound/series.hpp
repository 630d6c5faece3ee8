#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "taylorbound/error.hpp"
#include "taylorbound/expr.hpp"
#include "taylorbound/interval.hpp"

namespace taylorbound {

/// Highest supported series order.
inline constexpr int kMaxSeriesOrder = 60;

// Taylor coefficients c[k] = f^(k)(center)/k!, k = 0..order, over a real or
// interval scalar. With an interval center X, c[k] encloses
// {f^(k)(t)/k! : t in X}.
template <class T>
class TruncatedSeries {
 public:
  TruncatedSeries(T center, std::vector<T> coeffs) : center_(std::move(center)), coeffs_(std::move(coeffs)) {}

  static TruncatedSeries constant(const T& center, const T& value, int order) {
    std::vector<T> c(static_cast<std::size_t>(order) + 1, T(0.0));
    c[0] = value;
    return {center, std::move(c)};
  }

  static TruncatedSeries variable(const T& center, int order) {
    std::vector<T> c(static_cast<std::size_t>(order) + 1, T(0.0));
    c[0] = center;
    if (order >= 1) c[1] = T(1.0);
    return {center, std::move(c)};
  }

  const T& center() const noexcept { return center_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  const T& operator[](std::size_t k) const { return coeffs_[k]; }
  T& operator[](std::size_t k) { return coeffs_[k]; }

 private:
  T center_;
  std::vector<T> coeffs_;
};

namespace series_detail {

// Domain predicates used by the recurrences that need a nonsingular constant
// term.
inline bool strictly_positive(double v) noexcept { return v > 0.0; }
inline bool strictly_positive(const Interval& v) noexcept { return v.lo() > 0.0; }
inline bool nonnegative(double v) noexcept { return v >= 0.0; }
inline bool nonnegative(const Interval& v) noexcept { return v.lo() >= 0.0; }
inline bool excludes_zero(double v) noexcept { return v != 0.0; }
inline bool excludes_zero(const Interval& v) noexcept { return v.lo() > 0.0 || v.hi() < 0.0; }

inline double pow_scalar(double a, unsigned k) {
  double result = 1.0;
  for (; k; k >>= 1u) {
    if (k & 1u) result *= a;
    if (k > 1) a *= a;
  }
  return result;
}
inline Interval pow_scalar(const Interval& a, unsigned k) { return pow_int(a, k); }

}  // namespace series_detail

template <class T>
TruncatedSeries<T> operator+(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  std::vector<T> c(a.coeffs().size(), T(0.0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
  return {a.center(), std::move(c)};
}

template <class T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  std::vector<T> c(a.coeffs().size(), T(0.0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
  return {a.center(), std::move(c)};
}

template <class T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a) {
  std::vector<T> c(a.coeffs().size(), T(0.0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = -a[k];
  return {a.center(), std::move(c)};
}

// Cauchy product.
template <class T>
TruncatedSeries<T> operator*(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const std::size_t n = a.coeffs().size();
  std::vector<T> c(n, T(0.0));
  for (std::size_t k = 0; k < n; ++k) {
    T sum = a[0] * b[k];
    for (std::size_t j = 1; j <= k; ++j) sum = sum + a[j] * b[k - j];
    c[k] = sum;
  }
  return {a.center(), std::move(c)};
}

// c = a/b from a = b*c: c_k = (a_k - sum_{j=1..k} b_j c_{k-j}) / b_0.
template <class T>
TruncatedSeries<T> operator/(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  if (!series_detail::excludes_zero(b[0])) throw DomainError("division by a series with zero constant term");
  const std::size_t n = a.coeffs().size();
  std::vector<T> c(n, T(0.0));
  for (std::size_t k = 0; k < n; ++k) {
    T sum = a[k];
    for (std::size_t j = 1; j <= k; ++j) sum = sum - b[j] * c[k - j];
    c[k] = sum / b[0];
  }
  return {a.center(), std::move(c)};
}

// c' = a' c: c_k = (1/k) sum_{j=1..k} j a_j c_{k-j}.
template <class T>
TruncatedSeries<T> exp(const TruncatedSeries<T>& a) {
  using std::exp;
  const std::size_t n = a.coeffs().size();
  std::vector<T> c(n, T(0.0));
  c[0] = exp(a[0]);
  for (std::size_t k = 1; k < n; ++k) {
    T sum = T(0.0);
    for (std::size_t j = 1; j <= k; ++j) sum = sum + T(static_cast<double>(j)) * a[j] * c[k - j];
    c[k] = sum / T(static_cast<double>(k));
  }
  return {a.center(), std::move(c)};
}

// a c' = a': c_k = (a_k - (1/k) sum_{j=1..k-1} j c_j a_{k-j}) / a_0.
template <class T>
TruncatedSeries<T> log(const TruncatedSeries<T>& a) {
  using std::log;
  if (!series_detail::strictly_positive(a[0])) throw DomainError("ln requires a strictly positive argument");
  const std::size_t n = a.coeffs().size();
  std::vector<T> c(n, T(0.0));
  c[0] = log(a[0]);
  for (std::size_t k = 1; k < n; ++k) {
    T sum = T(0.0);
    for (std::size_t j = 1; j < k; ++j) sum = sum + T(static_cast<double>(j)) * c[j] * a[k - j];
    c[k] = (a[k] - sum / T(static_cast<double>(k))) / a[0];
  }
  return {a.center(), std::move(c)};
}

template <class T>
struct SinCos {
  TruncatedSeries<T> sin;
  TruncatedSeries<T> cos;
};

// s' = a' c, c' = -a' s.
template <class T>
SinCos<T> sin_cos(const TruncatedSeries<T>& a) {
  using std::cos;
  using std::sin;
  const std::size_t n = a.coeffs().size();
  std::vector<T> s(n, T(0.0));
  std::vector<T> c(n, T(0.0));
  s[0] = sin(a[0]);
  c[0] = cos(a[0]);
  for (std::size_t k = 1; k < n; ++k) {
    T ss = T(0.0);
    T cs = T(0.0);
    for (std::size_t j = 1; j <= k; ++j) {
      const T ja = T(static_cast<double>(j)) * a[j];
      ss = ss + ja * c[k - j];
      cs = cs + ja * s[k - j];
    }
    const T kk(static_cast<double>(k));
    s[k] = ss / kk;
    c[k] = -(cs / kk);
  }
  return {TruncatedSeries<T>(a.center(), std::move(s)), TruncatedSeries<T>(a.center(), std::move(c))};
}

// c^2 = a: c_k = (a_k - sum_{j=1..k-1} c_j c_{k-j}) / (2 c_0).
template <class T>
TruncatedSeries<T> sqrt(const TruncatedSeries<T>& a) {
  using std::sqrt;
  const std::size_t n = a.coeffs().size();
  if (n > 1 ? !series_detail::strictly_positive(a[0]) : !series_detail::nonnegative(a[0])) {
    throw DomainError("sqrt requires a positive argument");
  }
  std::vector<T> c(n, T(0.0));
  c[0] = sqrt(a[0]);
  const T two_c0 = T(2.0) * c[0];
  for (std::size_t k = 1; k < n; ++k) {
    T sum = a[k];
    for (std::size_t j = 1; j < k; ++j) sum = sum - c[j] * c[k - j];
    c[k] = sum / two_c0;
  }
  return {a.center(), std::move(c)};
}

// Repeated squaring; the constant term is replaced by the scalar power, which
// is the tightest enclosure of the same quantity.
template <class T>
TruncatedSeries<T> pow(const TruncatedSeries<T>& a, int k) {
  if (k < 0) {
    auto positive = pow(a, -k);
    return TruncatedSeries<T>::constant(a.center(), T(1.0), a.order()) / positive;
  }
  auto result = TruncatedSeries<T>::constant(a.center(), T(1.0), a.order());
  auto base = a;
  for (unsigned n = static_cast<unsigned>(k); n; n >>= 1u) {
    if (n & 1u) result = result * base;
    if (n > 1) base = base * base;
  }
  result[0] = series_detail::pow_scalar(a[0], static_cast<unsigned>(k));
  return result;
}

/// Taylor coefficients of e at `center` up to `order` (<= 60).
TruncatedSeries<double> lift_series(const Expr& e, double center, int order);
/// Interval-center variant: coefficient k encloses f^(k)(t)/k! over t in X.
TruncatedSeries<Interval> lift_series(const Expr& e, const Interval& center, int order);

/// k-th derivative of e at p.
double derivative_value(const Expr& e, double p, int k);

/// Enclosure of {f^(k)(t) : t in X}. May be a strict superset, and may have
/// infinite endpoints.
Interval bound_derivative(const Expr& e, const Interval& X, int k);

}  // namespace taylorbound
