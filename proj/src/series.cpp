#include "taylorbound/series.hpp"

#include <string>

namespace taylorbound {

namespace {

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  if (order > kMaxSeriesOrder) throw OrderOverflow(order);
}

double real_constant(const Expr& leaf) { return leaf.value(); }

template <class T, class ConstFn>
struct SeriesOps {
  using S = TruncatedSeries<T>;
  T center;
  int order;
  ConstFn make_constant;

  S constant(const Expr& leaf) const { return S::constant(center, make_constant(leaf), order); }
  S add(const S& a, const S& b) const { return a + b; }
  S sub(const S& a, const S& b) const { return a - b; }
  S mul(const S& a, const S& b) const { return a * b; }
  S div(const S& a, const S& b) const { return a / b; }
  S neg(const S& a) const { return -a; }
  S pow(const S& a, int k) const { return taylorbound::pow(a, k); }
  S apply(Function fn, const S& a) const {
    switch (fn) {
      case Function::exp: return taylorbound::exp(a);
      case Function::ln: return taylorbound::log(a);
      case Function::sin: return sin_cos(a).sin;
      case Function::cos: return sin_cos(a).cos;
      case Function::sqrt: return taylorbound::sqrt(a);
    }
    throw std::logic_error("unknown function");
  }
};

template <class T, class ConstFn>
TruncatedSeries<T> lift(const Expr& e, const T& center, int order, ConstFn make_constant) {
  check_order(order);
  SeriesOps<T, ConstFn> ops{center, order, make_constant};
  return evaluate(e, TruncatedSeries<T>::variable(center, order), ops);
}

void check_real(double v) {
  if (std::isnan(v)) throw DomainError("series coefficient is NaN");
}

}  // namespace

TruncatedSeries<double> lift_series(const Expr& e, double center, int order) {
  auto s = lift(e, center, order, real_constant);
  for (double c : s.coeffs()) check_real(c);
  return s;
}

TruncatedSeries<Interval> lift_series(const Expr& e, const Interval& center, int order) {
  return lift(e, center, order, constant_enclosure);
}

double derivative_value(const Expr& e, double p, int k) {
  const auto s = lift_series(e, p, k);
  double value = s[static_cast<std::size_t>(k)];
  for (int j = 2; j <= k; ++j) value *= static_cast<double>(j);
  return value;
}

Interval bound_derivative(const Expr& e, const Interval& X, int k) {
  const auto s = lift_series(e, X, k);
  Interval value = s[static_cast<std::size_t>(k)];
  for (int j = 2; j <= k; ++j) value = value * Interval(static_cast<double>(j));
  return value;
}

}  // namespace taylorbound
