#include "taylorbound/interval.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace taylorbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMax = std::numeric_limits<double>::max();
// Below this magnitude the fma-based error terms may underflow, so results
// are widened unconditionally instead.
constexpr double kTiny = 1e-290;

double next_down(double v) noexcept { return std::nextafter(v, -kInf); }
double next_up(double v) noexcept { return std::nextafter(v, kInf); }

// libm transcendental results are faithful to within one ulp; two steps of
// widening covers that.
double libm_down(double v) noexcept { return next_down(next_down(v)); }
double libm_up(double v) noexcept { return next_up(next_up(v)); }

}  // namespace

namespace rounding {

double add_down(double a, double b) noexcept {
  const double s = a + b;
  if (!std::isfinite(a) || !std::isfinite(b)) return s;
  if (std::isinf(s)) return s > 0 ? kMax : s;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return err < 0 ? next_down(s) : s;
}

double add_up(double a, double b) noexcept { return -add_down(-a, -b); }

double mul_down(double a, double b) noexcept {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(a) || !std::isfinite(b)) return p;
  if (std::isinf(p)) return p > 0 ? kMax : p;
  if (std::fabs(p) < kTiny) return next_down(p);
  return std::fma(a, b, -p) < 0 ? next_down(p) : p;
}

double mul_up(double a, double b) noexcept { return -mul_down(-a, b); }

double div_down(double a, double b) noexcept {
  if (a == 0.0) return 0.0;
  const bool positive = (a > 0) == (b > 0);
  if (std::isinf(a) && std::isinf(b)) return positive ? 0.0 : -kInf;
  const double q = a / b;
  if (!std::isfinite(a) || !std::isfinite(b)) return q;
  if (std::isinf(q)) return q > 0 ? kMax : q;
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) return next_down(q);
  // a = q*b + r exactly; the true quotient is q + r/b.
  const double r = std::fma(-q, b, a);
  const bool below = (r < 0 && b > 0) || (r > 0 && b < 0);
  return below ? next_down(q) : q;
}

double div_up(double a, double b) noexcept { return -div_down(-a, b); }

double sqrt_down(double a) noexcept {
  if (a == 0.0 || std::isinf(a)) return std::sqrt(a);
  const double s = std::sqrt(a);
  if (a < kTiny) return std::max(0.0, next_down(s));
  return std::fma(-s, s, a) < 0 ? next_down(s) : s;
}

double sqrt_up(double a) noexcept {
  if (a == 0.0 || std::isinf(a)) return std::sqrt(a);
  const double s = std::sqrt(a);
  if (a < kTiny) return next_up(s);
  return std::fma(-s, s, a) > 0 ? next_up(s) : s;
}

}  // namespace rounding

using namespace rounding;

Interval::Interval(double v) : Interval(v, v) {}

// Adding +0.0 folds a negative zero into +0.0.
Interval::Interval(double lo, double hi) : lo_(lo + 0.0), hi_(hi + 0.0) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi || lo == kInf || hi == -kInf) {
    throw std::invalid_argument("invalid interval endpoints");
  }
}

Interval Interval::entire() noexcept {
  Interval r;
  r.lo_ = -kInf;
  r.hi_ = kInf;
  return r;
}

bool Interval::is_finite() const noexcept { return std::isfinite(lo_) && std::isfinite(hi_); }

Interval operator+(const Interval& a, const Interval& b) {
  return {add_down(a.lo(), b.lo()), add_up(a.hi(), b.hi())};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {add_down(a.lo(), -b.hi()), add_up(a.hi(), -b.lo())};
}

Interval operator-(const Interval& a) noexcept { return Interval(-a.hi(), -a.lo()); }

// Endpoint products with 0 * inf taken as 0, which is exact for every real
// member of the zero endpoint's interval.
Interval operator*(const Interval& a, const Interval& b) {
  double lo = kInf;
  double hi = -kInf;
  for (double x : {a.lo(), a.hi()}) {
    for (double y : {b.lo(), b.hi()}) {
      lo = std::min(lo, mul_down(x, y));
      hi = std::max(hi, mul_up(x, y));
    }
  }
  return {lo, hi};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo() <= 0.0 && b.hi() >= 0.0) throw DivisionByZeroInterval();
  double lo = kInf;
  double hi = -kInf;
  for (double x : {a.lo(), a.hi()}) {
    for (double y : {b.lo(), b.hi()}) {
      lo = std::min(lo, div_down(x, y));
      hi = std::max(hi, div_up(x, y));
    }
  }
  return {lo, hi};
}

Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }
Interval& operator/=(Interval& a, const Interval& b) { return a = a / b; }

namespace {

// x^k for x >= 0 with directed rounding; monotone in x.
double pow_nonneg_down(double x, unsigned k) {
  double result = 1.0;
  double base = x;
  while (k) {
    if (k & 1u) result = mul_down(result, base);
    k >>= 1u;
    if (k) base = mul_down(base, base);
  }
  return result;
}

double pow_nonneg_up(double x, unsigned k) {
  double result = 1.0;
  double base = x;
  while (k) {
    if (k & 1u) result = mul_up(result, base);
    k >>= 1u;
    if (k) base = mul_up(base, base);
  }
  return result;
}

}  // namespace

Interval pow_int(const Interval& a, unsigned k) {
  if (k == 0) return Interval(1.0);
  if (k == 1) return a;
  const double lo = a.lo();
  const double hi = a.hi();
  if (k % 2 == 1) {
    // odd powers are monotone increasing
    const double down = lo >= 0 ? pow_nonneg_down(lo, k) : -pow_nonneg_up(-lo, k);
    const double up = hi >= 0 ? pow_nonneg_up(hi, k) : -pow_nonneg_down(-hi, k);
    return {down, up};
  }
  if (lo >= 0) return {pow_nonneg_down(lo, k), pow_nonneg_up(hi, k)};
  if (hi <= 0) return {pow_nonneg_down(-hi, k), pow_nonneg_up(-lo, k)};
  return {0.0, pow_nonneg_up(std::max(-lo, hi), k)};
}

Interval exp(const Interval& a) {
  auto down = [](double x) {
    if (x == 0.0) return 1.0;
    if (x == -kInf) return 0.0;
    const double v = std::exp(x);
    if (std::isinf(v)) return kMax;
    return std::max(0.0, libm_down(v));
  };
  auto up = [](double x) {
    if (x == 0.0) return 1.0;
    if (x == kInf) return kInf;
    return libm_up(std::exp(x));
  };
  return {down(a.lo()), up(a.hi())};
}

Interval log(const Interval& a) {
  if (!(a.lo() > 0.0)) throw DomainError("ln requires a strictly positive argument");
  auto down = [](double x) { return x == 1.0 ? 0.0 : libm_down(std::log(x)); };
  auto up = [](double x) {
    if (x == 1.0) return 0.0;
    if (x == kInf) return kInf;
    return libm_up(std::log(x));
  };
  return {down(a.lo()), up(a.hi())};
}

Interval sqrt(const Interval& a) {
  if (a.lo() < 0.0) throw DomainError("sqrt requires a non-negative argument");
  return {sqrt_down(a.lo()), sqrt_up(a.hi())};
}

Interval pi_interval() noexcept {
  // M_PI rounds to below pi.
  static const Interval pi(3.141592653589793, next_up(3.141592653589793));
  return pi;
}

Interval e_interval() noexcept {
  static const Interval e(2.718281828459045, next_up(2.718281828459045));
  return e;
}

namespace {

Interval clamp_unit(double lo, double hi) {
  return {std::clamp(lo, -1.0, 1.0), std::clamp(hi, -1.0, 1.0)};
}

// Range of a 2*pi periodic function whose maximum sits at phases
// pi*(max_phase + 2k) and minimum at pi*(max_phase + 1 + 2k); between those
// critical points it is monotone. `value` is the libm routine.
Interval periodic_range(const Interval& a, double max_phase, double (*value)(double)) {
  if (!a.is_finite()) return {-1.0, 1.0};
  const double lo = a.lo();
  const double hi = a.hi();
  if (hi - lo >= 6.0 || std::max(std::fabs(lo), std::fabs(hi)) > 1e8) return {-1.0, 1.0};

  const double vlo = value(lo);
  const double vhi = value(hi);
  double out_lo = std::min(libm_down(vlo), libm_down(vhi));
  double out_hi = std::max(libm_up(vlo), libm_up(vhi));
  if (lo == 0.0 && hi == 0.0) {
    // sin(0) = 0 and cos(0) = 1 exactly
    return Interval(value(0.0));
  }

  const Interval pi = pi_interval();
  const double two_pi = 2.0 * 3.141592653589793;
  const long k_first = static_cast<long>(std::floor(lo / two_pi)) - 1;
  const long k_last = static_cast<long>(std::ceil(hi / two_pi)) + 1;
  for (long k = k_first; k <= k_last; ++k) {
    const Interval peak = pi * Interval(max_phase + 2.0 * static_cast<double>(k));
    const Interval trough = pi * Interval(max_phase + 1.0 + 2.0 * static_cast<double>(k));
    if (intersects(peak, a)) out_hi = 1.0;
    if (intersects(trough, a)) out_lo = -1.0;
  }
  return clamp_unit(out_lo, out_hi);
}

double libm_sin(double x) { return std::sin(x); }
double libm_cos(double x) { return std::cos(x); }

}  // namespace

Interval sin(const Interval& a) { return periodic_range(a, 0.5, libm_sin); }
Interval cos(const Interval& a) { return periodic_range(a, 0.0, libm_cos); }

Interval hull(const Interval& a, const Interval& b) noexcept {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

bool contains(const Interval& a, double v) noexcept { return a.lo() <= v && v <= a.hi(); }

bool contains(const Interval& a, const Interval& b) noexcept {
  return a.lo() <= b.lo() && b.hi() <= a.hi();
}

bool intersects(const Interval& a, const Interval& b) noexcept {
  return a.lo() <= b.hi() && b.lo() <= a.hi();
}

double width(const Interval& a) noexcept {
  if (!a.is_finite()) return kInf;
  return add_up(a.hi(), -a.lo());
}

double midpoint(const Interval& a) noexcept {
  const double lo = a.lo();
  const double hi = a.hi();
  if (lo == -kInf && hi == kInf) return 0.0;
  if (lo == -kInf) return hi > 0 ? 0.0 : std::max(-kMax, 2.0 * hi - 1.0);
  if (hi == kInf) return lo < 0 ? 0.0 : std::min(kMax, 2.0 * lo + 1.0);
  return std::clamp(0.5 * lo + 0.5 * hi, lo, hi);
}

double magnitude(const Interval& a) noexcept { return std::max(std::fabs(a.lo()), std::fabs(a.hi())); }

Interval iv_arith(ArithOp op, const Interval& a, const Interval& b) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

Interval iv_elem(ElemFn fn, const Interval& a) {
  switch (fn) {
    case ElemFn::exp: return exp(a);
    case ElemFn::ln: return log(a);
    case ElemFn::sin: return sin(a);
    case ElemFn::cos: return cos(a);
    case ElemFn::sqrt: return sqrt(a);
  }
  throw std::invalid_argument("unknown elementary function");
}

std::ostream& operator<<(std::ostream& os, const Interval& a) {
  return os << '[' << a.lo() << ", " << a.hi() << ']';
}

}  // namespace taylorbound
