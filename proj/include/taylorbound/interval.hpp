#pragma once

#include <iosfwd>
#include <limits>

#include "taylorbound/error.hpp"

namespace taylorbound {

// Closed interval [lo, hi] over the extended reals. Every operation returns
// an enclosure of the exact real result: endpoints are rounded outward after
// each primitive step, so containment survives floating-point rounding.
//
// Invariants: lo <= hi, no NaN endpoint, lo < +inf and hi > -inf.
class Interval {
 public:
  constexpr Interval() noexcept = default;
  // Degenerate interval holding an exact double. Implicit so that generic
  // code can mix doubles and intervals.
  Interval(double v);  // NOLINT(google-explicit-constructor)
  Interval(double lo, double hi);

  static Interval entire() noexcept;

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

  bool is_degenerate() const noexcept { return lo_ == hi_; }
  bool is_finite() const noexcept;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Throws DivisionByZeroInterval when 0 lies in b.
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a) noexcept;

Interval& operator+=(Interval& a, const Interval& b);
Interval& operator-=(Interval& a, const Interval& b);
Interval& operator*=(Interval& a, const Interval& b);
Interval& operator/=(Interval& a, const Interval& b);

/// Exact range enclosure of a^k; even k over an interval through zero
/// yields lo = 0.
Interval pow_int(const Interval& a, unsigned k);

Interval exp(const Interval& a);
/// Natural logarithm; requires a.lo() > 0.
Interval log(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
/// Requires a.lo() >= 0.
Interval sqrt(const Interval& a);

/// Two-sided enclosures of the constants pi and e.
Interval pi_interval() noexcept;
Interval e_interval() noexcept;

Interval hull(const Interval& a, const Interval& b) noexcept;
bool contains(const Interval& a, double v) noexcept;
/// True when b is a subset of a.
bool contains(const Interval& a, const Interval& b) noexcept;
bool intersects(const Interval& a, const Interval& b) noexcept;
/// hi - lo rounded up; +inf if either endpoint is infinite.
double width(const Interval& a) noexcept;
/// A finite point inside a (0 for the entire line).
double midpoint(const Interval& a) noexcept;
/// Largest absolute value over a.
double magnitude(const Interval& a) noexcept;

enum class ArithOp { add, sub, mul, div };
enum class ElemFn { exp, ln, sin, cos, sqrt };

Interval iv_arith(ArithOp op, const Interval& a, const Interval& b);
Interval iv_elem(ElemFn fn, const Interval& a);

std::ostream& operator<<(std::ostream& os, const Interval& a);

// Directed-rounding kernels on doubles. Each result is a representable bound
// of the exact real result in the requested direction; exact operations come
// back unwidened.
namespace rounding {
double add_down(double a, double b) noexcept;
double add_up(double a, double b) noexcept;
double mul_down(double a, double b) noexcept;
double mul_up(double a, double b) noexcept;
double div_down(double a, double b) noexcept;
double div_up(double a, double b) noexcept;
double sqrt_down(double a) noexcept;
double sqrt_up(double a) noexcept;
}  // namespace rounding

}  // namespace taylorbound
