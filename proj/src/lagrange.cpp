#include "taylorbound/lagrange.hpp"

#include <cmath>
#include <stdexcept>

#include "taylorbound/remainder.hpp"
#include "taylorbound/series.hpp"

namespace taylorbound {

namespace {

constexpr int kBisectionLimit = 200;

}  // namespace

double reference_remainder(const Expr& e, double a, int n, double b) {
  if (n + 1 > kMaxSeriesOrder) throw OrderOverflow(n + 1);
  const double h = b - a;
  if (h == 0.0) return n < 0 ? eval(e, a) : 0.0;

  try {
    const auto s = lift_series(e, a, kMaxSeriesOrder);
    double tail = 0.0;
    double power = 1.0;
    double last_terms = 0.0;
    for (int k = 0; k <= kMaxSeriesOrder; ++k) {
      if (k > n) {
        const double term = s[static_cast<std::size_t>(k)] * power;
        tail += term;
        if (k >= kMaxSeriesOrder - 1) last_terms += std::fabs(term);
      }
      power *= h;
    }
    if (tail == 0.0 && last_terms == 0.0) return 0.0;
    if (std::isfinite(tail) && std::isfinite(last_terms) && last_terms <= 1e-17 * std::fabs(tail)) {
      return tail;
    }
  } catch (const DomainError&) {
    // high-order coefficients overflowed; use the direct difference
  }

  const double fb = midpoint(eval(e, Interval(b)));
  return fb - eval_poly(taylor_poly(e, a, n), b);
}

XiResult find_xi(const Expr& e, double a, double b, int n, double tol, std::size_t grid) {
  if (!std::isfinite(a) || !std::isfinite(b) || b < a) throw std::invalid_argument("need finite a <= b");
  if (n < -1) throw std::invalid_argument("Taylor order must be >= -1");
  if (n + 1 > kMaxSeriesOrder) throw OrderOverflow(n + 1);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (grid < 2) throw std::invalid_argument("grid needs at least two points");

  const int order = n + 1;
  if (b == a) return {a, derivative_value(e, a, order), 0.0, 0};

  double weight = 1.0;
  for (int j = 1; j <= order; ++j) weight *= (b - a) / static_cast<double>(j);
  if (weight == 0.0) throw DomainError("interval too short for the requested order");

  XiResult result;
  result.k = reference_remainder(e, a, n, b) / weight;
  auto g = [&](double t) { return derivative_value(e, t, order) - result.k; };

  auto point = [&](std::size_t i) {
    if (i + 1 == grid) return b;
    return a + (b - a) * static_cast<double>(i) / static_cast<double>(grid - 1);
  };

  double best_t = a;
  double best_r = INFINITY;
  double prev_t = a;
  double prev_g = 0.0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double t = point(i);
    const double gt = g(t);
    if (std::fabs(gt) < best_r) {
      best_r = std::fabs(gt);
      best_t = t;
    }
    if (std::fabs(gt) <= tol) {
      result.xi = t;
      result.residual = std::fabs(gt);
      return result;
    }
    if (i > 0 && std::signbit(gt) != std::signbit(prev_g)) {
      double lo = prev_t;
      double hi = t;
      double glo = prev_g;
      double ghi = gt;
      for (int it = 0; it < kBisectionLimit; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double gm = g(mid);
        ++result.iterations;
        if (std::fabs(gm) <= tol) {
          result.xi = mid;
          result.residual = std::fabs(gm);
          return result;
        }
        if (std::signbit(gm) == std::signbit(glo)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
          ghi = gm;
        }
      }
      const bool take_lo = std::fabs(glo) <= std::fabs(ghi);
      throw BracketNotFound(grid, take_lo ? lo : hi, std::fabs(take_lo ? glo : ghi),
                            "bisection stalled above tolerance");
    }
    prev_t = t;
    prev_g = gt;
  }
  throw BracketNotFound(grid, best_t, best_r);
}

}  // namespace taylorbound
