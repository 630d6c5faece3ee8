#include "taylorbound/remainder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "taylorbound/series.hpp"

namespace taylorbound {

namespace {

void check_poly_order(int n) {
  if (n < -1) throw std::invalid_argument("Taylor order must be >= -1");
  if (n > kMaxSeriesOrder) throw OrderOverflow(n);
}

constexpr double kDominanceTol = 1e-12;

}  // namespace

TaylorPoly taylor_poly(const Expr& e, double a, int n) {
  check_poly_order(n);
  TaylorPoly p;
  p.center = a;
  p.order = n;
  if (n < 0) return p;
  p.coeffs = lift_series(e, a, n).coeffs();
  p.coeff_bounds = lift_series(e, Interval(a), n).coeffs();
  return p;
}

double eval_poly(const TaylorPoly& p, double x) {
  if (p.coeffs.empty()) return 0.0;
  const double h = x - p.center;
  double acc = p.coeffs.back();
  for (auto it = p.coeffs.rbegin() + 1; it != p.coeffs.rend(); ++it) acc = acc * h + *it;
  return acc;
}

Interval eval_poly_enclosure(const TaylorPoly& p, double x) {
  if (p.coeff_bounds.empty()) return Interval(0.0);
  const Interval h = Interval(x) - Interval(p.center);
  Interval acc = p.coeff_bounds.back();
  for (auto it = p.coeff_bounds.rbegin() + 1; it != p.coeff_bounds.rend(); ++it) acc = acc * h + *it;
  return acc;
}

double eval_poly_derivative(const TaylorPoly& p, double x) {
  if (p.coeffs.size() < 2) return 0.0;
  const double h = x - p.center;
  const std::size_t n = p.coeffs.size() - 1;
  double acc = static_cast<double>(n) * p.coeffs[n];
  for (std::size_t k = n - 1; k >= 1; --k) acc = acc * h + static_cast<double>(k) * p.coeffs[k];
  return acc;
}

BoundReport remainder_enclosure(const Expr& e, double a, int n, double x) {
  check_poly_order(n);
  if (n + 1 > kMaxSeriesOrder) throw OrderOverflow(n + 1);
  if (!std::isfinite(a) || !std::isfinite(x)) throw DomainError("center and point must be finite");

  BoundReport r;
  r.poly = taylor_poly(e, a, n);
  r.x = x;
  r.domain = hull(Interval(a), Interval(x));
  r.deriv_bounds = bound_derivative(e, r.domain, n + 1);

  const Interval h = Interval(x) - Interval(a);
  Interval weight(1.0);
  for (int j = 1; j <= n + 1; ++j) weight = weight * h / Interval(static_cast<double>(j));
  r.weight = weight;

  r.remainder = r.deriv_bounds * weight;
  r.value = eval_poly_enclosure(r.poly, x) + r.remainder;
  return r;
}

Interval value_enclosure(const Expr& e, double a, int n, double x) {
  return remainder_enclosure(e, a, n, x).value;
}

double remainder_width(const Expr& e, double a, const Interval& domain, int n) {
  double worst = 0.0;
  for (double x : {domain.lo(), domain.hi()}) {
    if (x == a) continue;
    worst = std::max(worst, width(remainder_enclosure(e, a, n, x).remainder));
  }
  return worst;
}

OrderSearch search_order(const Expr& e, double a, const Interval& domain, double tol, int n_max) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (n_max < 0 || n_max + 1 > kMaxSeriesOrder) throw OrderOverflow(n_max);
  if (!domain.is_finite() || !contains(domain, a)) {
    throw std::invalid_argument("domain must be finite and contain the center");
  }
  OrderSearch result;
  for (int n = 0; n <= n_max; ++n) {
    const double w = remainder_width(e, a, domain, n);
    result.widths.push_back(w);
    if (w <= tol) {
      result.order = n;
      return result;
    }
  }
  throw NoConvergence(n_max, *std::min_element(result.widths.begin(), result.widths.end()));
}

int min_order(const Expr& e, double a, const Interval& domain, double tol, int n_max) {
  return search_order(e, a, domain, tol, n_max).order;
}

DominanceReport dominates(const Expr& f, const Expr& g, const Interval& domain, int grid) {
  if (grid < 2) throw std::invalid_argument("grid needs at least two points");
  if (!domain.is_finite()) throw std::invalid_argument("domain must be finite");
  const double a = domain.lo();
  const double b = domain.hi();
  auto point = [&](int i) {
    return i == grid - 1 ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(grid - 1);
  };

  DominanceReport report;
  const double fa = eval(f, a);
  const double ga = eval(g, a);
  report.premise_ok = std::fabs(fa - ga) <= kDominanceTol * (1.0 + std::fabs(fa));
  report.conclusion_ok = true;
  for (int i = 0; i < grid; ++i) {
    const double t = point(i);
    const double df = derivative_value(f, t, 1);
    const double dg = derivative_value(g, t, 1);
    if (!(df <= dg + kDominanceTol * (1.0 + std::fabs(df)))) report.premise_ok = false;
  }
  for (int i = 0; i < grid; ++i) {
    const double t = point(i);
    const double ft = eval(f, t);
    if (!(ft <= eval(g, t) + kDominanceTol * (1.0 + std::fabs(ft)))) {
      report.conclusion_ok = false;
      if (report.premise_ok && !report.witness) report.witness = t;
    }
  }
  return report;
}

}  // namespace taylorbound
