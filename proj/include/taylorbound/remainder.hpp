#pragma once

#include <optional>
#include <vector>

#include "taylorbound/expr.hpp"
#include "taylorbound/interval.hpp"

namespace taylorbound {

// Taylor polynomial of order n at center a, in the shifted variable (x - a).
// Order -1 is the identically zero polynomial.
struct TaylorPoly {
  double center = 0.0;
  int order = -1;
  // coeffs[k] approximates f^(k)(a)/k!
  std::vector<double> coeffs;
  // coeff_bounds[k] encloses the exact f^(k)(a)/k!
  std::vector<Interval> coeff_bounds;
};

TaylorPoly taylor_poly(const Expr& e, double a, int n);

/// Horner evaluation of the rounded coefficients.
double eval_poly(const TaylorPoly& p, double x);

/// Enclosure of the exact Taylor polynomial at x: Horner over the coefficient
/// enclosures with outward rounding at every step.
Interval eval_poly_enclosure(const TaylorPoly& p, double x);

/// Derivative of the polynomial at x (uses the rounded coefficients).
double eval_poly_derivative(const TaylorPoly& p, double x);

// Two-sided remainder bound at a single point x.
//
//   deriv_bounds  [m, M] enclosing f^(n+1) over hull(a, x)
//   weight        enclosure of (x - a)^(n+1) / (n+1)!
//   remainder     hull(m * weight, M * weight), encloses R_n(x) = f(x) - P_n(x)
//   value         P_n(x) + remainder, encloses f(x)
struct BoundReport {
  TaylorPoly poly;
  Interval domain;
  double x = 0.0;
  Interval deriv_bounds;
  Interval weight;
  Interval remainder;
  Interval value;
};

BoundReport remainder_enclosure(const Expr& e, double a, int n, double x);

Interval value_enclosure(const Expr& e, double a, int n, double x);

struct OrderSearch {
  int order = 0;
  // remainder width at the worst domain endpoint, one entry per scanned order
  std::vector<double> widths;
};

/// Remainder width at the domain endpoint(s) for a fixed order.
double remainder_width(const Expr& e, double a, const Interval& domain, int n);

/// Smallest n in 0..n_max whose worst-case remainder width over the domain is
/// <= tol. Throws NoConvergence when none qualifies.
OrderSearch search_order(const Expr& e, double a, const Interval& domain, double tol, int n_max);

int min_order(const Expr& e, double a, const Interval& domain, double tol, int n_max);

struct DominanceReport {
  bool premise_ok = false;
  bool conclusion_ok = false;
  // first grid point where the premise holds but f(t) > g(t)
  std::optional<double> witness;
};

// Grid check of the comparison rule: f(a) = g(a) and f' <= g' imply
// f <= g. Tolerances are 1e-12 relative.
DominanceReport dominates(const Expr& f, const Expr& g, const Interval& domain, int grid);

}  // namespace taylorbound
