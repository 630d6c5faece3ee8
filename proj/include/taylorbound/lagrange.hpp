#pragma once

#include <cstddef>

#include "taylorbound/expr.hpp"

namespace taylorbound {

struct XiResult {
  double xi = 0.0;
  // target derivative value R_n(b) * (n+1)! / (b-a)^(n+1)
  double k = 0.0;
  // |f^(n+1)(xi) - k|
  double residual = 0.0;
  int iterations = 0;
};

inline constexpr std::size_t kDefaultXiGrid = 4096;

/// Accurate value of R_n(b) = f(b) - P_n(b). Sums the Taylor tail up to the
/// maximum order when it has visibly converged, otherwise falls back to a
/// direct difference.
double reference_remainder(const Expr& e, double a, int n, double b);

// Finds xi in [a, b] with f^(n+1)(xi) (b-a)^(n+1)/(n+1)! = R_n(b).
// Samples g(t) = f^(n+1)(t) - k on a uniform grid, refines the leftmost sign
// change by bisection, and returns as soon as |g| <= tol.
XiResult find_xi(const Expr& e, double a, double b, int n, double tol,
                 std::size_t grid = kDefaultXiGrid);

}  // namespace taylorbound
