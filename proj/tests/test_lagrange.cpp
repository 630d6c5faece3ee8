#include <doctest.h>

#include <cmath>
#include <random>

#include "support/random_expr.hpp"
#include "taylorbound/lagrange.hpp"
#include "taylorbound/remainder.hpp"
#include "taylorbound/series.hpp"

using namespace taylorbound;

namespace {

// exp(b) - sum_{k<=n} b^k/k!, summed as the tail in long double
long double exp_remainder(int n, long double b) {
  long double term = 1.0L;
  long double sum = 0.0L;
  for (int k = 0; k <= 80; ++k) {
    if (k > n) sum += term;
    term *= b / (k + 1);
  }
  return sum;
}

double lagrange_weight(double a, double b, int n) {
  double w = 1.0;
  for (int j = 1; j <= n + 1; ++j) w *= (b - a) / j;
  return w;
}

}  // namespace

TEST_CASE("cubic: the Lagrange point is one third") {
  const XiResult r = find_xi(parse("x^3"), 0, 1, 1, 1e-12);
  CHECK(r.k == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::fabs(r.xi - 1.0 / 3.0) <= 1e-8);
  CHECK(r.residual <= 1e-12);
}

TEST_CASE("constant derivative: any point works") {
  const XiResult r = find_xi(parse("x^2"), 0, 1, 1, 1e-12);
  CHECK(r.xi >= 0.0);
  CHECK(r.xi <= 1.0);
  CHECK(r.residual <= 1e-12);
  CHECK(r.iterations == 0);
}

TEST_CASE("degenerate interval") {
  const XiResult r = find_xi(parse("exp(x)"), 0.7, 0.7, 3, 1e-9);
  CHECK(r.xi == 0.7);
  CHECK(r.residual == 0.0);
  CHECK(reference_remainder(parse("exp(x)"), 0.7, 3, 0.7) == 0.0);
}

TEST_CASE("reference remainder against an independent series sum") {
  for (int n = 0; n <= 10; ++n) {
    for (double b : {0.1, 0.5, 1.0, 2.0, -1.5}) {
      const long double oracle = exp_remainder(n, b);
      const double ref = reference_remainder(parse("exp(x)"), 0, n, b);
      CAPTURE(n);
      CAPTURE(b);
      CHECK(std::fabs(ref - static_cast<double>(oracle)) <= 1e-15 * std::fabs(static_cast<double>(oracle)));
    }
  }
  // polynomial of degree <= n: the tail is exactly zero
  CHECK(reference_remainder(parse("x^3 - 2*x"), 0.5, 3, 1.75) == 0.0);
  // order -1: the remainder is f(b)
  CHECK(reference_remainder(parse("x^2"), 0, -1, 3) == 9.0);
}

TEST_CASE("no bracket on a coarse grid") {
  // cos(t) - k with k ~ 0 is positive at both ends of [0, 2pi]
  const double two_pi = 6.283185307179586;
  CHECK_THROWS_AS(find_xi(parse("sin(x)"), 0, two_pi, 0, 1e-10, 2), BracketNotFound);
  try {
    find_xi(parse("sin(x)"), 0, two_pi, 0, 1e-10, 2);
  } catch (const BracketNotFound& e) {
    CHECK(e.grid_size() == 2);
    CHECK(e.best_residual() == doctest::Approx(1.0));
  }
  const XiResult fine = find_xi(parse("sin(x)"), 0, two_pi, 0, 1e-10);
  CHECK(std::fabs(fine.xi - two_pi / 4) <= 1e-9);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(find_xi(parse("x"), 1, 0, 1, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(find_xi(parse("x"), 0, 1, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(find_xi(parse("x"), 0, 1, 60, 1e-9), OrderOverflow);
  CHECK_THROWS_AS(find_xi(parse("ln(x)"), -1, 1, 1, 1e-9), DomainError);
}

TEST_CASE("random smooth cases satisfy the Lagrange identity") {
  std::mt19937_64 rng(61);
  testing::RandomExprGen gen(rng, true);
  std::uniform_real_distribution<double> center(-1, 1);
  std::uniform_real_distribution<double> length(0.1, 2);
  std::uniform_int_distribution<int> order(0, 6);
  const double tol = 1e-8;
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Expr e = parse(gen(3));
    const double a = center(rng);
    const double b = a + length(rng);
    const int n = order(rng);
    XiResult r;
    Interval bound;
    try {
      bound = bound_derivative(e, Interval(a, b), n + 1);
      // an absolute residual of 1e-8 needs derivative values well inside
      // the range where double spacing is finer than that
      if (magnitude(bound) > 1e6) continue;
      r = find_xi(e, a, b, n, tol);
    } catch (const DomainError&) {
      continue;
    }
    ++checked;
    CAPTURE(to_string(e));
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(n);
    REQUIRE(r.xi >= a);
    REQUIRE(r.xi <= b);
    REQUIRE(r.residual <= tol);
    REQUIRE(std::fabs(derivative_value(e, r.xi, n + 1) - r.k) == r.residual);

    const double w = lagrange_weight(a, b, n);
    const double lhs = std::fabs(derivative_value(e, r.xi, n + 1) * w - reference_remainder(e, a, n, b));
    REQUIRE(lhs <= tol * w + 1e-12);

    REQUIRE(bound.lo() - 1e-9 <= r.k);
    REQUIRE(r.k <= bound.hi() + 1e-9);

    const XiResult again = find_xi(e, a, b, n, tol);
    REQUIRE(again.xi == r.xi);
    REQUIRE(again.k == r.k);
    REQUIRE(again.residual == r.residual);
    REQUIRE(again.iterations == r.iterations);
  }
  CHECK(checked > 250);
}
