#include <doctest.h>

#include <cmath>
#include <random>

#include "support/quad_eval.hpp"
#include "support/random_expr.hpp"
#include "taylorbound/series.hpp"

using namespace taylorbound;

namespace {

std::vector<double> coeffs(const char* src, double center, int order) {
  return lift_series(parse(src), center, order).coeffs();
}

using testing::quad;

// Central binomial-stencil estimate of f^(k)(p), O(h^2).
quad central_difference(const Expr& e, quad p, int k, quad h) {
  quad sum = 0;
  quad binom = 1;
  for (int j = 0; j <= k; ++j) {
    const quad t = p + (static_cast<quad>(j) - static_cast<quad>(k) / 2) * h;
    sum += ((k - j) % 2 == 0 ? 1 : -1) * binom * testing::eval_quad(e, t);
    binom = binom * (k - j) / (j + 1);
  }
  return sum / powq(h, k);
}

// Two Richardson steps remove the h^2 and h^4 terms.
double finite_difference(const Expr& e, double p, int k) {
  const quad h = 0.01;
  const quad d1 = central_difference(e, p, k, h);
  const quad d2 = central_difference(e, p, k, h / 2);
  const quad d4 = central_difference(e, p, k, h / 4);
  const quad r1 = (4 * d2 - d1) / 3;
  const quad r2 = (4 * d4 - d2) / 3;
  return static_cast<double>((16 * r2 - r1) / 15);
}

}  // namespace

TEST_CASE("known series") {
  const auto ex = coeffs("exp(x)", 0, 4);
  CHECK(ex[0] == 1.0);
  CHECK(ex[1] == 1.0);
  CHECK(ex[2] == 0.5);
  CHECK(ex[3] == doctest::Approx(1.0 / 6).epsilon(1e-15));
  CHECK(ex[4] == doctest::Approx(1.0 / 24).epsilon(1e-15));

  CHECK(coeffs("(1+x)^2", 0, 2) == std::vector<double>{1, 2, 1});

  const auto s = coeffs("sin(x)", 0, 3);
  CHECK(s[0] == 0.0);
  CHECK(s[1] == 1.0);
  CHECK(s[2] == 0.0);
  CHECK(s[3] == doctest::Approx(-1.0 / 6).epsilon(1e-15));

  const auto l = coeffs("ln(x)", 1, 4);
  CHECK(l[0] == 0.0);
  CHECK(l[1] == 1.0);
  CHECK(l[2] == -0.5);
  CHECK(l[3] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(l[4] == -0.25);

  const auto r = coeffs("sqrt(x)", 4, 2);
  CHECK(r[0] == 2.0);
  CHECK(r[1] == 0.25);
  CHECK(r[2] == doctest::Approx(-1.0 / 64).epsilon(1e-15));

  const auto q = coeffs("1/(1-x)", 0, 5);
  for (double c : q) CHECK(c == 1.0);

  const auto c = coeffs("cos(2*x)", 0, 4);
  CHECK(c[2] == -2.0);
  CHECK(c[4] == doctest::Approx(16.0 / 24).epsilon(1e-15));
}

TEST_CASE("derivative values") {
  CHECK(derivative_value(parse("x^3"), 2, 2) == 12.0);
  CHECK(derivative_value(parse("exp(x)"), 0, 7) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(derivative_value(parse("sin(x)"), 0, 3) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(derivative_value(parse("x^-1"), 2, 1) == -0.25);
}

TEST_CASE("derivative range bounds") {
  CHECK(bound_derivative(parse("x^3"), Interval(0, 1), 2) == Interval(0, 6));
  CHECK(bound_derivative(parse("x^2+3*x"), Interval(-5, 7), 3) == Interval(0.0));

  const Interval b = bound_derivative(parse("exp(x)"), Interval(0, 1), 5);
  double lo = INFINITY, hi = -INFINITY;
  for (int i = 0; i <= 100000; ++i) {
    const double v = std::exp(i / 100000.0);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(b.lo() <= lo);
  CHECK(b.hi() >= hi);
  CHECK(contains(Interval(0.9, 3.0), b));
}

TEST_CASE("domain and order errors") {
  CHECK_THROWS_AS(lift_series(parse("ln(x)"), 0.0, 2), DomainError);
  CHECK_THROWS_AS(lift_series(parse("ln(x)"), Interval(-1, 1), 2), DomainError);
  CHECK_THROWS_AS(lift_series(parse("1/x"), Interval(-1, 1), 2), DomainError);
  CHECK_THROWS_AS(lift_series(parse("sqrt(x)"), 0.0, 1), DomainError);
  CHECK_NOTHROW(lift_series(parse("sqrt(x)"), 0.0, 0));
  CHECK_THROWS_AS(lift_series(parse("x"), 0.0, 61), OrderOverflow);
  CHECK_NOTHROW(lift_series(parse("x"), 0.0, 60));
}

TEST_CASE("Cauchy product matches coefficient convolution exactly") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-9, 9);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> p(static_cast<std::size_t>(deg(rng)) + 1), q(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : p) v = c(rng);
    for (auto& v : q) v = c(rng);
    auto text = [](const std::vector<int>& v) {
      std::string s = "(0";
      for (std::size_t k = 0; k < v.size(); ++k) s += " + (" + std::to_string(v[k]) + ")*x^" + std::to_string(k);
      return s + ")";
    };
    const int order = 14;
    const auto prod = lift_series(parse(text(p) + "*" + text(q)), 0.0, order).coeffs();
    for (int k = 0; k <= order; ++k) {
      long conv = 0;
      for (int j = 0; j <= k; ++j) {
        if (j < static_cast<int>(p.size()) && k - j < static_cast<int>(q.size())) conv += p[j] * q[k - j];
      }
      REQUIRE(prod[static_cast<std::size_t>(k)] == static_cast<double>(conv));
    }
  }
}

TEST_CASE("derivative values agree with finite differences") {
  std::mt19937_64 rng(17);
  testing::RandomExprGen gen(rng, true);
  std::uniform_real_distribution<double> point(-1, 1);
  std::uniform_int_distribution<int> order(1, 6);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const Expr e = parse(gen(3));
    const double p = point(rng);
    const int k = order(rng);
    double exact = 0.0;
    try {
      exact = derivative_value(e, p, k);
    } catch (const DomainError&) {
      continue;
    }
    const double fd = finite_difference(e, p, k);
    if (!std::isfinite(fd) || !std::isfinite(exact) || std::fabs(eval(e, p)) > 1e3) continue;
    ++checked;
    CAPTURE(to_string(e));
    CAPTURE(p);
    CAPTURE(k);
    CHECK(std::fabs(fd - exact) <= 1e-4 * std::max(1.0, std::fabs(exact)));
  }
  CHECK(checked > 800);
}

TEST_CASE("interval coefficients contain sampled derivatives") {
  std::mt19937_64 rng(23);
  testing::RandomExprGen gen(rng, false);
  std::uniform_real_distribution<double> u(-2, 2);
  std::uniform_real_distribution<double> w(0, 1);
  std::uniform_int_distribution<int> order(0, 8);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const Expr e = parse(gen(4));
    const double lo = u(rng);
    const Interval X(lo, lo + w(rng));
    const int k = order(rng);
    Interval bound;
    try {
      bound = bound_derivative(e, X, k);
    } catch (const DomainError&) {
      continue;
    }
    ++checked;
    for (int s = 0; s < 100; ++s) {
      const double t = X.lo() + (X.hi() - X.lo()) * s / 99.0;
      const double d = derivative_value(e, t, k);
      const double slack = 1e-9 * (1.0 + std::fabs(d));
      REQUIRE(bound.lo() - slack <= d);
      REQUIRE(d <= bound.hi() + slack);
    }
  }
  CHECK(checked > 900);
}

TEST_CASE("degenerate center is tight for polynomials") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 500; ++i) {
    const auto poly = testing::random_polynomial(rng, 8);
    const Expr e = parse(poly.text);
    const double p = u(rng);
    for (int k = 0; k <= 9; ++k) {
      const Interval b = bound_derivative(e, Interval(p), k);
      const double v = derivative_value(e, p, k);
      REQUIRE(contains(b, v));
      REQUIRE(width(b) <= 1e-9 * (1.0 + std::fabs(v)));
    }
  }
}
