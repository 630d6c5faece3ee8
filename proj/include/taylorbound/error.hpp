#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace taylorbound {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (ln of a non-positive
/// value, a zero divisor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Interval division by an interval that contains zero.
class DivisionByZeroInterval : public DomainError {
 public:
  DivisionByZeroInterval() : DomainError("division by an interval containing zero") {}
};

/// Requested series order exceeds the supported maximum.
class OrderOverflow : public Error {
 public:
  explicit OrderOverflow(int order)
      : Error("series order " + std::to_string(order) + " exceeds the maximum"), order_(order) {}
  int order() const noexcept { return order_; }

 private:
  int order_;
};

struct ParseDiagnostic {
  std::string message;
  std::size_t position = 0;
};

class ParseError : public Error {
 public:
  explicit ParseError(ParseDiagnostic diag)
      : Error(diag.message + " at position " + std::to_string(diag.position)),
        diag_(std::move(diag)) {}
  const ParseDiagnostic& diagnostic() const noexcept { return diag_; }

 private:
  ParseDiagnostic diag_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownIdentifier : public ParseError {
 public:
  using ParseError::ParseError;
};

class NonIntegerExponent : public ParseError {
 public:
  using ParseError::ParseError;
};

/// No order up to the scan limit brought the remainder width under tolerance.
class NoConvergence : public Error {
 public:
  NoConvergence(int max_order, double achieved_width)
      : Error("no order <= " + std::to_string(max_order) +
              " reaches the tolerance (best width " + std::to_string(achieved_width) + ")"),
        max_order_(max_order),
        achieved_width_(achieved_width) {}
  int max_order() const noexcept { return max_order_; }
  double achieved_width() const noexcept { return achieved_width_; }

 private:
  int max_order_;
  double achieved_width_;
};

/// The intermediate-value search found neither a sign change nor a point
/// within tolerance.
class BracketNotFound : public Error {
 public:
  BracketNotFound(std::size_t grid_size, double best_point, double best_residual,
                  const std::string& why = "no sign change or near-zero sample")
      : Error(why + " on a grid of " + std::to_string(grid_size) + " points"),
        grid_size_(grid_size),
        best_point_(best_point),
        best_residual_(best_residual) {}
  std::size_t grid_size() const noexcept { return grid_size_; }
  double best_point() const noexcept { return best_point_; }
  double best_residual() const noexcept { return best_residual_; }

 private:
  std::size_t grid_size_;
  double best_point_;
  double best_residual_;
};

}  // namespace taylorbound
