#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "taylorbound/error.hpp"
#include "taylorbound/interval.hpp"

namespace taylorbound {

enum class NodeKind { constant, named_constant, variable, add, sub, mul, div, pow, neg, apply };
enum class NamedConstant { pi, e };
enum class Function { exp, ln, sin, cos, sqrt };

std::string_view function_name(Function fn) noexcept;

/// Immutable AST of a one-variable real function. Copies share structure.
class Expr {
 public:
  struct Node;

  /// Numeric literal. `exact` records whether the written decimal equals
  /// `value` exactly; inexact literals are widened by one ulp in interval
  /// contexts.
  static Expr constant(double value, bool exact = true);
  static Expr named(NamedConstant c);
  static Expr variable();
  static Expr add(Expr lhs, Expr rhs);
  static Expr sub(Expr lhs, Expr rhs);
  static Expr mul(Expr lhs, Expr rhs);
  static Expr div(Expr lhs, Expr rhs);
  static Expr pow(Expr base, int exponent);
  static Expr neg(Expr operand);
  static Expr apply(Function fn, Expr operand);

  NodeKind kind() const noexcept;
  double value() const noexcept;
  bool exact() const noexcept;
  NamedConstant named_constant() const noexcept;
  int exponent() const noexcept;
  Function function() const noexcept;
  const std::vector<Expr>& children() const noexcept;

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b) noexcept;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  NodeKind kind = NodeKind::constant;
  double value = 0.0;
  bool exact = true;
  NamedConstant named = NamedConstant::pi;
  int exponent = 0;
  Function fn = Function::exp;
  std::vector<Expr> children;
};

// Grammar, lowest to highest precedence:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' unary)?          right-associative
//   atom    := number | 'x' | 'pi' | 'e' | '(' expr ')' | fn '(' expr ')'
// The exponent must fold to an integer built from integer literals, unary
// minus and '^' (so "2^3^2" is 2^9). Implicit multiplication is rejected.
Expr parse(std::string_view source);

/// Minimal-parenthesis rendering that re-parses to an identical tree.
std::string to_string(const Expr& e);

/// Indented tree dump, one node per line.
std::string dump_tree(const Expr& e);

/// Pointwise evaluation. Throws DomainError on a zero divisor, ln of a
/// non-positive value, sqrt of a negative value, or a NaN result.
double eval(const Expr& e, double x);

/// Range enclosure of {f(t) : t in x}.
Interval eval(const Expr& e, const Interval& x);

/// True when the tree contains no ln, sqrt, division or negative power.
bool is_polynomial(const Expr& e) noexcept;

// Structural recursion over the tree. `ops` supplies the scalar kind's
// arithmetic: constant(const Expr&), add, sub, mul, div, neg, pow(S, int),
// apply(Function, S).
template <class S, class Ops>
S evaluate(const Expr& e, const S& x, const Ops& ops) {
  switch (e.kind()) {
    case NodeKind::constant:
    case NodeKind::named_constant:
      return ops.constant(e);
    case NodeKind::variable:
      return x;
    case NodeKind::add:
      return ops.add(evaluate(e.children()[0], x, ops), evaluate(e.children()[1], x, ops));
    case NodeKind::sub:
      return ops.sub(evaluate(e.children()[0], x, ops), evaluate(e.children()[1], x, ops));
    case NodeKind::mul:
      return ops.mul(evaluate(e.children()[0], x, ops), evaluate(e.children()[1], x, ops));
    case NodeKind::div:
      return ops.div(evaluate(e.children()[0], x, ops), evaluate(e.children()[1], x, ops));
    case NodeKind::pow:
      return ops.pow(evaluate(e.children()[0], x, ops), e.exponent());
    case NodeKind::neg:
      return ops.neg(evaluate(e.children()[0], x, ops));
    case NodeKind::apply:
      return ops.apply(e.function(), evaluate(e.children()[0], x, ops));
  }
  throw std::logic_error("unhandled node kind");
}

/// Enclosure of a constant leaf's exact real value.
Interval constant_enclosure(const Expr& leaf);

}  // namespace taylorbound
