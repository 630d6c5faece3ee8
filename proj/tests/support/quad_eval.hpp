#pragma once

#include <quadmath.h>

#include "taylorbound/expr.hpp"

namespace taylorbound::testing {

using quad = __float128;

// Quad precision evaluator used as an oracle. It shares only the expression
// tree with the library; arithmetic and elementary functions come from
// libquadmath.
struct QuadOps {
  quad constant(const Expr& leaf) const {
    if (leaf.kind() == NodeKind::named_constant) {
      return leaf.named_constant() == NamedConstant::pi ? 4 * atanq(1) : expq(1);
    }
    return leaf.value();
  }
  quad add(quad a, quad b) const { return a + b; }
  quad sub(quad a, quad b) const { return a - b; }
  quad mul(quad a, quad b) const { return a * b; }
  quad div(quad a, quad b) const { return a / b; }
  quad neg(quad a) const { return -a; }
  quad pow(quad a, int k) const { return powq(a, k); }
  quad apply(Function fn, quad a) const {
    switch (fn) {
      case Function::exp: return expq(a);
      case Function::ln: return logq(a);
      case Function::sin: return sinq(a);
      case Function::cos: return cosq(a);
      case Function::sqrt: return sqrtq(a);
    }
    return 0;
  }
};

inline quad eval_quad(const Expr& e, quad x) { return evaluate(e, x, QuadOps{}); }

}  // namespace taylorbound::testing
