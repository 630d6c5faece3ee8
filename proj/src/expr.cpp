#include "taylorbound/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <system_error>

namespace taylorbound {

std::string_view function_name(Function fn) noexcept {
  switch (fn) {
    case Function::exp: return "exp";
    case Function::ln: return "ln";
    case Function::sin: return "sin";
    case Function::cos: return "cos";
    case Function::sqrt: return "sqrt";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Construction and access

Expr Expr::constant(double value, bool exact) {
  Node n;
  n.kind = NodeKind::constant;
  n.value = value;
  n.exact = exact;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::named(NamedConstant c) {
  Node n;
  n.kind = NodeKind::named_constant;
  n.named = c;
  n.exact = false;
  n.value = c == NamedConstant::pi ? 3.141592653589793 : 2.718281828459045;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::variable() {
  Node n;
  n.kind = NodeKind::variable;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

namespace {

Expr::Node binary_node(NodeKind kind, Expr lhs, Expr rhs) {
  Expr::Node n;
  n.kind = kind;
  n.children = {std::move(lhs), std::move(rhs)};
  return n;
}

}  // namespace

Expr Expr::add(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(binary_node(NodeKind::add, std::move(lhs), std::move(rhs))));
}
Expr Expr::sub(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(binary_node(NodeKind::sub, std::move(lhs), std::move(rhs))));
}
Expr Expr::mul(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(binary_node(NodeKind::mul, std::move(lhs), std::move(rhs))));
}
Expr Expr::div(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(binary_node(NodeKind::div, std::move(lhs), std::move(rhs))));
}

Expr Expr::pow(Expr base, int exponent) {
  Node n;
  n.kind = NodeKind::pow;
  n.exponent = exponent;
  n.children = {std::move(base)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::neg(Expr operand) {
  Node n;
  n.kind = NodeKind::neg;
  n.children = {std::move(operand)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::apply(Function fn, Expr operand) {
  Node n;
  n.kind = NodeKind::apply;
  n.fn = fn;
  n.children = {std::move(operand)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

NodeKind Expr::kind() const noexcept { return node_->kind; }
double Expr::value() const noexcept { return node_->value; }
bool Expr::exact() const noexcept { return node_->exact; }
NamedConstant Expr::named_constant() const noexcept { return node_->named; }
int Expr::exponent() const noexcept { return node_->exponent; }
Function Expr::function() const noexcept { return node_->fn; }
const std::vector<Expr>& Expr::children() const noexcept { return node_->children; }

bool operator==(const Expr& a, const Expr& b) noexcept {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case NodeKind::constant:
      if (x.value != y.value || x.exact != y.exact) return false;
      break;
    case NodeKind::named_constant:
      if (x.named != y.named) return false;
      break;
    case NodeKind::pow:
      if (x.exponent != y.exponent) return false;
      break;
    case NodeKind::apply:
      if (x.fn != y.fn) return false;
      break;
    default:
      break;
  }
  return x.children == y.children;
}

// ---------------------------------------------------------------------------
// Literals

namespace {

struct Decimal {
  std::string digits;  // no leading or trailing zeros; empty for zero
  long exponent = 0;   // value = 0.digits... scaled: digits * 10^exponent
};

Decimal normalize(std::string digits, long exponent) {
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string::npos) return {};
  digits.erase(0, first);
  while (digits.back() == '0') {
    digits.pop_back();
    ++exponent;
  }
  return {std::move(digits), exponent};
}

// Parses [digits][.digits][(e|E)[+-]digits] into a normalized decimal.
Decimal decimal_of(std::string_view text) {
  std::string digits;
  long exponent = 0;
  std::size_t i = 0;
  bool after_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      after_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (after_point) --exponent;
    } else {
      break;
    }
  }
  if (i < text.size()) {
    long e = 0;
    std::from_chars(text.data() + i + 1 + (text[i + 1] == '+' ? 1 : 0), text.data() + text.size(), e);
    exponent += e;
  }
  return normalize(std::move(digits), exponent);
}

// glibc prints the exact binary value when asked for enough digits; 767
// significant digits cover every double.
Decimal decimal_of(double v) {
  char buf[900];
  std::snprintf(buf, sizeof buf, "%.800e", std::fabs(v));
  return decimal_of(std::string_view(buf));
}

bool literal_is_exact(std::string_view text, double v) {
  const Decimal a = decimal_of(text);
  const Decimal b = decimal_of(v);
  return a.digits == b.digits && (a.digits.empty() || a.exponent == b.exponent);
}

std::string format_constant(double v, bool exact) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string text(buf, res.ptr);
  if (exact && std::isfinite(v) && !literal_is_exact(text[0] == '-' ? text.substr(1) : text, v)) {
    char big[900];
    std::snprintf(big, sizeof big, "%.800e", v);
    const Decimal d = decimal_of(std::string_view(big[0] == '-' ? big + 1 : big));
    text = (v < 0 ? "-" : "") + d.digits + "e" + std::to_string(d.exponent);
  }
  return text;
}

}  // namespace

Interval constant_enclosure(const Expr& leaf) {
  if (leaf.kind() == NodeKind::named_constant) {
    return leaf.named_constant() == NamedConstant::pi ? pi_interval() : e_interval();
  }
  const double v = leaf.value();
  if (leaf.exact()) return Interval(v);
  return {std::nextafter(v, -INFINITY), std::nextafter(v, INFINITY)};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr int kMaxDepth = 256;
constexpr long long kMaxExponent = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    skip_ws();
    if (pos_ == src_.size()) fail_syntax("empty expression");
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) {
      if (starts_operand()) fail_syntax("implicit multiplication is not supported");
      fail_syntax(std::string("unexpected '") + src_[pos_] + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail_syntax(std::string msg) const { fail_syntax_at(std::move(msg), pos_); }
  [[noreturn]] void fail_syntax_at(std::string msg, std::size_t at) const {
    throw SyntaxError(ParseDiagnostic{std::move(msg), at});
  }

  void skip_ws() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                  src_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool starts_operand() const {
    if (pos_ >= src_.size()) return false;
    const char c = src_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == '_';
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p(p) {
      if (++p.depth_ > kMaxDepth) p.fail_syntax("expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  Expr parse_expr() {
    DepthGuard guard(*this);
    Expr lhs = parse_term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        lhs = Expr::add(std::move(lhs), parse_term());
      } else if (peek('-')) {
        ++pos_;
        lhs = Expr::sub(std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        lhs = Expr::mul(std::move(lhs), parse_unary());
      } else if (peek('/')) {
        ++pos_;
        lhs = Expr::div(std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    DepthGuard guard(*this);
    if (peek('-')) {
      ++pos_;
      return Expr::neg(parse_unary());
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    const std::size_t exponent_at = pos_;
    const Expr exponent = parse_unary();
    const auto k = fold_integer(exponent);
    if (!k || *k < -kMaxExponent || *k > kMaxExponent) {
      throw NonIntegerExponent(
          ParseDiagnostic{"exponent must be an integer literal expression", exponent_at});
    }
    return Expr::pow(std::move(base), static_cast<int>(*k));
  }

  static std::optional<long long> fold_integer(const Expr& e) {
    switch (e.kind()) {
      case NodeKind::constant: {
        const double v = e.value();
        if (!e.exact() || v != std::floor(v) || std::fabs(v) > static_cast<double>(kMaxExponent)) {
          return std::nullopt;
        }
        return static_cast<long long>(v);
      }
      case NodeKind::neg: {
        auto inner = fold_integer(e.children()[0]);
        if (!inner) return std::nullopt;
        return -*inner;
      }
      case NodeKind::pow: {
        auto base = fold_integer(e.children()[0]);
        if (!base || e.exponent() < 0) return std::nullopt;
        long long result = 1;
        for (int i = 0; i < e.exponent(); ++i) {
          result *= *base;
          if (result > kMaxExponent || result < -kMaxExponent) return std::nullopt;
          if (result == 0 || result == 1) break;
        }
        if (result == 1 && *base == -1 && e.exponent() % 2 == 1) result = -1;
        return result;
      }
      default:
        return std::nullopt;
    }
  }

  Expr parse_atom() {
    skip_ws();
    if (pos_ == src_.size()) fail_syntax("expected an operand");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      if (!peek(')')) fail_syntax("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    fail_syntax(std::string("expected an operand, found '") + c + "'");
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    auto is_digit = [&](std::size_t i) {
      return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]));
    };
    std::size_t i = pos_;
    bool any_digit = false;
    while (is_digit(i)) ++i, any_digit = true;
    if (i < src_.size() && src_[i] == '.') {
      ++i;
      while (is_digit(i)) ++i, any_digit = true;
    }
    if (!any_digit) fail_syntax("malformed number");
    if (i < src_.size() && (src_[i] == 'e' || src_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
      if (is_digit(j)) {
        while (is_digit(j)) ++j;
        i = j;
      }
    }
    const std::string_view text = src_.substr(start, i - start);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec == std::errc::result_out_of_range || !std::isfinite(v)) {
      if (res.ec == std::errc::result_out_of_range && decimal_of(text).exponent < 0) {
        // underflow: from_chars leaves v untouched
        v = 0.0;
      } else {
        fail_syntax_at("numeric literal out of range", start);
      }
    } else if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
      fail_syntax_at("malformed number", start);
    }
    pos_ = i;
    return Expr::constant(v, literal_is_exact(text, v));
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    std::size_t i = pos_;
    while (i < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[i])) || src_[i] == '_')) {
      ++i;
    }
    const std::string_view name = src_.substr(start, i - start);
    pos_ = i;
    if (name == "x") return Expr::variable();
    if (name == "pi") return Expr::named(NamedConstant::pi);
    if (name == "e") return Expr::named(NamedConstant::e);
    static constexpr Function kFunctions[] = {Function::exp, Function::ln, Function::sin,
                                              Function::cos, Function::sqrt};
    for (Function fn : kFunctions) {
      if (name == function_name(fn)) {
        if (!peek('(')) fail_syntax("expected '(' after function name");
        ++pos_;
        Expr arg = parse_expr();
        if (!peek(')')) fail_syntax("expected ')'");
        ++pos_;
        return Expr::apply(fn, std::move(arg));
      }
    }
    throw UnknownIdentifier(ParseDiagnostic{"unknown identifier '" + std::string(name) + "'", start});
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Expr parse(std::string_view source) { return Parser(source).parse_all(); }

// ---------------------------------------------------------------------------
// Printing

namespace {

enum Prec { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

struct Rendered {
  std::string text;
  int prec;
};

Rendered render(const Expr& e);

std::string wrap(const Rendered& r, int min_prec) {
  return r.prec < min_prec ? "(" + r.text + ")" : r.text;
}

Rendered render(const Expr& e) {
  const auto& ch = e.children();
  switch (e.kind()) {
    case NodeKind::constant: {
      std::string text = format_constant(e.value(), e.exact());
      if (e.value() < 0 || std::signbit(e.value())) return {"(" + text + ")", kAtom};
      return {text, kAtom};
    }
    case NodeKind::named_constant:
      return {e.named_constant() == NamedConstant::pi ? "pi" : "e", kAtom};
    case NodeKind::variable:
      return {"x", kAtom};
    case NodeKind::add:
      return {wrap(render(ch[0]), kSum) + " + " + wrap(render(ch[1]), kProduct), kSum};
    case NodeKind::sub:
      return {wrap(render(ch[0]), kSum) + " - " + wrap(render(ch[1]), kProduct), kSum};
    case NodeKind::mul:
      return {wrap(render(ch[0]), kProduct) + "*" + wrap(render(ch[1]), kUnary), kProduct};
    case NodeKind::div:
      return {wrap(render(ch[0]), kProduct) + "/" + wrap(render(ch[1]), kUnary), kProduct};
    case NodeKind::neg:
      return {"-" + wrap(render(ch[0]), kUnary), kUnary};
    case NodeKind::pow:
      return {wrap(render(ch[0]), kAtom) + "^" + std::to_string(e.exponent()), kPower};
    case NodeKind::apply:
      return {std::string(function_name(e.function())) + "(" + render(ch[0]).text + ")", kAtom};
  }
  return {"?", kAtom};
}

void dump(const Expr& e, int indent, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(indent) * 2, ' ');
  switch (e.kind()) {
    case NodeKind::constant:
      os << "const " << format_constant(e.value(), e.exact()) << (e.exact() ? "" : " (inexact)");
      break;
    case NodeKind::named_constant:
      os << "const " << (e.named_constant() == NamedConstant::pi ? "pi" : "e");
      break;
    case NodeKind::variable: os << "var x"; break;
    case NodeKind::add: os << "add"; break;
    case NodeKind::sub: os << "sub"; break;
    case NodeKind::mul: os << "mul"; break;
    case NodeKind::div: os << "div"; break;
    case NodeKind::neg: os << "neg"; break;
    case NodeKind::pow: os << "pow " << e.exponent(); break;
    case NodeKind::apply: os << "apply " << function_name(e.function()); break;
  }
  os << '\n';
  for (const auto& c : e.children()) dump(c, indent + 1, os);
}

}  // namespace

std::string to_string(const Expr& e) { return render(e).text; }

std::string dump_tree(const Expr& e) {
  std::ostringstream os;
  dump(e, 0, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double checked(double v) {
  if (std::isnan(v)) throw DomainError("evaluation produced NaN");
  return v;
}

struct RealOps {
  double constant(const Expr& leaf) const { return leaf.value(); }
  double add(double a, double b) const { return checked(a + b); }
  double sub(double a, double b) const { return checked(a - b); }
  double mul(double a, double b) const { return checked(a * b); }
  double div(double a, double b) const {
    if (b == 0.0) throw DomainError("division by zero");
    return checked(a / b);
  }
  double neg(double a) const { return -a; }
  double pow(double a, int k) const {
    if (k < 0) {
      if (a == 0.0) throw DomainError("negative power of zero");
      return checked(1.0 / pow(a, -k));
    }
    double result = 1.0;
    double base = a;
    for (unsigned n = static_cast<unsigned>(k); n; n >>= 1u) {
      if (n & 1u) result *= base;
      if (n > 1) base *= base;
    }
    return checked(result);
  }
  double apply(Function fn, double a) const {
    switch (fn) {
      case Function::exp: return checked(std::exp(a));
      case Function::ln:
        if (!(a > 0.0)) throw DomainError("ln requires a strictly positive argument");
        return checked(std::log(a));
      case Function::sin: return checked(std::sin(a));
      case Function::cos: return checked(std::cos(a));
      case Function::sqrt:
        if (a < 0.0) throw DomainError("sqrt requires a non-negative argument");
        return checked(std::sqrt(a));
    }
    throw std::logic_error("unknown function");
  }
};

struct IntervalOps {
  Interval constant(const Expr& leaf) const { return constant_enclosure(leaf); }
  Interval add(const Interval& a, const Interval& b) const { return a + b; }
  Interval sub(const Interval& a, const Interval& b) const { return a - b; }
  Interval mul(const Interval& a, const Interval& b) const { return a * b; }
  Interval div(const Interval& a, const Interval& b) const { return a / b; }
  Interval neg(const Interval& a) const { return -a; }
  Interval pow(const Interval& a, int k) const {
    if (k < 0) return Interval(1.0) / pow_int(a, static_cast<unsigned>(-k));
    return pow_int(a, static_cast<unsigned>(k));
  }
  Interval apply(Function fn, const Interval& a) const {
    switch (fn) {
      case Function::exp: return exp(a);
      case Function::ln: return log(a);
      case Function::sin: return sin(a);
      case Function::cos: return cos(a);
      case Function::sqrt: return sqrt(a);
    }
    throw std::logic_error("unknown function");
  }
};

}  // namespace

double eval(const Expr& e, double x) { return evaluate(e, x, RealOps{}); }

Interval eval(const Expr& e, const Interval& x) { return evaluate(e, x, IntervalOps{}); }

bool is_polynomial(const Expr& e) noexcept {
  switch (e.kind()) {
    case NodeKind::apply:
      return false;
    case NodeKind::pow:
      return e.exponent() >= 0 && is_polynomial(e.children()[0]);
    case NodeKind::div: {
      const auto& divisor = e.children()[1];
      auto has_var = [](const auto& self, const Expr& n) -> bool {
        if (n.kind() == NodeKind::variable) return true;
        for (const auto& c : n.children()) {
          if (self(self, c)) return true;
        }
        return false;
      };
      return !has_var(has_var, divisor) && is_polynomial(e.children()[0]) && is_polynomial(divisor);
    }
    default:
      for (const auto& c : e.children()) {
        if (!is_polynomial(c)) return false;
      }
      return true;
  }
}

}  // namespace taylorbound
