#include "taylorbound/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "taylorbound/expr.hpp"
#include "taylorbound/lagrange.hpp"
#include "taylorbound/remainder.hpp"
#include "taylorbound/series.hpp"

namespace taylorbound::cli {

using Json = nlohmann::ordered_json;

std::string format_real(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

bool parse_decimal(const std::string& text, double& value) {
  static const std::regex kDecimal(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  if (!std::regex_match(text, kDecimal)) return false;
  const char* first = text.data() + (text[0] == '+' ? 1 : 0);
  const auto res = std::from_chars(first, text.data() + text.size(), value);
  return res.ec == std::errc() && res.ptr == text.data() + text.size() && std::isfinite(value);
}

namespace {

// Reals are carried as Json floats and rendered by `write` with 17 significant
// digits; non-finite values become the strings "Infinity" / "-Infinity".
void write(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, val] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(key).dump() << ": ";
        write(val, os, indent + 2);
      }
      os << '\n' << close << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& val : j) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        write(val, os, indent + 2);
      }
      os << '\n' << close << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v)) {
        os << format_real(v);
      } else {
        os << '"' << format_real(v) << '"';
      }
      return;
    }
    default:
      os << j.dump();
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double require_decimal(const std::string& flag, const std::string& text) {
  double v = 0.0;
  if (!parse_decimal(text, v)) throw UsageError(flag + ": expected a decimal number, got '" + text + "'");
  return v;
}

Interval require_domain(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--domain: expected lo:hi, got '" + text + "'");
  const double lo = require_decimal("--domain", text.substr(0, colon));
  const double hi = require_decimal("--domain", text.substr(colon + 1));
  if (lo > hi) throw UsageError("--domain: lo must not exceed hi");
  return {lo, hi};
}

void require_order(int n, int max_order) {
  if (n < -1 || n > max_order) {
    throw UsageError("--order must lie in [-1, " + std::to_string(max_order) + "]");
  }
}

struct Options {
  std::string func;
  std::string center;
  std::string at;
  std::string end;
  std::string domain;
  std::string tol;
  std::string format = "json";
  int order = 0;
  int steps = 0;
  int max_order = kMaxSeriesOrder - 1;
};

// Tabular view of a results record for csv output: one header row, then rows.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Json>> rows;
};

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      const Json& cell = row[i];
      if (cell.is_number_float()) {
        os << format_real(cell.get<double>());
      } else if (cell.is_null()) {
        os << "";
      } else {
        os << cell.dump();
      }
    }
    os << '\n';
  }
}

struct Outcome {
  Json results;
  Table table;
  Json diagnostics = Json::array();
};

Json warning(std::string message) {
  Json d;
  d["severity"] = "warning";
  d["message"] = std::move(message);
  return d;
}

Outcome do_eval(const Expr& f, const Options& o, Json& inputs) {
  const double a = require_decimal("--center", o.center);
  const double x = require_decimal("--at", o.at);
  require_order(o.order, kMaxSeriesOrder - 1);
  inputs["center"] = a;
  inputs["order"] = o.order;
  inputs["at"] = x;

  const BoundReport r = remainder_enclosure(f, a, o.order, x);
  const double pnx = eval_poly(r.poly, x);
  Outcome out;
  auto& res = out.results;
  res["p_n_x"] = pnx;
  res["m"] = r.deriv_bounds.lo();
  res["M"] = r.deriv_bounds.hi();
  res["remainder_lo"] = r.remainder.lo();
  res["remainder_hi"] = r.remainder.hi();
  res["value_lo"] = r.value.lo();
  res["value_hi"] = r.value.hi();
  res["weight_lo"] = r.weight.lo();
  res["weight_hi"] = r.weight.hi();
  res["domain_lo"] = r.domain.lo();
  res["domain_hi"] = r.domain.hi();
  res["coeffs"] = Json::array();
  for (double c : r.poly.coeffs) res["coeffs"].push_back(c);

  std::vector<Json> row;
  for (const auto& [key, val] : res.items()) {
    if (key == "coeffs") continue;
    out.table.header.push_back(key);
    row.push_back(val);
  }
  for (std::size_t k = 0; k < r.poly.coeffs.size(); ++k) {
    out.table.header.push_back("coeff_" + std::to_string(k));
    row.emplace_back(r.poly.coeffs[k]);
  }
  out.table.rows.push_back(std::move(row));

  if (!r.deriv_bounds.is_finite()) {
    out.diagnostics.push_back(warning("derivative bound is unbounded; the remainder enclosure is not finite"));
  }
  return out;
}

Outcome do_table(const Expr& f, const Options& o, Json& inputs) {
  const double a = require_decimal("--center", o.center);
  const Interval dom = require_domain(o.domain);
  require_order(o.order, kMaxSeriesOrder - 1);
  if (o.steps < 1) throw UsageError("--steps must be at least 1");
  inputs["center"] = a;
  inputs["order"] = o.order;
  inputs["domain_lo"] = dom.lo();
  inputs["domain_hi"] = dom.hi();
  inputs["steps"] = o.steps;

  Outcome out;
  out.results["rows"] = Json::array();
  out.table.header = {"x", "p_n_x", "remainder_lo", "remainder_hi"};
  bool unbounded = false;
  for (int i = 0; i <= o.steps; ++i) {
    const double x = i == o.steps ? dom.hi()
                                  : dom.lo() + (dom.hi() - dom.lo()) * static_cast<double>(i) /
                                                   static_cast<double>(o.steps);
    const BoundReport r = remainder_enclosure(f, a, o.order, x);
    const double pnx = eval_poly(r.poly, x);
    Json row;
    row["x"] = x;
    row["p_n_x"] = pnx;
    row["remainder_lo"] = r.remainder.lo();
    row["remainder_hi"] = r.remainder.hi();
    out.results["rows"].push_back(row);
    out.table.rows.push_back({Json(x), Json(pnx), Json(r.remainder.lo()), Json(r.remainder.hi())});
    unbounded = unbounded || !r.remainder.is_finite();
  }
  if (unbounded) out.diagnostics.push_back(warning("some remainder enclosures are unbounded"));
  return out;
}

Json order_results(std::optional<int> chosen, const std::vector<double>& widths, Table& table) {
  Json res;
  res["order"] = chosen ? Json(*chosen) : Json(nullptr);
  res["widths"] = Json::array();
  table.header = {"chosen_order", "n", "width"};
  for (std::size_t n = 0; n < widths.size(); ++n) {
    Json w;
    w["n"] = static_cast<int>(n);
    w["width"] = widths[n];
    res["widths"].push_back(w);
    table.rows.push_back({res["order"], Json(static_cast<int>(n)), Json(widths[n])});
  }
  return res;
}

struct NoResult : std::runtime_error {
  NoResult(const std::string& what, Outcome partial) : std::runtime_error(what), partial(std::move(partial)) {}
  Outcome partial;
};

Outcome do_order(const Expr& f, const Options& o, Json& inputs) {
  const double a = require_decimal("--center", o.center);
  const Interval dom = require_domain(o.domain);
  const double tol = require_decimal("--tol", o.tol);
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  if (o.max_order < 0 || o.max_order > kMaxSeriesOrder - 1) {
    throw UsageError("--max must lie in [0, " + std::to_string(kMaxSeriesOrder - 1) + "]");
  }
  if (!contains(dom, a)) throw UsageError("--domain must contain --center");
  inputs["center"] = a;
  inputs["domain_lo"] = dom.lo();
  inputs["domain_hi"] = dom.hi();
  inputs["tol"] = tol;
  inputs["max"] = o.max_order;

  Outcome out;
  try {
    const OrderSearch s = search_order(f, a, dom, tol, o.max_order);
    out.results = order_results(s.order, s.widths, out.table);
  } catch (const NoConvergence& e) {
    std::vector<double> widths;
    for (int n = 0; n <= o.max_order; ++n) widths.push_back(remainder_width(f, a, dom, n));
    out.results = order_results(std::nullopt, widths, out.table);
    throw NoResult(e.what(), std::move(out));
  }
  return out;
}

Outcome do_xi(const Expr& f, const Options& o, Json& inputs) {
  const double a = require_decimal("--center", o.center);
  const double b = require_decimal("--end", o.end);
  const double tol = require_decimal("--tol", o.tol);
  require_order(o.order, kMaxSeriesOrder - 1);
  if (b < a) throw UsageError("--end must not be less than --center");
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  inputs["center"] = a;
  inputs["end"] = b;
  inputs["order"] = o.order;
  inputs["tol"] = tol;

  const XiResult r = find_xi(f, a, b, o.order, tol);
  Outcome out;
  out.results["xi"] = r.xi;
  out.results["k"] = r.k;
  out.results["residual"] = r.residual;
  out.results["iterations"] = r.iterations;
  out.table.header = {"xi", "k", "residual", "iterations"};
  out.table.rows.push_back({Json(r.xi), Json(r.k), Json(r.residual), Json(r.iterations)});
  return out;
}

Outcome do_parse(const Expr& f, const Options&, Json&) {
  Outcome out;
  out.results["canonical"] = to_string(f);
  out.results["tree"] = Json::array();
  std::istringstream lines(dump_tree(f));
  for (std::string line; std::getline(lines, line);) out.results["tree"].push_back(line);
  out.table.header = {"canonical"};
  out.table.rows.push_back({out.results["canonical"]});
  return out;
}

void emit(const std::string& command, const Json& inputs, const Outcome& outcome, const std::string& format,
          std::ostream& out) {
  if (format == "csv") {
    write_csv(outcome.table, out);
    return;
  }
  Json doc;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["results"] = outcome.results;
  doc["diagnostics"] = outcome.diagnostics;
  write(doc, out, 0);
  out << '\n';
}

Json error_diagnostic(const std::string& kind, const std::string& message) {
  Json d;
  d["severity"] = "error";
  d["kind"] = kind;
  d["message"] = message;
  return d;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Taylor polynomials with guaranteed remainder enclosures", "taylorbound"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_func = [&](CLI::App* sub) { sub->add_option("--func", o.func, "expression in x")->required(); };

  auto* eval_cmd = app.add_subcommand("eval", "bound P_n and R_n at one point");
  add_func(eval_cmd);
  eval_cmd->add_option("--center", o.center, "expansion point a")->required();
  eval_cmd->add_option("--order", o.order, "Taylor order n (>= -1)")->required();
  eval_cmd->add_option("--at", o.at, "evaluation point x")->required();
  add_format(eval_cmd);

  auto* table_cmd = app.add_subcommand("table", "remainder bounds on a uniform grid");
  add_func(table_cmd);
  table_cmd->add_option("--center", o.center, "expansion point a")->required();
  table_cmd->add_option("--order", o.order, "Taylor order n (>= -1)")->required();
  table_cmd->add_option("--domain", o.domain, "grid range lo:hi")->required();
  table_cmd->add_option("--steps", o.steps, "number of grid intervals")->required();
  add_format(table_cmd);

  auto* order_cmd = app.add_subcommand("order", "smallest order meeting a tolerance");
  add_func(order_cmd);
  order_cmd->add_option("--center", o.center, "expansion point a")->required();
  order_cmd->add_option("--domain", o.domain, "domain lo:hi containing the center")->required();
  order_cmd->add_option("--tol", o.tol, "remainder width tolerance")->required();
  order_cmd->add_option("--max", o.max_order, "largest order to scan");
  add_format(order_cmd);

  auto* xi_cmd = app.add_subcommand("xi", "locate a Lagrange point");
  add_func(xi_cmd);
  xi_cmd->add_option("--center", o.center, "expansion point a")->required();
  xi_cmd->add_option("--end", o.end, "right end b")->required();
  xi_cmd->add_option("--order", o.order, "Taylor order n (>= -1)")->required();
  xi_cmd->add_option("--tol", o.tol, "residual tolerance")->required();
  add_format(xi_cmd);

  auto* parse_cmd = app.add_subcommand("parse", "dump the parsed expression tree");
  add_func(parse_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Json inputs;
  inputs["func"] = o.func;
  if (command != "parse") inputs["format"] = o.format;

  Outcome outcome;
  int code = kExitOk;
  try {
    const Expr f = parse(o.func);
    if (command == "eval") {
      outcome = do_eval(f, o, inputs);
    } else if (command == "table") {
      outcome = do_table(f, o, inputs);
    } else if (command == "order") {
      outcome = do_order(f, o, inputs);
    } else if (command == "xi") {
      outcome = do_xi(f, o, inputs);
    } else {
      outcome = do_parse(f, o, inputs);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    const auto& d = e.diagnostic();
    err << "error: " << d.message << " at position " << d.position << '\n';
    Json diag = error_diagnostic("syntax_error", d.message);
    diag["position"] = d.position;
    outcome.results = nullptr;
    outcome.diagnostics.push_back(diag);
    code = kExitSyntax;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    outcome.results = nullptr;
    outcome.diagnostics.push_back(error_diagnostic("domain_error", e.what()));
    code = kExitDomain;
  } catch (const NoResult& e) {
    err << "error: " << e.what() << '\n';
    outcome = e.partial;
    outcome.diagnostics.push_back(error_diagnostic("no_convergence", e.what()));
    code = kExitNoResult;
  } catch (const BracketNotFound& e) {
    err << "error: " << e.what() << '\n';
    outcome.results = nullptr;
    Json diag = error_diagnostic("bracket_not_found", e.what());
    diag["best_point"] = e.best_point();
    diag["best_residual"] = e.best_residual();
    outcome.diagnostics.push_back(diag);
    code = kExitNoResult;
  } catch (const OrderOverflow& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (code != kExitOk && o.format == "csv") {
    // csv carries data only; the failure is reported on stderr
    if (code == kExitNoResult && !outcome.table.rows.empty()) write_csv(outcome.table, out);
    return code;
  }
  emit(command, inputs, outcome, command == "parse" ? "json" : o.format, out);
  return code;
}

}  // namespace taylorbound::cli
