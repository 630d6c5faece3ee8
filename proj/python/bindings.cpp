#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "taylorbound/cli.hpp"
#include "taylorbound/expr.hpp"
#include "taylorbound/interval.hpp"
#include "taylorbound/lagrange.hpp"
#include "taylorbound/remainder.hpp"
#include "taylorbound/series.hpp"

namespace py = pybind11;
namespace tb = taylorbound;

PYBIND11_MODULE(_taylorbound, m) {
  m.doc() = "Taylor polynomials with guaranteed two-sided remainder enclosures.";

  auto error = py::register_exception<tb::Error>(m, "Error");
  auto domain_error = py::register_exception<tb::DomainError>(m, "DomainError", error.ptr());
  py::register_exception<tb::DivisionByZeroInterval>(m, "DivisionByZeroInterval", domain_error.ptr());
  py::register_exception<tb::OrderOverflow>(m, "OrderOverflow", error.ptr());
  auto parse_error = py::register_exception<tb::ParseError>(m, "ParseError", error.ptr());
  py::register_exception<tb::SyntaxError>(m, "SyntaxError", parse_error.ptr());
  py::register_exception<tb::UnknownIdentifier>(m, "UnknownIdentifier", parse_error.ptr());
  py::register_exception<tb::NonIntegerExponent>(m, "NonIntegerExponent", parse_error.ptr());
  py::register_exception<tb::NoConvergence>(m, "NoConvergence", error.ptr());
  py::register_exception<tb::BracketNotFound>(m, "BracketNotFound", error.ptr());

  py::class_<tb::Interval>(m, "Interval")
      .def(py::init<double>())
      .def(py::init<double, double>())
      .def_property_readonly("lo", &tb::Interval::lo)
      .def_property_readonly("hi", &tb::Interval::hi)
      .def("width", [](const tb::Interval& a) { return tb::width(a); })
      .def("midpoint", [](const tb::Interval& a) { return tb::midpoint(a); })
      .def("contains", [](const tb::Interval& a, double v) { return tb::contains(a, v); })
      .def("__contains__", [](const tb::Interval& a, double v) { return tb::contains(a, v); })
      .def("intersects", [](const tb::Interval& a, const tb::Interval& b) { return tb::intersects(a, b); })
      .def("hull", [](const tb::Interval& a, const tb::Interval& b) { return tb::hull(a, b); })
      .def("__add__", [](const tb::Interval& a, const tb::Interval& b) { return a + b; })
      .def("__sub__", [](const tb::Interval& a, const tb::Interval& b) { return a - b; })
      .def("__mul__", [](const tb::Interval& a, const tb::Interval& b) { return a * b; })
      .def("__truediv__", [](const tb::Interval& a, const tb::Interval& b) { return a / b; })
      .def("__neg__", [](const tb::Interval& a) { return -a; })
      .def("__pow__", [](const tb::Interval& a, unsigned k) { return tb::pow_int(a, k); })
      .def("__eq__", [](const tb::Interval& a, const tb::Interval& b) { return a == b; })
      .def("__repr__", [](const tb::Interval& a) {
        std::ostringstream os;
        os << "Interval" << a;
        return os.str();
      });
  py::implicitly_convertible<double, tb::Interval>();

  m.def("iv_exp", [](const tb::Interval& a) { return tb::exp(a); });
  m.def("iv_ln", [](const tb::Interval& a) { return tb::log(a); });
  m.def("iv_sin", [](const tb::Interval& a) { return tb::sin(a); });
  m.def("iv_cos", [](const tb::Interval& a) { return tb::cos(a); });
  m.def("iv_sqrt", [](const tb::Interval& a) { return tb::sqrt(a); });

  py::class_<tb::Expr>(m, "Expr")
      .def(py::init([](const std::string& source) { return tb::parse(source); }))
      .def("__str__", [](const tb::Expr& e) { return tb::to_string(e); })
      .def("__repr__", [](const tb::Expr& e) { return "Expr('" + tb::to_string(e) + "')"; })
      .def("__eq__", [](const tb::Expr& a, const tb::Expr& b) { return a == b; })
      .def("tree", [](const tb::Expr& e) { return tb::dump_tree(e); })
      .def("__call__", [](const tb::Expr& e, double x) { return tb::eval(e, x); })
      .def("enclose", [](const tb::Expr& e, const tb::Interval& x) { return tb::eval(e, x); });
  py::implicitly_convertible<std::string, tb::Expr>();

  m.def("parse", [](const std::string& source) { return tb::parse(source); }, py::arg("source"));

  m.def("taylor_coefficients",
        [](const tb::Expr& e, double center, int order) { return tb::lift_series(e, center, order).coeffs(); },
        py::arg("expr"), py::arg("center"), py::arg("order"));
  m.def("derivative_value", &tb::derivative_value, py::arg("expr"), py::arg("point"), py::arg("k"));
  m.def("bound_derivative", &tb::bound_derivative, py::arg("expr"), py::arg("domain"), py::arg("k"));

  py::class_<tb::TaylorPoly>(m, "TaylorPoly")
      .def_readonly("center", &tb::TaylorPoly::center)
      .def_readonly("order", &tb::TaylorPoly::order)
      .def_readonly("coeffs", &tb::TaylorPoly::coeffs)
      .def_readonly("coeff_bounds", &tb::TaylorPoly::coeff_bounds)
      .def("__call__", [](const tb::TaylorPoly& p, double x) { return tb::eval_poly(p, x); })
      .def("enclose", [](const tb::TaylorPoly& p, double x) { return tb::eval_poly_enclosure(p, x); });
  m.def("taylor_poly", &tb::taylor_poly, py::arg("expr"), py::arg("center"), py::arg("order"));

  py::class_<tb::BoundReport>(m, "BoundReport")
      .def_readonly("poly", &tb::BoundReport::poly)
      .def_readonly("domain", &tb::BoundReport::domain)
      .def_readonly("x", &tb::BoundReport::x)
      .def_readonly("deriv_bounds", &tb::BoundReport::deriv_bounds)
      .def_readonly("weight", &tb::BoundReport::weight)
      .def_readonly("remainder", &tb::BoundReport::remainder)
      .def_readonly("value", &tb::BoundReport::value);
  m.def("remainder_enclosure", &tb::remainder_enclosure, py::arg("expr"), py::arg("center"), py::arg("order"),
        py::arg("x"));
  m.def("value_enclosure", &tb::value_enclosure, py::arg("expr"), py::arg("center"), py::arg("order"),
        py::arg("x"));
  m.def("min_order", &tb::min_order, py::arg("expr"), py::arg("center"), py::arg("domain"), py::arg("tol"),
        py::arg("n_max") = tb::kMaxSeriesOrder - 1);

  py::class_<tb::DominanceReport>(m, "DominanceReport")
      .def_readonly("premise_ok", &tb::DominanceReport::premise_ok)
      .def_readonly("conclusion_ok", &tb::DominanceReport::conclusion_ok)
      .def_readonly("witness", &tb::DominanceReport::witness);
  m.def("dominates", &tb::dominates, py::arg("f"), py::arg("g"), py::arg("domain"), py::arg("grid") = 1000);

  py::class_<tb::XiResult>(m, "XiResult")
      .def_readonly("xi", &tb::XiResult::xi)
      .def_readonly("k", &tb::XiResult::k)
      .def_readonly("residual", &tb::XiResult::residual)
      .def_readonly("iterations", &tb::XiResult::iterations);
  m.def("find_xi", &tb::find_xi, py::arg("expr"), py::arg("a"), py::arg("b"), py::arg("order"), py::arg("tol"),
        py::arg("grid") = tb::kDefaultXiGrid);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = tb::cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a command line; returns (exit_code, stdout, stderr).");
}
