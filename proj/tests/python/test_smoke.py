import json
import math
import os
import subprocess

import pytest

import taylorbound as tb


def test_interval_arithmetic():
    a = tb.Interval(1, 2)
    b = tb.Interval(3, 4)
    s = a + b
    assert (s.lo, s.hi) == (4.0, 6.0)
    assert 0.5 in tb.Interval(0, 1)
    with pytest.raises(tb.DivisionByZeroInterval):
        a / tb.Interval(-1, 1)
    e = tb.iv_exp(tb.Interval(0, 1))
    assert e.lo <= 1.0 and e.hi >= math.e


def test_parse_and_evaluate():
    e = tb.parse("x^2 + 3*x")
    assert str(e) == "x^2 + 3*x"
    assert e(2.0) == 10.0
    assert 10.0 in e.enclose(2.0)
    with pytest.raises(tb.SyntaxError):
        tb.parse("x +")
    with pytest.raises(tb.ParseError):
        tb.parse("y")


def test_taylor_and_remainder():
    p = tb.taylor_poly("exp(x)", 0.0, 2)
    assert p.coeffs == [1.0, 1.0, 0.5]
    assert p(1.0) == 2.5

    r = tb.remainder_enclosure("x^2", 0.0, 1, 0.5)
    assert (r.remainder.lo, r.remainder.hi) == (0.25, 0.25)

    v = tb.value_enclosure("exp(x)", 0.0, 3, 1.0)
    assert math.e in v
    assert v.width() <= 0.072


def test_order_search():
    assert tb.min_order("exp(x)", 0.0, tb.Interval(0, 1), 1e-10) == 13
    with pytest.raises(tb.NoConvergence):
        tb.min_order("exp(x)", 0.0, tb.Interval(0, 1), 1e-30, 4)


def test_dominance_and_xi():
    d = tb.dominates("sin(x)", "x", tb.Interval(0, 1.5))
    assert d.premise_ok and d.conclusion_ok and d.witness is None
    xi = tb.find_xi("x^3", 0.0, 1.0, 1, 1e-10)
    assert abs(xi.xi - 1 / 3) <= 1e-8


def test_run_cli_matches_binary():
    args = ["eval", "--func", "x^2", "--center", "0", "--order", "1", "--at", "0.5"]
    code, out, err = tb.run_cli(args)
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["results"]["remainder_lo"] == 0.25

    binary = os.environ.get("TAYLORBOUND_CLI")
    if binary:
        proc = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
        assert proc.returncode == 0
        assert proc.stdout == out


def test_cli_exit_codes():
    assert tb.run_cli(["parse", "--func", "x +"])[0] == 2
    assert tb.run_cli(["eval", "--func", "ln(x)", "--center", "-1", "--order", "1", "--at", "0"])[0] == 3
    assert tb.run_cli(["bogus"])[0] == 1
