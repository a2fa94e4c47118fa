from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from growthexp.errors import DivisionByZero, InputError
from growthexp.exact import canon, exact_quotient, parse_rational, rational_ops, render_rational

rationals = st.fractions(max_denominator=1000)


def test_add_example():
    assert rational_ops(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)


def test_canonical_storage():
    q = Fraction(2, 4)
    assert (q.numerator, q.denominator) == (1, 2)
    assert canon(Fraction(6, 3)) == 2 and type(canon(Fraction(6, 3))) is int


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        rational_ops(Fraction(1, 2), 0, "div")
    with pytest.raises(ZeroDivisionError):
        exact_quotient(3, 0)


def test_cmp_and_pow():
    assert rational_ops(Fraction(1, 3), Fraction(1, 2), "cmp") == -1
    assert rational_ops(Fraction(2, 3), Fraction(2, 3), "cmp") == 0
    assert rational_ops(Fraction(2, 3), 3, "pow") == Fraction(8, 27)
    assert rational_ops(Fraction(2, 3), -2, "pow") == Fraction(9, 4)


def test_rendering():
    assert render_rational(Fraction(-3, 6)) == "-1/2"
    assert render_rational(Fraction(4, 2)) == "2"
    assert parse_rational(" -7/21 ") == Fraction(-1, 3)
    with pytest.raises(InputError):
        parse_rational("1/0")
    with pytest.raises(InputError):
        parse_rational("one")


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    add = lambda u, v: rational_ops(u, v, "add")
    mul = lambda u, v: rational_ops(u, v, "mul")
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    if a:
        assert mul(a, rational_ops(1, a, "div")) == 1


@given(rationals)
def test_canon_idempotent(a):
    assert canon(canon(a)) == canon(a) == a


@given(rationals)
def test_render_parse_round_trip(a):
    assert parse_rational(render_rational(a)) == a


@given(st.integers(-10**30, 10**30), st.integers(-10**30, 10**30).filter(bool))
def test_big_integer_quotient(a, b):
    assert exact_quotient(a * b, b) == a
