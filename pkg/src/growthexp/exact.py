"""Exact scalars.

Python integers are already unbounded, and :class:`fractions.Fraction` keeps
rationals reduced with a positive denominator, so both are used directly.
Polynomial code stores integral coefficients as plain ``int`` (a subset of the
rationals) because integer arithmetic is several times faster than
``Fraction`` arithmetic; :func:`canon` performs that normalization.
"""

from fractions import Fraction
import operator

from .errors import DivisionByZero, InputError

Rational = Fraction

__all__ = [
    "Rational",
    "canon",
    "as_rational",
    "parse_rational",
    "render_rational",
    "rational_ops",
    "exact_quotient",
]


def canon(c):
    """Return ``c`` as an ``int`` when integral, otherwise as a reduced Fraction."""
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):  # bool and other int subclasses
        return int(c)
    raise TypeError(f"not an exact scalar: {c!r}")


def as_rational(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(int(c))
    if isinstance(c, str):
        return parse_rational(c)
    raise TypeError(f"not an exact scalar: {c!r}")


def parse_rational(text):
    """Parse ``"p/q"``, an integer, or a finite decimal such as ``"-0.125"``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational literal {text!r}") from exc


def render_rational(a):
    """Render as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(as_rational(a))


def exact_quotient(a, b):
    if b == 0:
        raise DivisionByZero("division by zero")
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
    return canon(Fraction(a) / b)


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
}


def rational_ops(a, b, op):
    """Apply ``op`` in {add, sub, mul, div, cmp, pow} to two exact scalars.

    ``cmp`` returns -1, 0 or 1.  Fractions compare by cross-multiplication, so
    no floating approximation is ever involved.  For ``pow`` the exponent ``b``
    must be an integer.
    """
    a = as_rational(a)
    if op == "pow":
        if isinstance(b, Fraction) and b.denominator != 1:
            raise InputError("pow exponent must be an integer")
        b = int(b)
        if b < 0 and a == 0:
            raise DivisionByZero("zero to a negative power")
        return a**b
    b = as_rational(b)
    if op == "div":
        if b == 0:
            raise DivisionByZero("division by zero")
        return a / b
    if op == "cmp":
        return (a > b) - (a < b)
    try:
        return _OPS[op](a, b)
    except KeyError:
        raise InputError(f"unknown operation {op!r}") from None
