"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | factor
    factor := base ('^' uint)?
    base   := uint ('/' uint)? | name | '(' expr ')'

Whitespace is ignored and juxtaposition is an error, so ``2x`` is rejected.
Error offsets count bytes of the UTF-8 encoded source.
"""

from dataclasses import dataclass
from fractions import Fraction
import re

from .errors import ExpressionSyntaxError, UnknownVariable
from .exact import canon
from .poly import MultiPoly

__all__ = [
    "Num",
    "Var",
    "Neg",
    "Add",
    "Sub",
    "Mul",
    "Pow",
    "Group",
    "parse_expression",
    "lower",
    "parse_poly",
    "parse_unipoly",
]


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Group:
    inner: object


_TOKEN = re.compile(rb"\s*(?:(?P<uint>[0-9]+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")
_SPACE = re.compile(rb"\s*")


def _tokenize(data):
    tokens = []
    pos = 0
    while True:
        pos = _SPACE.match(data, pos).end()
        if pos == len(data):
            break
        m = _TOKEN.match(data, pos)
        if not m:
            ch = data[pos:].decode("utf-8", "replace")[0]
            raise ExpressionSyntaxError(f"unexpected character {ch!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind).decode("ascii"), start))
        pos = m.end()
    tokens.append(("end", "", len(data)))
    return tokens


class _Parser:
    def __init__(self, src, allowed):
        self.tokens = _tokenize(src.encode("utf-8"))
        self.i = 0
        self.allowed = allowed

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, text, pos = self.take()
        if kind != "op" or text != op:
            raise ExpressionSyntaxError(f"expected {op!r}, found {text or 'end of input'!r}", pos)

    def expr(self):
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            node = Mul(node, self.unary())
        return node

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        return self.factor()

    def factor(self):
        node = self.base()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, text, pos = self.take()
            if kind != "uint":
                raise ExpressionSyntaxError("exponent must be a nonnegative integer", pos)
            node = Pow(node, int(text))
        return node

    def base(self):
        kind, text, pos = self.take()
        if kind == "uint":
            value = Fraction(int(text))
            if self.peek()[:2] == ("op", "/"):
                self.take()
                k2, t2, p2 = self.take()
                if k2 != "uint":
                    raise ExpressionSyntaxError("denominator must be an unsigned integer", p2)
                if int(t2) == 0:
                    raise ExpressionSyntaxError("zero denominator", p2)
                value /= int(t2)
            return Num(value)
        if kind == "name":
            if self.allowed is not None and text not in self.allowed:
                raise UnknownVariable(text, pos)
            return Var(text)
        if (kind, text) == ("op", "("):
            inner = self.expr()
            self.expect_op(")")
            return Group(inner)
        raise ExpressionSyntaxError(f"unexpected {text or 'end of input'!r}", pos)


def parse_expression(src, allowed_vars=None):
    """Parse ``src`` into an expression tree; names must be in ``allowed_vars``."""
    allowed = None if allowed_vars is None else set(allowed_vars)
    p = _Parser(src, allowed)
    node = p.expr()
    kind, text, pos = p.peek()
    if kind != "end":
        raise ExpressionSyntaxError(f"unexpected {text!r}", pos)
    return node


def lower(node, variables):
    """Evaluate an expression tree to a MultiPoly over ``variables``."""
    vs = tuple(variables)
    if isinstance(node, Num):
        return MultiPoly.constant(canon(node.value), vs)
    if isinstance(node, Var):
        return MultiPoly.var(node.name, vs)
    if isinstance(node, Neg):
        return -lower(node.operand, vs)
    if isinstance(node, Group):
        return lower(node.inner, vs)
    if isinstance(node, Pow):
        return lower(node.base, vs) ** node.exponent
    a, b = lower(node.left, vs), lower(node.right, vs)
    if isinstance(node, Add):
        return a + b
    if isinstance(node, Sub):
        return a - b
    return a * b


def parse_poly(src, variables):
    return lower(parse_expression(src, variables), variables)


def parse_unipoly(src, param):
    return parse_poly(src, (param,)).to_unipoly(param)
