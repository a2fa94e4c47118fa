"""Exact polynomial rings.

:class:`MultiPoly` is a sparse multivariate polynomial over the rationals with an
explicit, ordered variable list.  :class:`UniPoly` is a dense univariate
polynomial whose coefficients are exact scalars or :class:`MultiPoly` values,
which is how polynomials in several variables are viewed as polynomials in one
distinguished variable for elimination.

Integral coefficients are stored as ``int`` and the rest as ``Fraction``; see
:func:`growthexp.exact.canon`.
"""

from fractions import Fraction
from itertools import zip_longest

from .errors import (
    ArityMismatch,
    DivisionByZero,
    NameCollision,
    VariableMismatch,
    ZeroPolynomial,
)
from .exact import canon, exact_quotient, render_rational

NEG_INFINITY = float("-inf")

__all__ = [
    "NEG_INFINITY",
    "MultiPoly",
    "UniPoly",
    "ring_ops",
    "divrem",
    "poly_gcd",
    "gcd_squarefree",
    "squarefree_part",
    "compose",
    "evaluate",
    "homogenize",
    "leading_form",
    "interpolate",
]


def _grlex_key(exps):
    return (sum(exps), exps)


def _add_exps(a, b):
    return tuple(x + y for x, y in zip(a, b))


class MultiPoly:
    """Sparse polynomial in ``variables`` with rational coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients.  Instances are
    immutable; every operation returns a new polynomial.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise NameCollision(f"repeated variable in {variables}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ArityMismatch(
                    f"exponent vector {exps} does not match variables {variables}"
                )
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = canon(c)
            if c:
                clean[exps] = canon(clean.get(exps, 0) + c)
                if not clean[exps]:
                    del clean[exps]
        self.variables = variables
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables, terms):
        # terms already canonical: exponent tuples of the right length, no zeros
        p = object.__new__(cls)
        p.variables = variables
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, variables=()):
        variables = tuple(variables)
        c = canon(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, name, variables):
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatch(f"{name!r} not among {variables}")
        exps = tuple(int(v == name) for v in variables)
        return cls._raw(variables, {exps: 1})

    @classmethod
    def zero(cls, variables=()):
        return cls._raw(tuple(variables), {})

    # -- inspection -------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (
            len(self.terms) == 1 and not any(next(iter(self.terms)))
        )

    def constant_value(self):
        """The constant term (0 when absent)."""
        return self.terms.get((0,) * len(self.variables), 0)

    @property
    def degree(self):
        if not self.terms:
            return NEG_INFINITY
        return max(sum(e) for e in self.terms)

    def degree_in(self, name):
        i = self._index(name)
        if not self.terms:
            return NEG_INFINITY
        return max(e[i] for e in self.terms)

    def _index(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise VariableMismatch(f"{name!r} not among {self.variables}") from None

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    # -- variable bookkeeping ---------------------------------------------

    def with_variables(self, variables):
        """Re-express over ``variables``, which must contain every variable in use."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        if len(set(variables)) != len(variables):
            raise NameCollision(f"repeated variable in {variables}")
        used = self.used_variables()
        missing = [v for v in used if v not in variables]
        if missing:
            raise VariableMismatch(f"variables {missing} are in use")
        pos = {v: i for i, v in enumerate(self.variables)}
        idx = [pos.get(v) for v in variables]
        terms = {
            tuple(e[i] if i is not None else 0 for i in idx): c
            for e, c in self.terms.items()
        }
        return MultiPoly._raw(variables, terms)

    def used_variables(self):
        return tuple(
            v for i, v in enumerate(self.variables) if any(e[i] for e in self.terms)
        )

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise VariableMismatch(
                    f"variables differ: {self.variables} vs {other.variables}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.variables)
        return NotImplemented

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = canon(s + c)
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return MultiPoly._raw(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        get = terms.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = get(e, 0) + c1 * c2
        return MultiPoly._raw(
            self.variables, {e: canon(c) for e, c in terms.items() if c}
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = canon(c)
        if not c:
            return MultiPoly.zero(self.variables)
        return MultiPoly._raw(
            self.variables, {e: canon(v * c) for e, v in self.terms.items()}
        )

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, other):
        """Quotient of a division known to be exact; raises ArithmeticError otherwise."""
        other = self._coerce(other)
        if not other:
            raise DivisionByZero("division by the zero polynomial")
        if other.is_constant():
            c = other.constant_value()
            return MultiPoly._raw(
                self.variables,
                {e: exact_quotient(v, c) for e, v in self.terms.items()},
            )
        lead_e, lead_c = other.leading_term()
        rest = [(e, c) for e, c in other.terms.items() if e != lead_e]
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem, key=_grlex_key)
            shift = tuple(a - b for a, b in zip(e, lead_e))
            if any(s < 0 for s in shift):
                raise ArithmeticError("polynomial division is not exact")
            q = exact_quotient(rem.pop(e), lead_c)
            quot[shift] = q
            for e2, c2 in rest:
                k = _add_exps(shift, e2)
                v = canon(rem.get(k, 0) - q * c2)
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return MultiPoly._raw(self.variables, quot)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            if self.variables == other.variables:
                return self.terms == other.terms
            return False
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, point):
        return evaluate(self, point)

    def subs(self, name, value):
        """Substitute a scalar for ``name``; the result drops that variable."""
        i = self._index(name)
        variables = self.variables[:i] + self.variables[i + 1 :]
        terms = {}
        for e, c in self.terms.items():
            k = e[:i] + e[i + 1 :]
            terms[k] = terms.get(k, 0) + c * value ** e[i]
        return MultiPoly(variables, terms)

    def homogeneous_part(self, degree):
        return MultiPoly._raw(
            self.variables, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def as_univariate(self, name):
        """View as a :class:`UniPoly` in ``name`` with MultiPoly coefficients."""
        i = self._index(name)
        rest = self.variables[:i] + self.variables[i + 1 :]
        buckets = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + e[i + 1 :]] = c
        top = max(buckets) if buckets else -1
        coeffs = [
            MultiPoly._raw(rest, buckets.get(k, {})) for k in range(top + 1)
        ]
        return UniPoly(name, coeffs)

    def to_unipoly(self, param=None):
        """Convert a polynomial in at most one used variable to a UniPoly over Q."""
        used = self.used_variables()
        if len(used) > 1:
            raise VariableMismatch(f"not univariate: uses {used}")
        if not used:
            return UniPoly(param or "t", [self.constant_value()])
        i = self.variables.index(used[0])
        coeffs = [0] * (max(e[i] for e in self.terms) + 1)
        for e, c in self.terms.items():
            coeffs[e[i]] = c
        return UniPoly(param or used[0], coeffs)

    # -- rendering --------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.variables, e)
                if k
            )
            mag = -c if c < 0 else c
            if not mono:
                body = render_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{render_rational(mag)}*{mono}"
            if idx == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.variables!r}, {str(self)!r})"


class UniPoly:
    """Dense univariate polynomial in ``param``; coefficients low to high.

    Coefficients are exact scalars or MultiPoly values.  Trailing zeros are
    stripped, so the zero polynomial has an empty coefficient tuple and degree
    :data:`NEG_INFINITY`.
    """

    __slots__ = ("param", "coeffs")

    def __init__(self, param, coeffs=()):
        cs = [c if isinstance(c, MultiPoly) else canon(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.param = param
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, param, degree, c=1):
        return cls(param, [0] * degree + [c])

    @classmethod
    def identity(cls, param):
        return cls(param, [0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _check(self, other):
        if isinstance(other, UniPoly):
            if other.param != self.param:
                raise VariableMismatch(
                    f"parameters differ: {self.param!r} vs {other.param!r}"
                )
            return other
        return UniPoly(self.param, [other])

    def __add__(self, other):
        other = self._check(other)
        return UniPoly(
            self.param,
            [a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)],
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.param, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return self.scale(other)
        other = self._check(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly(self.param)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.param, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        return UniPoly(self.param, [a * c for a in self.coeffs])

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = UniPoly(self.param, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.param == other.param and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, MultiPoly)):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.param, self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return UniPoly(self.param, [k * c for k, c in enumerate(self.coeffs)][1:])

    def compose(self, inner):
        """Substitute the polynomial ``inner`` for the parameter."""
        acc = UniPoly(inner.param)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def monic(self):
        lc = self.lc
        return UniPoly(self.param, [exact_quotient(c, lc) for c in self.coeffs])

    def map_coeffs(self, fn):
        return UniPoly(self.param, [fn(c) for c in self.coeffs])

    def to_multipoly(self, variables=None):
        """Flatten into a MultiPoly over ``variables`` (default: coefficient
        variables followed by the parameter)."""
        inner = ()
        for c in self.coeffs:
            if isinstance(c, MultiPoly):
                inner = c.variables
                break
        own = inner + (self.param,)
        terms = {}
        for k, c in enumerate(self.coeffs):
            if isinstance(c, MultiPoly):
                if c.variables != inner:
                    raise VariableMismatch("coefficient variables differ")
                for e, v in c.terms.items():
                    terms[e + (k,)] = v
            elif c:
                terms[(0,) * len(inner) + (k,)] = c
        p = MultiPoly(own, terms)
        return p if variables is None else p.with_variables(variables)

    def __str__(self):
        if all(not isinstance(c, MultiPoly) for c in self.coeffs):
            return str(self.to_multipoly((self.param,)))
        return str(self.to_multipoly())

    def __repr__(self):
        return f"UniPoly({self.param!r}, {str(self)!r})"


def ring_ops(p, q, op):
    """Apply ``op`` in {add, sub, mul, scale} to two polynomials (or a
    polynomial and a scalar for ``scale``)."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        if isinstance(p, MultiPoly) and not isinstance(q, MultiPoly):
            raise VariableMismatch("mul expects two polynomials of the same kind")
        return p * q
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown operation {op!r}")


def divrem(p, q):
    """Euclidean division of univariate polynomials over the rationals."""
    if p.param != q.param:
        raise VariableMismatch(f"parameters differ: {p.param!r} vs {q.param!r}")
    if not q:
        raise DivisionByZero("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lc = q.coeffs[-1]
    if len(rem) <= dq:
        return UniPoly(p.param), p
    quot = [0] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if not c:
            continue
        c = exact_quotient(c, lc)
        quot[k - dq] = c
        for j, b in enumerate(q.coeffs):
            rem[k - dq + j] = canon(rem[k - dq + j] - c * b)
    return UniPoly(p.param, quot), UniPoly(p.param, rem[:dq])


def poly_gcd(p, q):
    """Monic greatest common divisor over the rationals (zero if both are zero)."""
    a, b = p, q
    while b:
        a, b = b, divrem(a, b)[1]
    return a.monic() if a else a


def gcd_squarefree(p):
    """Return ``(gcd(p, p'), squarefree part of p)``, both monic."""
    if not p:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if not g:  # p constant: p' = 0, gcd(p, 0) = p
        g = p.monic()
        return g, UniPoly(p.param, [1])
    sq, r = divrem(p, g)
    assert not r
    return g, sq.monic()


def squarefree_part(p):
    return gcd_squarefree(p)[1]


def compose(F, args):
    """Substitute univariate polynomials ``args`` for the variables of ``F``."""
    if len(args) != len(F.variables):
        raise ArityMismatch(
            f"{len(F.variables)} variables but {len(args)} arguments"
        )
    param = args[0].param if args else "t"
    for a in args:
        if a.param != param:
            raise VariableMismatch("arguments use different parameters")
    powers = [[UniPoly(param, [1])] for _ in args]

    def power(j, k):
        cache = powers[j]
        while len(cache) <= k:
            cache.append(cache[-1] * args[j])
        return cache[k]

    acc = UniPoly(param)
    for e, c in F.terms.items():
        term = UniPoly(param, [c])
        for j, k in enumerate(e):
            if k:
                term = term * power(j, k)
        acc = acc + term
    return acc


def evaluate(p, point):
    """Exact value of a MultiPoly at ``point`` (or a UniPoly at a 1-point)."""
    if isinstance(p, UniPoly):
        if len(point) != 1:
            raise ArityMismatch("univariate polynomial takes one value")
        v = p(point[0])
        return canon(v) if isinstance(v, (int, Fraction)) else v
    if len(point) != len(p.variables):
        raise ArityMismatch(
            f"{len(p.variables)} variables but {len(point)} values"
        )
    total = 0
    for e, c in p.terms.items():
        v = c
        for x, k in zip(point, e):
            if k:
                v = v * x**k
        total = total + v
    return canon(total) if isinstance(total, (int, Fraction)) else total


def homogenize(P, new_var):
    """Homogenization with ``new_var`` prepended to the variable list."""
    if not P:
        raise ZeroPolynomial("cannot homogenize the zero polynomial")
    if new_var in P.variables:
        raise NameCollision(f"{new_var!r} already occurs in {P.variables}")
    d = P.degree
    return MultiPoly._raw(
        (new_var,) + P.variables,
        {(d - sum(e),) + e: c for e, c in P.terms.items()},
    )


def leading_form(P):
    """Homogeneous part of maximal degree."""
    if not P:
        raise ZeroPolynomial("zero polynomial has no leading form")
    return P.homogeneous_part(P.degree)


def interpolate(param, xs, ys):
    """Lagrange interpolation through distinct rational nodes (Newton form)."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    acc = UniPoly(param)
    for i in range(n - 1, -1, -1):
        acc = acc * UniPoly(param, [-xs[i], 1]) + coef[i]
    return acc
