"""Resultant-based elimination.

Resultants of parametrizations come out as ``c * P**e`` where ``P`` is the
minimal polynomial of the image and ``e`` is the generic number of parameter
values over a point.  The multiplicity is removed by extracting the largest
exact root (see :func:`perfect_power_root`), which only needs ring operations.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BothConstant,
    NonGenericProjection,
    NotMonic,
    NotSquarefree,
    VariableMismatch,
    ZeroPolynomial,
)
from .exact import canon
from .linalg import determinant_fraction_free
from .poly import NEG_INFINITY, MultiPoly, UniPoly, divrem, gcd_squarefree, interpolate

__all__ = [
    "BivariateMonic",
    "sylvester_matrix",
    "sylvester_resultant",
    "resultant",
    "perfect_power_root",
    "implicitize_plane",
    "graph_fiber_polynomial",
    "distinct_values_on_fiber",
]


@dataclass(frozen=True)
class BivariateMonic:
    """``t^d + a_1(x) t^(d-1) + ... + a_d(x)`` with ``a_j`` univariate in ``x``."""

    coeffs: tuple  # a_1 .. a_d as UniPoly in x
    x: str = "x"
    t: str = "t"

    @property
    def t_degree(self):
        return len(self.coeffs)

    @property
    def total_degree(self):
        d = self.t_degree
        return max([d] + [a.degree + d - j for j, a in enumerate(self.coeffs, 1) if a])

    def to_multipoly(self, variables=None):
        variables = tuple(variables or (self.x, self.t))
        d = self.t_degree
        terms = {(0, d): 1}
        for j, a in enumerate(self.coeffs, 1):
            for k, c in enumerate(a.coeffs):
                if c:
                    terms[(k, d - j)] = c
        return MultiPoly((self.x, self.t), terms).with_variables(variables)

    @classmethod
    def from_multipoly(cls, P, t, x):
        """Read a polynomial monic in ``t`` (up to a constant factor) whose
        coefficients involve only ``x``."""
        if not P:
            raise ZeroPolynomial("zero polynomial")
        extra = [v for v in P.used_variables() if v not in (t, x)]
        if extra:
            raise VariableMismatch(f"unexpected variables {extra}")
        if t not in P.variables:
            raise VariableMismatch(f"{t!r} does not occur")
        P = P.with_variables((x, t)) if x in P.variables else P.with_variables((t,))
        U = P.as_univariate(t)
        lc = U.lc
        if not lc.is_constant():
            raise NotMonic(f"leading coefficient in {t} is {lc}, not a constant")
        lc = lc.constant_value()
        d = U.degree
        coeffs = []
        for j in range(1, d + 1):
            c = U.coeffs[d - j].scale(Fraction(1) / lc)
            coeffs.append(c.to_unipoly(x) if c else UniPoly(x))
        return cls(tuple(coeffs), x, t)

    def __str__(self):
        return str(self.to_multipoly())


def sylvester_matrix(f, g):
    """Sylvester matrix of two UniPolys: ``deg g`` shifted rows of ``f`` then
    ``deg f`` shifted rows of ``g``, coefficients from the top degree down."""
    m, n = f.degree, g.degree
    size = m + n
    zero = 0
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - i - len(fc)))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - i - len(gc)))
    return rows


def _coefficient_vars(*polys):
    for p in polys:
        for c in p.coeffs:
            if isinstance(c, MultiPoly):
                return c.variables
    return None


def sylvester_resultant(f, g, var=None):
    """Resultant of ``f`` and ``g`` with respect to ``var``.

    ``f`` and ``g`` are UniPolys (coefficients scalars or MultiPolys) or
    MultiPolys together with the name of the variable to eliminate.  The
    result is a MultiPoly over the remaining variables.
    """
    if isinstance(f, MultiPoly):
        f = f.as_univariate(var)
    if isinstance(g, MultiPoly):
        g = g.as_univariate(var)
    if var is not None and (f.param != var or g.param != var):
        raise VariableMismatch(f"expected polynomials in {var!r}")
    if not f or not g:
        raise ZeroPolynomial("resultant with the zero polynomial")
    if f.degree == 0 and g.degree == 0:
        raise BothConstant(f"neither input involves {f.param!r}")
    cvars = _coefficient_vars(f, g)
    if cvars is None:
        return MultiPoly.constant(determinant_fraction_free(sylvester_matrix(f, g)))

    def lift(c):
        return c if isinstance(c, MultiPoly) else MultiPoly.constant(c, cvars)

    f = f.map_coeffs(lift)
    g = g.map_coeffs(lift)
    det = determinant_fraction_free(sylvester_matrix(f, g))
    return det if isinstance(det, MultiPoly) else MultiPoly.constant(det, cvars)


def resultant(f, g):
    """Resultant of two univariate polynomials over Q by the Euclidean recursion."""
    if not f or not g:
        return 0
    m, n = f.degree, g.degree
    if n == 0:
        return canon(Fraction(g.lc) ** m)
    if m == 0:
        return canon(Fraction(f.lc) ** n)
    result = Fraction(1)
    while True:
        m, n = f.degree, g.degree
        if n == 0:
            return canon(result * Fraction(g.lc) ** m)
        r = divrem(f, g)[1]
        if not r:
            return 0
        if (m * n) % 2:
            result = -result
        result *= Fraction(g.lc) ** (m - r.degree)
        f, g = g, r


def _divisors_desc(n):
    return [e for e in range(n, 0, -1) if n % e == 0]


def perfect_power_root(R):
    """Largest ``e`` and monic ``G`` with ``R == G**e``.

    ``R`` is a monic UniPoly whose coefficients are MultiPolys (or scalars).
    Returns ``(G, e)``; ``e == 1`` means ``R`` is not a proper power.
    """
    n = R.degree
    for e in _divisors_desc(n):
        if e == 1:
            break
        G = _try_root(R, e)
        if G is not None:
            return G, e
    return R, 1


def _try_root(R, e):
    n = R.degree
    d = n // e
    r = [R.coeffs[n - j] for j in range(n + 1)]  # r[0] == 1
    a = [1]
    for j in range(1, d + 1):
        acc = r[j] * j
        for k in range(1, j):
            w = (e + 1) * k - j
            if w and a[k] != 0 and r[j - k] != 0:
                acc = acc - a[k] * r[j - k] * w
        a.append(_scalar_div(acc, j * e))
    G = UniPoly(R.param, list(reversed(a)))
    return G if G**e == R else None


def _scalar_div(c, k):
    if isinstance(c, MultiPoly):
        return c.scale(Fraction(1, k))
    return canon(Fraction(c) / k)


def _make_monic(U):
    lc = U.lc
    if isinstance(lc, MultiPoly):
        if not lc.is_constant():
            return None
        lc = lc.constant_value()
    inv = Fraction(1) / lc
    return U.scale(canon(inv))


def implicitize_plane(p, q, out_vars=("x", "y")):
    """Implicit equation of the image of ``t -> (p(t), q(t))``.

    The result is squarefree and monic in the second output variable (or in
    the first when ``q`` is constant).
    """
    u, w = out_vars
    if p.param != q.param:
        raise VariableMismatch("parametrizations use different parameters")
    if p.degree < 1 and q.degree < 1:
        raise BothConstant("both coordinates are constant")
    if q.degree < 1:
        c = q.coeff(0)
        return MultiPoly((u, w), {(0, 1): 1, (0, 0): -c})
    if p.degree < 1:
        c = p.coeff(0)
        return MultiPoly((u, w), {(1, 0): 1, (0, 0): -c})
    vs = (u, w)
    U = MultiPoly.var(u, vs)
    W = MultiPoly.var(w, vs)
    f = p.map_coeffs(lambda c: MultiPoly.constant(c, vs)) - UniPoly(p.param, [U])
    g = q.map_coeffs(lambda c: MultiPoly.constant(c, vs)) - UniPoly(q.param, [W])
    R = sylvester_resultant(f, g).as_univariate(w)
    R = _make_monic(R)
    G, _ = perfect_power_root(R)
    return G.to_multipoly(vs)


def graph_fiber_polynomial(curve, h, ell, x="x", t="t"):
    """Minimal polynomial of ``{(ell(gamma(s)), h(s))}`` as a BivariateMonic.

    ``ell`` must realize the curve degree: ``deg ell(gamma) == deg gamma``.
    """
    L = ell.apply(curve)
    if L.degree != curve.degree:
        raise NonGenericProjection(
            f"linear form has degree {L.degree} on the curve, expected {curve.degree}"
        )
    if h.param != L.param:
        raise VariableMismatch("pullback and curve use different parameters")
    vs = (x, t)
    X = MultiPoly.var(x, vs)
    T = MultiPoly.var(t, vs)
    f = L.map_coeffs(lambda c: MultiPoly.constant(c, vs)) - UniPoly(L.param, [X])
    g = UniPoly(L.param, [T]) - h.map_coeffs(lambda c: MultiPoly.constant(c, vs))
    R = sylvester_resultant(f, g).as_univariate(t)
    R = _make_monic(R)
    if R is None or R.degree != L.degree:
        raise NonGenericProjection("leading t-coefficient of the resultant is not constant")
    G, _ = perfect_power_root(R)
    d = G.degree
    coeffs = []
    for j in range(1, d + 1):
        c = G.coeffs[d - j]
        c = c.with_variables((x,)) if isinstance(c, MultiPoly) else MultiPoly.constant(c, (x,))
        coeffs.append(c.to_unipoly(x) if c else UniPoly(x))
    return BivariateMonic(tuple(coeffs), x, t)


def distinct_values_on_fiber(u, h):
    """Number of distinct values of ``h`` on the roots of the squarefree ``u``.

    This is the degree of the squarefree part of ``Res_t(u(t), w - h(t))``,
    which has degree ``deg u`` in ``w`` and is recovered by interpolation.
    """
    if not u or u.degree < 1:
        raise NotSquarefree("fiber polynomial must have positive degree")
    g, _ = gcd_squarefree(u)
    if g.degree > 0:
        raise NotSquarefree(f"{u} has repeated roots")
    n = u.degree
    nodes = list(range(n + 1))
    values = [resultant(u, UniPoly(h.param, [w0]) - h) for w0 in nodes]
    R = interpolate("w", nodes, values)
    if R.degree == NEG_INFINITY:
        raise NotSquarefree("resultant vanished identically")
    _, sq = gcd_squarefree(R)
    return sq.degree
