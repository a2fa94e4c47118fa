"""Polynomially parametrized curves ``gamma: C -> C^m``."""

from dataclasses import dataclass
from fractions import Fraction
import math
import random

from .errors import (
    ArityMismatch,
    ConstantPolynomial,
    InconclusiveAfterRetries,
    InputError,
    NonGenericProjection,
    NotSquarefree,
    VariableMismatch,
)
from .elimination import distinct_values_on_fiber, sylvester_resultant
from .exact import canon
from .poly import MultiPoly, UniPoly, gcd_squarefree, poly_gcd

__all__ = [
    "ParametrizedCurve",
    "LinearForm",
    "ConeDirection",
    "NormalizationResult",
    "InjectivityResult",
    "MAX_RETRIES",
    "COEFF_RANGE",
    "seeded_rng",
    "curve_degree",
    "random_linear_form",
    "degree_realizing_form",
    "random_base_point",
    "normalization_check",
    "injectivity_check",
    "divided_difference",
    "graph_curve",
    "cone_direction",
    "rational_roots",
]

MAX_RETRIES = 8
COEFF_RANGE = 1000


def seeded_rng(seed, label):
    """Independent deterministic stream for one randomized procedure."""
    return random.Random(f"{seed}/{label}")


@dataclass(frozen=True)
class ParametrizedCurve:
    variables: tuple
    parameter: str
    gamma: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "gamma", tuple(self.gamma))
        if len(self.variables) != len(self.gamma):
            raise ArityMismatch(
                f"{len(self.variables)} coordinates but {len(self.gamma)} components"
            )
        if len(set(self.variables)) != len(self.variables):
            raise InputError("repeated coordinate name")
        if self.parameter in self.variables:
            raise InputError("parameter name collides with a coordinate name")
        for g in self.gamma:
            if g.param != self.parameter:
                raise VariableMismatch(
                    f"component {g} is not a polynomial in {self.parameter!r}"
                )
        if all(g.degree < 1 for g in self.gamma):
            raise ConstantPolynomial("every component of the parametrization is constant")

    @property
    def m(self):
        return len(self.gamma)

    @property
    def degree(self):
        return max(g.degree for g in self.gamma)

    def point(self, s):
        return tuple(canon(g(s)) for g in self.gamma)

    def pullback(self, F):
        from .poly import compose

        return compose(F.with_variables(self.variables), list(self.gamma))


@dataclass(frozen=True)
class LinearForm:
    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(canon(c) for c in self.coefficients)
        )
        if not any(self.coefficients):
            raise InputError("linear form with all coefficients zero")

    def apply(self, curve):
        if len(self.coefficients) != curve.m:
            raise ArityMismatch("linear form and curve dimensions differ")
        acc = UniPoly(curve.parameter)
        for c, g in zip(self.coefficients, curve.gamma):
            if c:
                acc = acc + g.scale(c)
        return acc

    def as_multipoly(self, variables):
        return MultiPoly(
            variables,
            {tuple(int(i == j) for j in range(len(variables))): c
             for i, c in enumerate(self.coefficients)},
        )


@dataclass(frozen=True)
class ConeDirection:
    """Nonzero vector up to scaling, stored with its first nonzero entry 1."""

    direction: tuple

    def __post_init__(self):
        v = tuple(Fraction(c) for c in self.direction)
        pivot = next((c for c in v if c), None)
        if pivot is None:
            raise InputError("zero vector is not a direction")
        object.__setattr__(self, "direction", tuple(canon(c / pivot) for c in v))

    def is_last_axis(self):
        return not any(self.direction[:-1])


@dataclass(frozen=True)
class NormalizationResult:
    ok: bool
    e: int


@dataclass(frozen=True)
class InjectivityResult:
    injective: bool
    witness: tuple = None


def curve_degree(c):
    return c.degree


def random_linear_form(rng, m):
    while True:
        coeffs = [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(m)]
        if any(coeffs):
            return LinearForm(tuple(coeffs))


def degree_realizing_form(curve, rng, retries=MAX_RETRIES):
    """Draw linear forms until one has degree ``deg gamma`` on the curve."""
    for _ in range(retries):
        ell = random_linear_form(rng, curve.m)
        if ell.apply(curve).degree == curve.degree:
            return ell
    raise NonGenericProjection(
        f"no degree-realizing linear form in {retries} draws"
    )


def random_base_point(rng):
    return Fraction(rng.randint(-COEFF_RANGE, COEFF_RANGE), rng.randint(1, 100))


def normalization_check(curve, seed=0):
    """Estimate the generic number ``e`` of parameters over a point of the image.

    A probe cuts the curve with ``ell1 = x0`` and counts the distinct image
    points among the ``deg gamma`` parameter roots by separating them with a
    second form ``ell2``.  Two valid probes are taken and the larger count wins,
    since an unlucky probe can only merge points, never split them.
    """
    rng = seeded_rng(seed, "normalization")
    n = curve.degree
    counts = []
    for _ in range(MAX_RETRIES):
        ell1 = random_linear_form(rng, curve.m)
        L = ell1.apply(curve)
        x0 = random_base_point(rng)
        ell2 = random_linear_form(rng, curve.m)
        if L.degree != n:
            continue
        u = L - x0
        try:
            count = distinct_values_on_fiber(u, ell2.apply(curve))
        except NotSquarefree:
            continue
        if n % count:
            continue
        counts.append(count)
        if len(counts) == 2:
            break
    if not counts:
        raise InconclusiveAfterRetries(
            f"normalization check: {MAX_RETRIES} probes were all degenerate"
        )
    e = n // max(counts)
    return NormalizationResult(ok=(e == 1), e=e)


def divided_difference(p, names=("s1", "s2")):
    """``(p(s1) - p(s2)) / (s1 - s2)`` as a MultiPoly in ``names``."""
    terms = {}
    for k, c in enumerate(p.coeffs):
        for i in range(k):
            e = (i, k - 1 - i)
            terms[e] = terms.get(e, 0) + c
    return MultiPoly(names, terms)


def _shifted(g):
    """``g(s + delta, s)`` viewed as a UniPoly in ``s`` over Q[delta]."""
    vs = ("delta", "s")
    s1 = MultiPoly(vs, {(1, 0): 1, (0, 1): 1})
    s2 = MultiPoly.var("s", vs)
    acc = MultiPoly.zero(vs)
    for (a, b), c in g.terms.items():
        acc = acc + (s1**a) * (s2**b) * c
    return acc.as_univariate("s")


def _strip_delta_power(D):
    """Drop the factor ``delta^r`` from a UniPoly in delta."""
    k = next(i for i, c in enumerate(D.coeffs) if c)
    return UniPoly(D.param, D.coeffs[k:])


def _difference_polynomial(ga, gb):
    """Polynomial in ``delta`` vanishing at every ``s1 - s2`` over a common zero."""
    R = sylvester_resultant(_shifted(ga), _shifted(gb))
    return R.with_variables(("delta",)).to_unipoly("delta") if R else UniPoly("delta")


def _combine(gs, coeffs):
    acc = MultiPoly.zero(gs[0].variables)
    for c, g in zip(coeffs, gs):
        if c:
            acc = acc + g * c
    return acc


def _has_constant_top(g):
    # leading coefficient in s of g(s + delta, s) is a nonzero constant
    return g and _shifted(g).lc.is_constant()


def injectivity_check(curve, seed=0):
    """Decide whether ``gamma`` glues two distinct parameter values.

    Common zeros of the divided differences off the diagonal are exactly the
    glued pairs; ramification points lie on the diagonal and do not count.
    Substituting ``s1 = s2 + delta`` and eliminating ``s2`` gives a polynomial
    in ``delta`` whose nonzero roots are the gluing offsets.  For two
    coordinates this is decided exactly; for more, random plane projections are
    intersected until the offset polynomials have no common nonzero root.
    """
    gs = [divided_difference(g) for g in curve.gamma]
    live = [(j, g) for j, g in enumerate(gs) if g]
    if any(g.is_constant() for _, g in live):
        return InjectivityResult(True)
    if len(live) == 1:
        j, g = live[0]
        return InjectivityResult(False, _search_witness(curve, [g]))
    if len(live) == 2:
        E = _offset_polynomial(live[0][1], live[1][1])
        if E is None or E.degree > 0:
            return InjectivityResult(False, _witness(curve, [g for _, g in live], E))
        return InjectivityResult(True)

    rng = seeded_rng(seed, "injectivity")
    live_gs = [g for _, g in live]
    common = None
    degenerate = 0
    stable = 0
    for _ in range(MAX_RETRIES):
        a = _combine(live_gs, [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in live_gs])
        b = _combine(live_gs, [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in live_gs])
        if not (_has_constant_top(a) and _has_constant_top(b)):
            continue
        E = _offset_polynomial(a, b)
        if E is None:
            degenerate += 1
            if degenerate == 2:
                return InjectivityResult(False, _witness(curve, live_gs, None))
            continue
        previous = common
        common = E if common is None else poly_gcd(common, E)
        if common.degree < 1:
            return InjectivityResult(True)
        if previous is not None and common.degree == previous.degree:
            stable += 1
            if stable == 2:
                return InjectivityResult(False, _witness(curve, live_gs, common))
    raise InconclusiveAfterRetries(
        f"injectivity check: {MAX_RETRIES} projections did not settle"
    )


def _offset_polynomial(ga, gb):
    """Squarefree offset polynomial with the ``delta`` factor removed, or None
    when the two divided differences share a component."""
    D = _difference_polynomial(ga, gb)
    if not D:
        return None
    E = _strip_delta_power(D)
    return gcd_squarefree(E)[1] if E.degree > 0 else E.monic()


def _witness(curve, gs, E):
    if E is None:
        return _search_witness(curve, gs)
    for delta in rational_roots(E):
        if delta == 0:
            continue
        common = None
        for g in gs:
            U = _shifted(g).map_coeffs(lambda c: c.evaluate((delta,)))
            common = U if common is None else poly_gcd(common, U)
        if common is None or common.degree < 1:
            continue
        for b in rational_roots(common):
            a = b + delta
            if curve.point(a) == curve.point(b):
                return (canon(a), canon(b))
    return None


def _search_witness(curve, gs, bound=12):
    """Look for a glued pair with a small integer first entry."""
    for k in range(bound + 1):
        for a in ((k, -k) if k else (0,)):
            common = None
            for g in gs:
                U = g.subs("s1", a).with_variables(("s2",)).to_unipoly("s2")
                common = U if common is None else poly_gcd(common, U)
            if common is None or common.degree < 1:
                continue
            for b in rational_roots(common):
                if b != a and curve.point(a) == curve.point(b):
                    return (canon(a), canon(b))
    return None


def _divisors(n, cap=10**10):
    n = abs(n)
    if n == 0 or n > cap:
        return None
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rational_roots(p):
    """Rational roots of a univariate polynomial, in descending order.

    Uses the rational root theorem; coefficients too large to factor by trial
    division yield only the root 0 if present.
    """
    if not p or p.degree < 1:
        return []
    coeffs = [Fraction(c) for c in p.coeffs]
    roots = set()
    k = next(i for i, c in enumerate(coeffs) if c)
    if k:
        roots.add(Fraction(0))
        coeffs = coeffs[k:]
    if len(coeffs) > 1:
        lcm = math.lcm(*(c.denominator for c in coeffs))
        ints = [int(c * lcm) for c in coeffs]
        num_div = _divisors(ints[0])
        den_div = _divisors(ints[-1])
        if num_div is not None and den_div is not None:
            q = UniPoly("z", ints)
            for a in num_div:
                for b in den_div:
                    for cand in (Fraction(a, b), Fraction(-a, b)):
                        if cand not in roots and q(cand) == 0:
                            roots.add(cand)
    return sorted(roots, reverse=True)


def graph_curve(c, h, name="w"):
    """The graph ``t -> (gamma(t), h(t))`` as a curve in one more coordinate."""
    if h.param != c.parameter:
        raise VariableMismatch("pullback uses a different parameter")
    while name in c.variables or name == c.parameter:
        name += "_"
    return ParametrizedCurve(c.variables + (name,), c.parameter, c.gamma + (h,))


def cone_direction(c):
    """Direction of the single line at infinity of a polynomial branch."""
    n = c.degree
    return ConeDirection(tuple(g.coeff(n) for g in c.gamma))
