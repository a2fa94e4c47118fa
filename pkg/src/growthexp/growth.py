"""Growth exponents, geometric degrees and the bounds relating them.

A function on a parametrized curve is handled through its pullback
``h = f(gamma(t))``.  For a rational function ``P/Q`` whose graph over the
curve is algebraic, ``h`` is a polynomial, and the growth exponent is
``deg h / deg gamma``.  The same number is recomputed independently by
eliminating the parameter and reading off ``max_j deg a_j / j`` from the
minimal polynomial of the projected graph.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
import math
import statistics

from .curve import (
    MAX_RETRIES,
    ConeDirection,
    ParametrizedCurve,
    cone_direction,
    degree_realizing_form,
    graph_curve,
    normalization_check,
    random_base_point,
    seeded_rng,
)
from .elimination import BivariateMonic, distinct_values_on_fiber, graph_fiber_polynomial
from .errors import (
    AllConstant,
    ConstantFunction,
    ConstantPolynomial,
    DenominatorVanishesOnCurve,
    GrowthError,
    InconclusiveAfterRetries,
    InputError,
    InvariantViolation,
    NoRepresentativeFound,
    NonGenericProjection,
    NotCHolomorphic,
    NotSquarefree,
    OverflowAtSample,
    VariableMismatch,
    ZeroPolynomial,
)
from .linalg import kernel_basis
from .poly import MultiPoly, UniPoly, compose, divrem, leading_form

__all__ = [
    "CurveFunction",
    "GrowthReport",
    "TWBound",
    "MappingReport",
    "FiberInjectivity",
    "DEFAULT_LADDER",
    "restrict",
    "growth_exponent",
    "geometric_degree",
    "delta",
    "growth_via_elimination",
    "fiber_polynomial",
    "tw_bound_check",
    "le_one_equivalences",
    "bezout_mapping_report",
    "fiber_injectivity_check",
    "rationalize",
    "enumerate_growth_exponents",
    "sample_growth_estimate",
    "graph_degree_of_polynomial",
    "full_report",
]

DEFAULT_LADDER = (Fraction(10**3), Fraction(10**4), Fraction(10**5), Fraction(10**6))


@dataclass(frozen=True)
class CurveFunction:
    """A function on a curve, certified by ``Q(gamma) * h == P(gamma)``.

    ``numerator`` and ``denominator`` are None for functions given directly by
    their pullback (see :meth:`from_pullback`).
    """

    curve: ParametrizedCurve
    pullback: UniPoly
    numerator: MultiPoly = None
    denominator: MultiPoly = None
    name: str = "f"

    @classmethod
    def from_pullback(cls, curve, h, name="f"):
        if h.param != curve.parameter:
            raise VariableMismatch("pullback uses a different parameter")
        return cls(curve, h, None, None, name)

    @property
    def is_constant(self):
        return self.pullback.degree < 1

    def power(self, n):
        P = self.numerator**n if self.numerator is not None else None
        Q = self.denominator**n if self.denominator is not None else None
        return CurveFunction(self.curve, self.pullback**n, P, Q, f"{self.name}^{n}")


def restrict(curve, P, Q, name="f"):
    """Restrict ``P/Q`` to the curve; succeed only when the pullback is a polynomial."""
    if not Q:
        raise ZeroPolynomial("denominator is the zero polynomial")
    P = P.with_variables(curve.variables)
    Q = Q.with_variables(curve.variables)
    num = compose(P, list(curve.gamma))
    den = compose(Q, list(curve.gamma))
    if not den:
        raise DenominatorVanishesOnCurve(f"{Q} vanishes identically on the curve")
    h, r = divrem(num, den)
    if r:
        raise NotCHolomorphic(
            f"({P})/({Q}) pulls back to a non-polynomial: remainder {r}"
        )
    return CurveFunction(curve, h, P, Q, name)


def growth_exponent(cf):
    if cf.is_constant:
        return Fraction(0)
    return Fraction(cf.pullback.degree, cf.curve.degree)


def geometric_degree(cf):
    if cf.is_constant:
        raise ConstantFunction("geometric degree of a constant function is undefined")
    return cf.pullback.degree


def delta(P):
    """``max_j deg a_j / j`` over the nonzero coefficients of a BivariateMonic."""
    best = Fraction(0)
    for j, a in enumerate(P.coeffs, 1):
        if a:
            best = max(best, Fraction(a.degree, j))
    return best


def fiber_polynomial(cf, seed=0):
    """Minimal polynomial of the graph projected by a random degree-realizing form.

    Returns ``(P, ell)``.  Forms are redrawn from the seeded stream when the
    projection turns out non-generic.
    """
    rng = seeded_rng(seed, "elimination")
    last = None
    for _ in range(MAX_RETRIES):
        try:
            ell = degree_realizing_form(cf.curve, rng)
            return graph_fiber_polynomial(cf.curve, cf.pullback, ell), ell
        except NonGenericProjection as exc:
            last = exc
    raise NonGenericProjection(f"after {MAX_RETRIES} retries: {last}")


def growth_via_elimination(cf, seed=0):
    P, _ = fiber_polynomial(cf, seed)
    return delta(P)


@dataclass(frozen=True)
class TWBound:
    bound: Fraction
    holds: bool


def tw_bound_check(cf):
    """Bound by graph degree minus curve degree plus one."""
    n = cf.curve.degree
    graph_deg = graph_curve(cf.curve, cf.pullback).degree
    bound = Fraction(graph_deg - n + 1)
    return TWBound(bound, growth_exponent(cf) <= bound)


def le_one_equivalences(cf, seed=0, fiber=None):
    """The four conditions equivalent to a growth exponent of at most 1.

    1. exponent <= 1;  2. curve degree == graph degree;
    3. the graph's direction at infinity is not the vertical axis;
    4. the fiber polynomial's leading form keeps the pure power of t.
    """
    if fiber is None:
        fiber, _ = fiber_polynomial(cf, seed)
    n = cf.curve.degree
    graph = graph_curve(cf.curve, cf.pullback)
    return (
        growth_exponent(cf) <= 1,
        n == graph.degree,
        not cone_direction(graph).is_last_axis(),
        fiber.total_degree == fiber.t_degree,
    )


@dataclass(frozen=True)
class MappingReport:
    geometric_degree: int
    growth_exponent: Fraction
    equality_holds: bool
    bezout_bound_holds: bool = None  # only meaningful for one component


def bezout_mapping_report(curve, components):
    """Degree report for ``f = (P_1/Q_1, ..., P_k/Q_k)`` on a curve.

    ``components`` holds ``(P, Q)`` pairs or ready CurveFunctions.
    """
    cfs = [
        c if isinstance(c, CurveFunction) else restrict(curve, c[0], c[1], f"f{i + 1}")
        for i, c in enumerate(components)
    ]
    if not cfs or all(cf.is_constant for cf in cfs):
        raise AllConstant("every component is constant")
    n = curve.degree
    d = max(max(cf.pullback.degree, 0) for cf in cfs)
    B = max(growth_exponent(cf) for cf in cfs)
    bezout = None
    if len(cfs) == 1:
        bezout = d <= n * growth_exponent(cfs[0])
    return MappingReport(d, B, d == n * B, bezout)


@dataclass(frozen=True)
class FiberInjectivity:
    success_rate: Fraction
    passed: bool
    trials_used: int


def fiber_injectivity_check(cf, seed=0, trials=100, threshold=Fraction(95, 100)):
    """Fraction of random fibers ``ell(gamma) = x0`` on which ``h`` is injective."""
    if cf.is_constant:
        raise ConstantFunction("fiber injectivity needs a nonconstant function")
    rng = seeded_rng(seed, "fiber-injectivity")
    n = cf.curve.degree
    used = hits = 0
    for _ in range(trials):
        try:
            ell = degree_realizing_form(cf.curve, rng)
        except NonGenericProjection:
            continue
        x0 = random_base_point(rng)
        u = ell.apply(cf.curve) - x0
        try:
            count = distinct_values_on_fiber(u, cf.pullback)
        except NotSquarefree:
            continue
        used += 1
        hits += count == n
    if not used:
        raise InconclusiveAfterRetries("every fiber probe was degenerate")
    rate = Fraction(hits, used)
    return FiberInjectivity(rate, rate >= threshold, used)


def _monomials(m, degree):
    """Exponent vectors of total degree <= ``degree`` in graded-lex order."""
    out = []
    for d in range(degree + 1):
        block = []
        for combo in combinations_with_replacement(range(m), d):
            e = [0] * m
            for i in combo:
                e[i] += 1
            block.append(tuple(e))
        out.extend(sorted(set(block), reverse=True))
    return out


class _PullbackCache:
    def __init__(self, curve):
        self.curve = curve
        self.cache = {}

    def __call__(self, e):
        if e not in self.cache:
            mono = MultiPoly(self.curve.variables, {e: 1})
            self.cache[e] = compose(mono, list(self.curve.gamma))
        return self.cache[e]


def rationalize(curve, h, max_num_degree):
    """Find ``(P, Q)`` with ``P(gamma) == h * Q(gamma)``, ``Q(gamma) != 0`` and
    ``deg Q < deg gamma``.

    Numerator degrees are tried from 0 up to ``max_num_degree``, and for each
    of them denominator degrees from 0 up to ``deg gamma - 1``.  The unknown
    coefficients solve a linear system over Q; the first kernel basis vector
    whose denominator does not vanish on the curve is returned, scaled so the
    denominator's leading coefficient is 1.
    """
    vs = curve.variables
    if not h:
        return MultiPoly.zero(vs), MultiPoly.constant(1, vs)
    n = curve.degree
    pull = _PullbackCache(curve)
    for dp in range(max_num_degree + 1):
        pmons = _monomials(curve.m, dp)
        for dq in range(n):
            qmons = _monomials(curve.m, dq)
            columns = [pull(e) for e in pmons] + [-(h * pull(e)) for e in qmons]
            rows = max(max(c.degree for c in columns if c), 0) + 1
            matrix = [[c.coeff(k) for c in columns] for k in range(rows)]
            for v in kernel_basis(matrix):
                qv = v[len(pmons):]
                Q = MultiPoly(vs, dict(zip(qmons, qv)))
                if not compose(Q, list(curve.gamma)):
                    continue
                P = MultiPoly(vs, dict(zip(pmons, v[: len(pmons)])))
                lead = Q.leading_term()[1]
                P, Q = P.scale(Fraction(1) / lead), Q.scale(Fraction(1) / lead)
                if compose(P, list(curve.gamma)) != h * compose(Q, list(curve.gamma)):
                    raise InvariantViolation("rationalize produced a non-certificate")
                return P, Q
    raise NoRepresentativeFound(
        f"no representative with numerator degree <= {max_num_degree}"
    )


def enumerate_growth_exponents(curve, max_pullback_degree):
    """Exponents ``k / deg gamma`` realized by pullbacks of degree 1..max."""
    n = curve.degree
    return sorted({Fraction(k, n) for k in range(1, max_pullback_degree + 1)})


def _float_horner(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + float(c)
    return acc


def sample_growth_estimate(cf, magnitudes=DEFAULT_LADDER):
    """Slope of ``log|h(t)|`` against ``log max_j |gamma_j(t)|`` at real ``t``.

    Floating point on purpose: this is the numerical oracle for the exact
    exponent, and the slope also bounds ``|f|`` from below on the curve.
    """
    if cf.is_constant:
        raise ConstantFunction("sampling needs a nonconstant function")
    ts = [Fraction(m) for m in magnitudes]
    if len(ts) < 2 or any(b <= a for a, b in zip(ts, ts[1:])) or ts[-1] < 10**6:
        raise InputError("magnitudes must increase and reach at least 10^6")
    xs, ys = [], []
    for t in ts:
        tf = float(t)
        hv = abs(_float_horner(cf.pullback.coeffs, tf))
        gv = max(abs(_float_horner(g.coeffs, tf)) for g in cf.curve.gamma)
        if not (math.isfinite(hv) and math.isfinite(gv)):
            raise OverflowAtSample(f"floating overflow at t = {t}")
        if hv == 0 or gv == 0:
            raise OverflowAtSample(f"sample t = {t} hits a zero; use other magnitudes")
        xs.append(math.log(gv))
        ys.append(math.log(hv))
    return statistics.linear_regression(xs, ys).slope


def graph_degree_of_polynomial(F):
    """Degree of the graph of a nonconstant polynomial, which equals ``deg F``."""
    if F.is_constant():
        raise ConstantPolynomial("graph degree needs a nonconstant polynomial")
    name = "t"
    while name in F.variables:
        name += "_"
    G = MultiPoly.var(name, (name,) + F.variables) - F.with_variables((name,) + F.variables)
    top = leading_form(G)
    if top.degree != F.degree:
        raise InvariantViolation("degree of t - F differs from degree of F")
    return F.degree


@dataclass(frozen=True)
class GrowthReport:
    name: str
    pullback: UniPoly
    growth_exponent: Fraction
    geometric_degree: int  # None for constant functions
    curve_degree: int
    graph_degree: int
    tw_bound: Fraction
    tw_bound_holds: bool
    bezout_equality_holds: bool  # None for constant functions
    le_one_flags: tuple
    delta_cross_check: Fraction
    cone_direction_graph: ConeDirection
    sample_estimate: float = None
    fiber: BivariateMonic = field(default=None, compare=False, repr=False)

    def to_json(self):
        return {
            "name": self.name,
            "pullback": str(self.pullback),
            "growth_exponent": str(self.growth_exponent),
            "geometric_degree": self.geometric_degree,
            "curve_degree": self.curve_degree,
            "graph_degree": self.graph_degree,
            "tw_bound": str(self.tw_bound),
            "tw_bound_holds": self.tw_bound_holds,
            "delta_cross_check": str(self.delta_cross_check),
            "le_one_flags": list(self.le_one_flags),
            "bezout_equality_holds": self.bezout_equality_holds,
            "sample_estimate": self.sample_estimate,
        }


def _stage(name, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except GrowthError as exc:
        # keep the exception type (and so its exit code); prefix the stage
        exc.args = (f"{name}: {exc}",)
        raise


def report_for(cf, seed=0, check_normalization=True, sample=True, strict=True):
    """Assemble a GrowthReport for an existing CurveFunction.

    With ``strict`` a failed consistency check raises InvariantViolation;
    otherwise the caller inspects :func:`consistency_checks` itself.
    """
    curve = cf.curve
    if check_normalization:
        norm = _stage("normalization", normalization_check, curve, seed)
        if not norm.ok:
            raise InputError(
                f"normalization: parametrization is {norm.e}-to-1, not generically injective"
            )
    B = growth_exponent(cf)
    n = curve.degree
    d = None if cf.is_constant else geometric_degree(cf)
    graph = graph_curve(curve, cf.pullback)
    tw = tw_bound_check(cf)
    fiber, _ = _stage("elimination", fiber_polynomial, cf, seed)
    cross = delta(fiber)
    flags = le_one_equivalences(cf, seed, fiber=fiber)
    estimate = None
    if sample and not cf.is_constant:
        estimate = _stage("sampling", sample_growth_estimate, cf)
    report = GrowthReport(
        name=cf.name,
        pullback=cf.pullback,
        growth_exponent=B,
        geometric_degree=d,
        curve_degree=n,
        graph_degree=graph.degree,
        tw_bound=tw.bound,
        tw_bound_holds=tw.holds,
        bezout_equality_holds=None if d is None else d == n * B,
        le_one_flags=flags,
        delta_cross_check=cross,
        cone_direction_graph=cone_direction(graph),
        sample_estimate=estimate,
        fiber=fiber,
    )
    for check, ok in consistency_checks(report) if strict else ():
        if not ok:
            raise InvariantViolation(f"{cf.name}: {check} failed")
    return report


def consistency_checks(report):
    """Named invariants every report must satisfy."""
    n = report.curve_degree
    B = report.growth_exponent
    checks = [
        ("delta_cross_check", report.delta_cross_check == B),
        ("tw_bound", report.tw_bound_holds),
        ("le_one_coherence", len(set(report.le_one_flags)) == 1),
        ("denominator_divides_degree", n % B.denominator == 0),
    ]
    if report.geometric_degree is not None:
        checks.append(("curve_equality", report.bezout_equality_holds))
    return checks


def full_report(curve, P, Q, seed=0, name="f", sample=True):
    cf = _stage("restrict", restrict, curve, P, Q, name)
    return report_for(cf, seed, sample=sample)
