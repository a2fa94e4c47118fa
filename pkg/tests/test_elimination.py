import random

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import random_curve, random_unipoly, to_sympy
from growthexp.curve import LinearForm, ParametrizedCurve
from growthexp.elimination import (
    BivariateMonic,
    distinct_values_on_fiber,
    graph_fiber_polynomial,
    implicitize_plane,
    perfect_power_root,
    resultant,
    sylvester_resultant,
)
from growthexp.errors import BothConstant, NonGenericProjection, NotMonic, NotSquarefree
from growthexp.poly import MultiPoly, UniPoly, compose, gcd_squarefree

T = UniPoly.identity("t")
CUSP = ParametrizedCurve(("x", "y"), "t", (T**2, T**3))
XYT = ("x", "y", "t")
x, y, t = (MultiPoly.var(v, XYT) for v in XYT)
seeds = st.integers(0, 10**9)


def test_sylvester_examples():
    R = sylvester_resultant(t**2 - x, t**3 - y, "t")
    assert R.with_variables(("x", "y")) == MultiPoly.var("y", ("x", "y")) ** 2 - MultiPoly.var("x", ("x", "y")) ** 3
    assert sylvester_resultant(T**2 - 1, 2 * T) == -4
    f = t**3 + x * t + y
    assert not sylvester_resultant(f, f, "t")
    with pytest.raises(BothConstant):
        sylvester_resultant(UniPoly("t", [3]), UniPoly("t", [5]))


def test_euclidean_resultant_examples():
    assert resultant(T**2 - 1, 2 * T) == -4
    assert resultant(T - 3, T**2 + 1) == 10
    assert resultant(T**2 - 1, T - 1) == 0


def test_implicitize_examples():
    F = implicitize_plane(T**2, T**3)
    assert not compose(F, [T**2, T**3])
    u, w = (MultiPoly.var(v, ("x", "y")) for v in ("x", "y"))
    assert F in (w**2 - u**3, u**3 - w**2)
    G = implicitize_plane(T, T**2, ("u", "w"))
    uw = ("u", "w")
    assert G == MultiPoly.var("w", uw) - MultiPoly.var("u", uw) ** 2
    H = implicitize_plane(T, UniPoly("t", [5]), ("u", "w"))
    assert H == MultiPoly.var("w", uw) - 5
    with pytest.raises(BothConstant):
        implicitize_plane(UniPoly("t", [1]), UniPoly("t", [2]))


def test_implicitize_removes_multiplicity():
    F = implicitize_plane(T**2, T**4)
    vs = ("x", "y")
    assert F == MultiPoly.var("y", vs) - MultiPoly.var("x", vs) ** 2


def test_graph_fiber_examples():
    P = graph_fiber_polynomial(CUSP, T, LinearForm((1, 1)))
    assert P.t_degree == 3
    assert [str(a) for a in P.coeffs] == ["1", "0", "-x"]
    C = graph_fiber_polynomial(CUSP, UniPoly("t", [7]), LinearForm((2, 3)))
    assert str(C) == "t - 7"
    with pytest.raises(NonGenericProjection):
        graph_fiber_polynomial(CUSP, T, LinearForm((1, 0)))


def test_distinct_values_examples():
    assert distinct_values_on_fiber(T**3 + T**2 - 2, T) == 3
    assert distinct_values_on_fiber(T**2 - 1, T**2) == 1
    assert distinct_values_on_fiber(T - 5, T**4 + T) == 1
    with pytest.raises(NotSquarefree):
        distinct_values_on_fiber((T - 1) ** 2, T)


def test_bivariate_monic_reading():
    P = BivariateMonic.from_multipoly(2 * t**2 - 2 * x**3, "t", "x")
    assert str(P) == "-x^3 + t^2"
    assert P.total_degree == 3 and P.t_degree == 2
    with pytest.raises(NotMonic):
        BivariateMonic.from_multipoly(x * t**2 - 1, "t", "x")


def test_perfect_power_root():
    base = T**2 - 3 * T + 1
    assert perfect_power_root(base**3) == (base, 3)
    assert perfect_power_root(base * (T - 1)) == (base * (T - 1), 1)


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_implicit_equation_vanishes(seed):
    rng = random.Random(seed)
    p = random_unipoly(rng, rng.randint(0, 4))
    q = random_unipoly(rng, rng.randint(1, 4))
    F = implicitize_plane(p, q)
    assert not compose(F, [p, q])


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_resultant_matches_sympy_and_degree_bound(seed):
    rng = random.Random(seed)
    vs = ("x", "t")
    X, Tm = (MultiPoly.var(v, vs) for v in vs)
    f = random_unipoly(rng, rng.randint(1, 4)).to_multipoly(("t",)).with_variables(vs) - X
    g = random_unipoly(rng, rng.randint(1, 3)).to_multipoly(("t",)).with_variables(vs) + X**2 * Tm
    R = sylvester_resultant(f, g, "t")
    # sympy.resultant flips the sign when deg f < deg g; its Sylvester matrix does not
    expect = sylvester(to_sympy(f), to_sympy(g), sympy.Symbol("t")).det()
    assert sympy.expand(to_sympy(R) - expect) == 0
    df, dg = f.degree_in("t"), g.degree_in("t")
    assert not R or R.degree <= df * g.degree + dg * f.degree


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_fiber_polynomial_vanishes_on_graph(seed):
    rng = random.Random(seed)
    curve = random_curve(rng, rng.choice((2, 3)), 5)
    h = random_unipoly(rng, rng.randint(0, 6))
    ell = LinearForm(tuple(rng.randint(-1000, 1000) or 1 for _ in range(curve.m)))
    try:
        P = graph_fiber_polynomial(curve, h, ell)
    except NonGenericProjection:
        return
    L = ell.apply(curve)
    assert not compose(P.to_multipoly(("x", "t")), [L, h])


@settings(max_examples=30)
@given(seeds)
def test_distinct_values_of_identity(seed):
    rng = random.Random(seed)
    u = random_unipoly(rng, rng.randint(1, 6))
    if gcd_squarefree(u)[0].degree > 0:
        return
    assert distinct_values_on_fiber(u, T) == u.degree


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_distinct_values_against_root_clustering(seed):
    rng = random.Random(seed)
    roots = rng.sample(range(-6, 7), rng.randint(1, 5))
    u = UniPoly("t", [1])
    for r in roots:
        u = u * (T - r)
    h = random_unipoly(rng, rng.randint(1, 3), coeff=3)
    assert distinct_values_on_fiber(u, h) == len({h(r) for r in roots})
