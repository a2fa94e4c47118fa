"""Seeded generators of random curves, functions and polynomials for tests."""

import random
from fractions import Fraction

from growthexp.curve import ParametrizedCurve, normalization_check
from growthexp.growth import CurveFunction, restrict
from growthexp.poly import MultiPoly, UniPoly

NAMES = ("x", "y", "z")


def random_unipoly(rng, degree, coeff=9, param="t", exact_degree=True):
    coeffs = [rng.randint(-coeff, coeff) for _ in range(degree + 1)]
    if exact_degree and degree >= 0:
        while coeffs[-1] == 0:
            coeffs[-1] = rng.randint(-coeff, coeff)
    return UniPoly(param, coeffs)


def random_multipoly(rng, variables, degree, terms=4, coeff=9):
    out = {}
    for _ in range(terms):
        d = rng.randint(0, degree)
        e = [0] * len(variables)
        for _ in range(d):
            e[rng.randrange(len(variables))] += 1
        c = Fraction(rng.randint(-coeff, coeff), rng.choice([1, 1, 1, 2, 3]))
        out[tuple(e)] = out.get(tuple(e), 0) + c
    return MultiPoly(tuple(variables), out)


def random_curve(rng, m, max_degree=6, coeff=9):
    n = rng.randint(1, max_degree)
    gamma = [random_unipoly(rng, rng.randint(0, n), coeff, exact_degree=False) for _ in range(m)]
    gamma[rng.randrange(m)] = random_unipoly(rng, n, coeff)
    return ParametrizedCurve(NAMES[:m], "t", gamma)


def random_instances(count, seed=2024, max_curve_degree=6, max_pullback_degree=8):
    """Random CurveFunctions on generically injective curves.

    Even draws take a random pullback directly; odd draws restrict a random
    polynomial in the coordinates, so they also carry a numerator.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        m = rng.choice((2, 3))
        curve = random_curve(rng, m, max_curve_degree)
        if not normalization_check(curve, rng.randrange(10**6)).ok:
            continue
        if len(out) % 2 == 0:
            h = random_unipoly(rng, rng.randint(0, max_pullback_degree))
            out.append(CurveFunction.from_pullback(curve, h))
        else:
            k = max(max_pullback_degree // curve.degree, 0)
            P = random_multipoly(rng, curve.variables, k, terms=3)
            if not P:
                continue
            out.append(restrict(curve, P, MultiPoly.constant(1, curve.variables)))
    return out


def to_sympy(p):
    """Independent oracle representation (through the rendered text)."""
    import sympy

    return sympy.sympify(str(p).replace("^", "**"), rational=True)

