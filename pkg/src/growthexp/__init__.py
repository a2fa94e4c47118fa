"""Growth exponents of functions on polynomially parametrized curves."""

from .curve import ParametrizedCurve, injectivity_check, normalization_check
from .errors import GrowthError
from .growth import (
    CurveFunction,
    bezout_mapping_report,
    full_report,
    growth_exponent,
    growth_via_elimination,
    rationalize,
    restrict,
)
from .parser import parse_poly, parse_unipoly
from .poly import MultiPoly, UniPoly

__all__ = [
    "ParametrizedCurve",
    "CurveFunction",
    "MultiPoly",
    "UniPoly",
    "GrowthError",
    "injectivity_check",
    "normalization_check",
    "restrict",
    "growth_exponent",
    "growth_via_elimination",
    "full_report",
    "bezout_mapping_report",
    "rationalize",
    "parse_poly",
    "parse_unipoly",
]
