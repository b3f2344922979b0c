"""Exact coefficient arithmetic shared by every other module."""

from fractions import Fraction as Rational

from .gamma import a_to_gamma, coefficients_to_gamma, gamma_substitute, homogeneous_part, laurent_to_delta
from .laurent import GAMMA, A, LaurentA
from .polynomial import MultiPoly, canonical_vars, parse_expression, parse_poly
from .ratfunc import QPoly, RationalFunction
from .summation import bernoulli, faulhaber_range_sum

RationalFunctionA = RationalFunction

__all__ = [
    "A",
    "GAMMA",
    "LaurentA",
    "MultiPoly",
    "QPoly",
    "Rational",
    "RationalFunction",
    "RationalFunctionA",
    "a_to_gamma",
    "bernoulli",
    "canonical_vars",
    "coefficients_to_gamma",
    "faulhaber_range_sum",
    "gamma_substitute",
    "homogeneous_part",
    "laurent_to_delta",
    "parse_expression",
    "parse_poly",
]
