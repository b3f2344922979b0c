"""Rewrites between the symbol A and gamma = -A + 1/A."""

from __future__ import annotations

from fractions import Fraction

from ..errors import NotExpressible
from .laurent import GAMMA, LaurentA
from .polynomial import MultiPoly, canonical_vars

__all__ = [
    "gamma_substitute",
    "a_to_gamma",
    "coefficients_to_gamma",
    "laurent_to_delta",
    "homogeneous_part",
]


def gamma_substitute(f: MultiPoly, name: str = "g") -> MultiPoly:
    """Replace the variable ``g`` by -A + 1/A; coefficients become LaurentA."""
    if name not in f.variables:
        raise ValueError(f"{name!r} is not a variable of {f!r}")
    out = f.subs({name: GAMMA})
    if not isinstance(out, MultiPoly):
        out = MultiPoly.const(out if isinstance(out, LaurentA) else LaurentA.constant(out))
    return out.map_coefficients(lambda c: c if isinstance(c, LaurentA) else LaurentA.constant(c))


def a_to_gamma(f, name: str = "g") -> MultiPoly:
    """Univariate P with P(-A + 1/A) == f, or NotExpressible.

    Peels off the highest A-power against powers of (-A + 1/A).
    """
    if isinstance(f, MultiPoly):
        # the output of gamma_substitute: a constant with a LaurentA coefficient
        if f.used_variables():
            raise ValueError(f"expected a constant, got {f!r}")
        f = f.constant_term()
    if not isinstance(f, LaurentA):
        f = LaurentA.constant(f)
    coeffs = {}
    rest = f
    while rest:
        top = rest.max_degree()
        if top < 0 or -rest.min_degree() > top:
            raise NotExpressible(f"{f} is not a polynomial in gamma")
        c = rest.coeff(top) * (-1) ** top
        coeffs[top] = c
        rest = rest - GAMMA ** top * c
    return MultiPoly((name,), {(k,): c for k, c in coeffs.items()})


def coefficients_to_gamma(f: MultiPoly, name: str = "g") -> MultiPoly:
    """Rewrite LaurentA coefficients of ``f`` as polynomials in ``name``."""
    variables = canonical_vars(f.variables + (name,))
    gi = variables.index(name)
    base = f.with_variables(variables) if name not in f.variables else f
    if name in f.variables:
        base = f.with_variables(variables)
    out: dict = {}
    for exps, c in base.terms.items():
        for (k,), v in a_to_gamma(c, name).terms.items():
            e = list(exps)
            e[gi] += k
            e = tuple(e)
            out[e] = out.get(e, Fraction(0)) + v
    return MultiPoly(variables, out)


def laurent_to_delta(f, name: str = "d") -> MultiPoly:
    """Rewrite f as a polynomial in delta = -gamma = A - 1/A."""
    p = a_to_gamma(f, "g")
    return MultiPoly((name,), {(k,): c * (-1) ** k for (k,), c in p.terms.items()})


def homogeneous_part(f: MultiPoly, d: int) -> MultiPoly:
    return f.homogeneous_part(d)
