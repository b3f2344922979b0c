"""Faulhaber polynomials for symbolic range sums."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

__all__ = ["bernoulli", "faulhaber_coefficients", "faulhaber_range_sum"]


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number with the convention B_1 = +1/2."""
    if m == 0:
        return Fraction(1)
    # sum_{k<=m} C(m+1, k) B^-_k = 0 with B^-_1 = -1/2
    acc = Fraction(0)
    for k in range(m):
        acc += comb(m + 1, k) * _bernoulli_minus(k)
    b = -acc / (m + 1)
    return -b if m == 1 else b


@lru_cache(maxsize=None)
def _bernoulli_minus(m: int) -> Fraction:
    b = bernoulli(m)
    return -b if m == 1 else b


@lru_cache(maxsize=None)
def faulhaber_coefficients(m: int) -> tuple:
    """Coefficients (degree 0 upward) of F_m with F_m(N) = sum_{x=1}^N x^m."""
    out = [Fraction(0)] * (m + 2)
    for j in range(m + 1):
        out[m + 1 - j] += Fraction(comb(m + 1, j)) * bernoulli(j) / (m + 1)
    return tuple(out)


def _horner(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def faulhaber_range_sum(m: int, offset, length):
    """F_m(offset + length) - F_m(offset), i.e. sum of x^m for offset < x <= offset + length.

    ``offset`` and ``length`` may be integers, Fractions, LaurentA or MultiPoly
    values; the identity holds as a polynomial identity.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    coeffs = faulhaber_coefficients(m)
    return _horner(coeffs, offset + length) - _horner(coeffs, offset)
