"""Laurent polynomials in the single symbol ``A`` with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["LaurentA", "A", "GAMMA", "format_rational"]


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as a rational coefficient")


class LaurentA:
    """Element of Q[A, 1/A], stored as ``{exponent: coefficient}``.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                c = _as_fraction(c)
                if c:
                    e = int(e)
                    c = clean.get(e, 0) + c
                    if c:
                        clean[e] = c
                    else:
                        clean.pop(e, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentA":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "LaurentA":
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e: int) -> "LaurentA":
        return cls({e: c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in descending exponent order."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, e: int) -> Fraction:
        return self._terms.get(e, Fraction(0))

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero has no degree")
        return max(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero has no degree")
        return min(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(0, Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentA):
            return other
        if isinstance(other, (int, Rational)):
            return LaurentA({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentA._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentA._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = _as_fraction(other)
            if not c:
                return LaurentA._raw({})
            return LaurentA._raw({e: v * c for e, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentA._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (1 / _as_fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other._terms) != 1:
            raise ZeroDivisionError(f"cannot divide by non-monomial {other}")
        (e, c), = other._terms.items()
        return LaurentA._raw({k - e: v / c for k, v in self._terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise ZeroDivisionError("negative power of a non-monomial")
            (e, c), = self._terms.items()
            return LaurentA._raw({e * k: Fraction(1) / c ** (-k)})
        result = LaurentA._raw({0: Fraction(1)})
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentA):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            c = Fraction(other)
            return self._terms == ({0: c} if c else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._terms.get(0, Fraction(0)))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- transforms -------------------------------------------------------

    def evaluate(self, value):
        """Substitute a nonzero rational number for A."""
        value = _as_fraction(value)
        return sum((c * value ** e for e, c in self._terms.items()), Fraction(0))

    def involution(self) -> "LaurentA":
        """Image under A -> -1/A (fixes gamma)."""
        return LaurentA._raw({-e: (c if e % 2 == 0 else -c) for e, c in self._terms.items()})

    def __repr__(self):
        return f"LaurentA({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = format_rational(a)
            else:
                mono = "A" if e == 1 else f"A^{e}"
                body = mono if a == 1 else f"{format_rational(a)}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)


A = LaurentA({1: 1})
GAMMA = LaurentA({1: -1, -1: 1})
