"""Univariate polynomials over Q and the rational functions they form.

Only what the Jack oracle needs: exact Euclidean gcd, normalised
fractions with a monic denominator, and conversion to Laurent
polynomials in ``A``. The variable is either ``"A"`` or ``"alpha"``
(where alpha stands for ``A^2``).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from ..errors import NotLaurent
from .laurent import LaurentA

__all__ = ["QPoly", "RationalFunction"]


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    """Dense polynomial, coefficients listed from degree 0 upward."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="A"):
        self.coeffs = _trim(Fraction(c) for c in coeffs)
        self.var = var

    @classmethod
    def _raw(cls, coeffs, var):
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj.var = var
        return obj

    @classmethod
    def monomial(cls, c, k, var="A"):
        return cls([0] * k + [c], var)

    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def lead(self):
        return self.coeffs[-1]

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly._raw(_trim(out), self.var)

    def __neg__(self):
        return QPoly._raw(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                return QPoly._raw((), self.var)
            return QPoly._raw(tuple(c * other for c in self.coeffs), self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly._raw((), self.var)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly._raw(_trim(out), self.var)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def divmod(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree()
        lb = other.lead()
        if len(rem) - 1 < db:
            return QPoly._raw((), self.var), self
        quot = [Fraction(0)] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lb
            quot[k] = c
            if c:
                for j in range(db + 1):
                    rem[k + j] -= c * bc[j]
        return QPoly._raw(_trim(quot), self.var), QPoly._raw(_trim(rem[:db]), self.var)

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.lead()
        return QPoly._raw(tuple(c / lc for c in self.coeffs), self.var)

    def gcd(self, other):
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def evaluate(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def low_degree(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def to_laurent(self, shift=0) -> LaurentA:
        """Laurent polynomial in A; alpha-polynomials are read with alpha = A^2."""
        step = 2 if self.var == "alpha" else 1
        return LaurentA({step * i + shift: c for i, c in enumerate(self.coeffs) if c})

    def __str__(self):
        return str(self.to_laurent()) if self.var == "A" else str(self.to_laurent()).replace("A", "alpha")


class RationalFunction:
    """Quotient of two QPoly in the same variable, denominator monic, gcd 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var="A"):
        if not isinstance(num, QPoly):
            num = QPoly([num], var)
        if den is None:
            den = QPoly([1], num.var)
        elif not isinstance(den, QPoly):
            den = QPoly([den], num.var)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = num, QPoly([1], num.var)
            return
        if den.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
        lc = den.lead()
        if lc != 1:
            num = num * (1 / lc)
            den = den * (1 / lc)
        self.num, self.den = num, den

    @property
    def var(self):
        return self.num.var

    @classmethod
    def from_laurent(cls, f: LaurentA) -> "RationalFunction":
        if not f:
            return cls(QPoly((), "A"))
        lo = min(f.min_degree(), 0)
        num = QPoly([f.coeff(e + lo) for e in range(f.max_degree() - lo + 1)], "A")
        return cls(num, QPoly.monomial(1, -lo, "A"))

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Rational)):
            return RationalFunction(QPoly([other], self.var))
        if isinstance(other, LaurentA) and self.var == "A":
            return RationalFunction.from_laurent(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = RationalFunction.__new__(RationalFunction)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_polynomial(self):
        return self.den.degree() == 0

    def to_laurent(self) -> LaurentA:
        """Convert to a Laurent polynomial in A, raising NotLaurent otherwise."""
        d = self.den
        k = d.degree()
        if any(d.coeffs[:k]):
            raise NotLaurent(f"denominator {d} is not a monomial")
        step = 2 if self.var == "alpha" else 1
        return self.num.to_laurent(shift=-step * k)

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__
