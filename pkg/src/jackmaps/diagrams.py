"""Young diagrams, A-deformed contents and content-polynomial families.

A family ``(p_0, ..., p_K)`` defines a function on Young diagrams by
summing ``p_k(gamma, c_1, ..., c_k)`` over all ordered k-tuples of boxes
(boxes may repeat). The same sum is evaluated symbolically on the
multirectangular diagram with ``-A*p_j`` rows of length ``q_j / A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from .algebra import GAMMA, LaurentA, MultiPoly, coefficients_to_gamma, faulhaber_range_sum
from .errors import EmptyDiagram

__all__ = [
    "YoungDiagram",
    "Box",
    "MultiRect",
    "ContentPolynomialFamily",
    "partitions",
    "diagrams_up_to",
    "content",
    "content_power_sums",
    "evaluate_family",
    "evaluate_family_multirect",
    "stanley_variables",
    "concrete_to_multirect",
    "substitute_diagram",
    "delta_op",
    "sym_extend",
    "family_variables",
]


@dataclass(frozen=True, order=True)
class YoungDiagram:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        text = text.strip()
        if not text or text in ("()", "0"):
            return cls(())
        return cls(tuple(int(t) for t in text.strip("()[]").split(",") if t.strip()))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def row(self, y: int) -> int:
        """Length of row y (1-based); 0 beyond the last row."""
        return self.parts[y - 1] if 1 <= y <= len(self.parts) else 0

    def boxes(self):
        for y, length in enumerate(self.parts, start=1):
            for x in range(1, length + 1):
                yield Box(x, y)

    def __contains__(self, box) -> bool:
        return 1 <= box.y <= len(self.parts) and 1 <= box.x <= self.parts[box.y - 1]

    def conjugate(self) -> "YoungDiagram":
        if not self.parts:
            return self
        return YoungDiagram(tuple(sum(1 for p in self.parts if p >= x) for x in range(1, self.parts[0] + 1)))

    def multiplicities(self) -> dict:
        out: dict = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Box:
    x: int  # column
    y: int  # row

    def __post_init__(self):
        if self.x < 1 or self.y < 1:
            raise ValueError("box coordinates start at 1")


@dataclass(frozen=True)
class MultiRect:
    ell: int

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("need at least one rectangle")

    @property
    def variables(self) -> tuple:
        return stanley_variables(self.ell)


def stanley_variables(ell: int, with_gamma: bool = False) -> tuple:
    vs = tuple(f"p{i}" for i in range(1, ell + 1)) + tuple(f"q{i}" for i in range(1, ell + 1))
    return vs + ("g",) if with_gamma else vs


def family_variables(k: int) -> tuple:
    return tuple(f"c{i}" for i in range(1, k + 1)) + ("g",)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int):
    """Partitions of n in decreasing lexicographic order."""
    return [YoungDiagram(p) for p in _partitions(n, n)]


def diagrams_up_to(n: int):
    out = []
    for k in range(n + 1):
        out.extend(partitions(k))
    return out


def content(b: Box) -> LaurentA:
    return LaurentA({1: b.x, -1: -b.y})


@lru_cache(maxsize=4096)
def _content_power_sums(parts: tuple, emax: int) -> tuple:
    contents = [content(b) for b in YoungDiagram(parts).boxes()]
    sums = [LaurentA.constant(len(contents))]
    powers = [LaurentA.constant(1)] * len(contents)
    for _ in range(emax):
        powers = [p * c for p, c in zip(powers, contents)]
        sums.append(sum(powers, LaurentA()))
    return tuple(sums)


def content_power_sums(lam: YoungDiagram, emax: int) -> tuple:
    """(S_0, ..., S_emax) with S_e = sum over boxes of content^e."""
    return _content_power_sums(lam.parts, emax)


class ContentPolynomialFamily:
    """Polynomials p_k in (c_1..c_k, g), k = 0..floor(d/2)."""

    __slots__ = ("degree", "polys")

    def __init__(self, degree: int, polys):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        polys = list(polys)
        kmax = degree // 2
        if len(polys) > kmax + 1:
            extra = polys[kmax + 1:]
            if any(extra):
                raise ValueError(f"at most {kmax + 1} content polynomials for degree {degree}")
            polys = polys[: kmax + 1]
        polys += [MultiPoly.zero(family_variables(k)) for k in range(len(polys), kmax + 1)]
        fixed = []
        for k, p in enumerate(polys):
            if not isinstance(p, MultiPoly):
                p = MultiPoly.const(p, family_variables(k))
            fixed.append(p.with_variables(family_variables(k)))
        self.degree = degree
        self.polys = tuple(fixed)

    def check(self):
        """Raise ValueError unless degree bounds and c-symmetry hold."""
        for k, p in enumerate(self.polys):
            if p and p.degree() > self.degree - 2 * k:
                raise ValueError(f"p_{k} has degree {p.degree()} > {self.degree - 2 * k}")
            if not p.is_symmetric_in(family_variables(k)[:-1]):
                raise ValueError(f"p_{k} is not symmetric in the contents")
        return self

    def is_valid(self) -> bool:
        try:
            self.check()
        except ValueError:
            return False
        return True

    def __add__(self, other):
        d = max(self.degree, other.degree)
        n = max(len(self.polys), len(other.polys))
        a = list(self.polys) + [0] * (n - len(self.polys))
        b = list(other.polys) + [0] * (n - len(other.polys))
        return ContentPolynomialFamily(d, [x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return ContentPolynomialFamily(self.degree, [p * c for p in self.polys])

    def __eq__(self, other):
        return isinstance(other, ContentPolynomialFamily) and all(
            a == b for a, b in zip(self._padded(other), other._padded(self)))

    def _padded(self, other):
        n = max(len(self.polys), len(other.polys))
        return list(self.polys) + [MultiPoly.zero(family_variables(k)) for k in range(len(self.polys), n)]

    def to_dict(self) -> dict:
        return {str(k): str(p) for k, p in enumerate(self.polys)}

    @classmethod
    def from_dict(cls, degree, data: dict):
        from .algebra import parse_poly

        kmax = degree // 2
        polys = [parse_poly(data.get(str(k), "0"), family_variables(k)) for k in range(kmax + 1)]
        return cls(degree, polys)

    def __repr__(self):
        inner = ", ".join(f"p{k}={p}" for k, p in enumerate(self.polys))
        return f"ContentPolynomialFamily(d={self.degree}; {inner})"


def _gamma_power(a: int) -> LaurentA:
    return GAMMA ** a


def evaluate_family(fam: ContentPolynomialFamily, lam: YoungDiagram) -> LaurentA:
    """Value of the family on a concrete diagram (independent box tuples)."""
    emax = max((p.degree() for p in fam.polys), default=0)
    sums = content_power_sums(lam, max(emax, 0))
    total = LaurentA()
    for k, p in enumerate(fam.polys):
        for exps, c in p.terms.items():
            term = _gamma_power(exps[-1]) * c
            for e in exps[:-1]:
                term = term * sums[e]
            total = total + term
    return total


@lru_cache(maxsize=None)
def _multirect_box_sums(ell: int, emax: int) -> tuple:
    """Symbolic sum over boxes of content^e on the multirectangular diagram.

    Row group j has r_j = -A*p_j rows of length s_j = q_j/A, stacked top
    to bottom with s_1 > s_2 > ...; coefficients are LaurentA.
    """
    vs = stanley_variables(ell)
    A = LaurentA({1: 1})
    Ainv = LaurentA({-1: 1})
    r = [MultiPoly.var(f"p{j}", vs) * (-A) for j in range(1, ell + 1)]
    s = [MultiPoly.var(f"q{j}", vs) * Ainv for j in range(1, ell + 1)]
    col_sums = [[faulhaber_range_sum(a, 0, s[j]) for a in range(emax + 1)] for j in range(ell)]
    row_sums = []
    offset = MultiPoly.zero(vs)
    for j in range(ell):
        row_sums.append([faulhaber_range_sum(b, offset, r[j]) for b in range(emax + 1)])
        offset = offset + r[j]
    out = []
    for e in range(emax + 1):
        acc = MultiPoly.zero(vs)
        for a in range(e + 1):
            b = e - a
            # (A x - y/A)^e = sum C(e,a) A^a (-1/A)^b x^a y^b
            scal = LaurentA({a - b: comb(e, a) * (-1) ** b})
            for j in range(ell):
                acc = acc + col_sums[j][a] * row_sums[j][b] * scal
        out.append(acc)
    return tuple(out)


def evaluate_family_multirect(fam: ContentPolynomialFamily, ell: int) -> MultiPoly:
    """Stanley polynomial of the family in (p_1..p_ell, q_1..q_ell, g)."""
    emax = max((p.degree() for p in fam.polys), default=0)
    sums = _multirect_box_sums(ell, max(emax, 0))
    vs = stanley_variables(ell)
    total = MultiPoly.zero(vs)
    for p in fam.polys:
        for exps, c in p.terms.items():
            term = MultiPoly.const(_gamma_power(exps[-1]) * c, vs)
            for e in exps[:-1]:
                term = term * sums[e]
            total = total + term
    return coefficients_to_gamma(total).with_variables(stanley_variables(ell, with_gamma=True))


def concrete_to_multirect(lam: YoungDiagram, ell: int | None = None) -> dict:
    """Substitution p_j = -r_j/A, q_j = A*s_j reproducing ``lam``.

    With ``ell`` larger than the number of distinct parts, the extra
    rectangles are empty (p_j = q_j = 0).
    """
    if not lam.parts:
        raise EmptyDiagram("the empty diagram has no multirectangular form")
    mult = lam.multiplicities()
    lengths = sorted(mult, reverse=True)
    if ell is None:
        ell = len(lengths)
    if ell < len(lengths):
        raise ValueError(f"{lam} needs at least {len(lengths)} rectangles")
    out = {}
    for j in range(1, ell + 1):
        if j <= len(lengths):
            out[f"p{j}"] = LaurentA({-1: -mult[lengths[j - 1]]})
            out[f"q{j}"] = LaurentA({1: lengths[j - 1]})
        else:
            out[f"p{j}"] = LaurentA()
            out[f"q{j}"] = LaurentA()
    return out


def substitute_diagram(stanley: MultiPoly, lam: YoungDiagram) -> LaurentA:
    """Evaluate a Stanley polynomial (in p, q, g) on a concrete diagram."""
    ell = sum(1 for v in stanley.variables if v.startswith("p"))
    if not lam.parts:
        values = {f"p{j}": 0 for j in range(1, ell + 1)} | {f"q{j}": 0 for j in range(1, ell + 1)}
    else:
        values = concrete_to_multirect(lam, max(ell, len(lam.multiplicities())))
    values["g"] = GAMMA
    out = stanley.evaluate({v: values[v] for v in stanley.variables if v in values})
    return out if isinstance(out, LaurentA) else LaurentA.constant(out)


def delta_op(F, j: int):
    """Forward difference in the j-th argument (1-based)."""
    if j < 1:
        raise ValueError("j is 1-based")

    def delta(*args):
        if j > len(args):
            raise ValueError(f"difference in argument {j} of a {len(args)}-argument call")
        shifted = list(args)
        shifted[j - 1] += 1
        return F(*shifted) - F(*args)

    return delta


def sym_extend(F, xi):
    """F evaluated on xi sorted in decreasing order (zeros dropped)."""
    parts = tuple(sorted((int(x) for x in xi if x), reverse=True))
    return F(YoungDiagram(parts))


def sym_function(F):
    """Wrap a diagram function as a function of integer arguments (G^sym)."""

    def g(*xi):
        return sym_extend(F, xi)

    return g
