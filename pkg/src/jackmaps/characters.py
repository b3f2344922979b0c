"""Jack characters Ch_n as content-polynomial families.

Ch_n is characterized as the unique family of degree n + 1 that vanishes
on every diagram with fewer than n boxes and has [c_1^(n-1)] p_1 = n.
The solver sets this up as an exact linear system over Q, with the
symmetry in the contents built into the unknown basis, and checks that
the solution is unique rather than assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .algebra import GAMMA, LaurentA, MultiPoly
from .algebra.linsolve import solve
from .diagrams import (
    ContentPolynomialFamily,
    YoungDiagram,
    content_power_sums,
    delta_op,
    diagrams_up_to,
    evaluate_family,
    evaluate_family_multirect,
    family_variables,
    sym_function,
)
from .errors import Inconsistent, TooLarge, Underdetermined

MAX_SOLVE = 5
MAX_RECTS = 3


def ch3_explicit_family() -> ContentPolynomialFamily:
    """Ch_3: p_1 = 3(c_1 + g)(c_1 + 2g) + 3/2, p_2 = -3/2."""
    v1 = family_variables(1)
    c1, g = MultiPoly.var("c1", v1), MultiPoly.var("g", v1)
    p1 = (c1 + g) * (c1 + g * 2) * 3 + Fraction(3, 2)
    p2 = MultiPoly.const(Fraction(-3, 2), family_variables(2))
    return ContentPolynomialFamily(4, [0, p1, p2])


@dataclass(frozen=True)
class CharacterSolution:
    n: int
    family: ContentPolynomialFamily
    rank: int = 0
    unknowns: int = 0
    equations: int = 0


def _small_partitions(total_max, max_len):
    """Partitions with at most max_len parts and size <= total_max (incl. empty)."""
    out = [()]

    def rec(prefix, remaining, largest):
        for part in range(min(remaining, largest), 0, -1):
            nu = prefix + (part,)
            out.append(nu)
            if len(nu) < max_len:
                rec(nu, remaining - part, part)

    if max_len > 0:
        rec((), total_max, total_max)
    return out


def _rearrangements(exps):
    count = factorial(len(exps))
    for e in set(exps):
        count //= factorial(exps.count(e))
    return count


def _basis(d):
    """Unknown basis: (k, a, nu) for g^a * m_nu(c_1..c_k), a + |nu| <= d - 2k."""
    out = []
    for k in range(d // 2 + 1):
        budget = d - 2 * k
        for nu in _small_partitions(budget, k):
            for a in range(budget - sum(nu) + 1):
                out.append((k, a, nu))
    return out


def _basis_value(k, a, nu, sums):
    exps = tuple(nu) + (0,) * (k - len(nu))
    val = GAMMA ** a * _rearrangements(exps)
    for e in exps:
        val = val * sums[e]
    return val


def _basis_poly(k, a, nu):
    """g^a * m_nu(c_1..c_k) as a MultiPoly in (c_1..c_k, g)."""
    vs = family_variables(k)
    exps = tuple(nu) + (0,) * (k - len(nu))
    seen = set()
    terms = {}
    for perm in permutations(exps):
        if perm not in seen:
            seen.add(perm)
            terms[perm + (a,)] = 1
    return MultiPoly(vs, terms)


@lru_cache(maxsize=None)
def solve_character_family(n: int) -> CharacterSolution:
    """Solve for the content-polynomial family of Ch_n exactly."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_SOLVE:
        raise TooLarge(f"n={n} exceeds the solver limit {MAX_SOLVE}")
    d = n + 1
    basis = _basis(d)
    rows, rhs = [], []
    seen = set()
    for lam in diagrams_up_to(n - 1):
        sums = content_power_sums(lam, d)
        vals = [_basis_value(k, a, nu, sums) for k, a, nu in basis]
        powers = sorted({e for v in vals for e in v.terms})
        for e in powers:
            row = tuple(v.coeff(e) for v in vals)
            if any(row) and row not in seen:
                seen.add(row)
                rows.append(list(row))
                rhs.append(Fraction(0))
    norm = [Fraction(0)] * len(basis)
    norm[basis.index((1, 0, (n - 1,) if n > 1 else ()))] = Fraction(1)
    rows.append(norm)
    rhs.append(Fraction(n))
    sol = solve(rows, rhs, len(basis), zero=Fraction(0))
    if not sol.consistent:
        raise Inconsistent(f"no family satisfies the conditions for n={n}", rank_defect=len(basis) - sol.rank)
    if sol.nullity:
        raise Underdetermined(f"{sol.nullity} free parameters remain for n={n}", rank_defect=sol.nullity)
    polys = [MultiPoly.zero(family_variables(k)) for k in range(d // 2 + 1)]
    for (k, a, nu), c in zip(basis, sol.values):
        if c:
            polys[k] = polys[k] + _basis_poly(k, a, nu) * c
    fam = ContentPolynomialFamily(d, polys).check()
    return CharacterSolution(n, fam, sol.rank, len(basis), len(rows))


def stanley_polynomial(sol: CharacterSolution, ell: int) -> MultiPoly:
    if ell < 1:
        raise ValueError("ell must be positive")
    if ell > MAX_RECTS:
        raise TooLarge(f"ell={ell} exceeds the limit {MAX_RECTS}")
    return evaluate_family_multirect(sol.family, ell)


@dataclass(frozen=True)
class TopDegreePart:
    n: int
    ell: int
    stanley_top: MultiPoly = field(compare=True)


def top_degree(sol: CharacterSolution, ell: int = 2) -> TopDegreePart:
    return TopDegreePart(sol.n, ell, stanley_polynomial(sol, ell).homogeneous_part(sol.n + 1))


def delta_n(sol: CharacterSolution, ell: int = 2) -> MultiPoly:
    """Ch_n minus its top-degree part, as a Stanley polynomial."""
    full = stanley_polynomial(sol, ell)
    return full - full.homogeneous_part(sol.n + 1)


def family_top(sol: CharacterSolution) -> ContentPolynomialFamily:
    """Keep in each p_k only the monomials of (g, c)-degree n + 1 - 2k."""
    fam = sol.family
    polys = [p.homogeneous_part(sol.n + 1 - 2 * k) for k, p in enumerate(fam.polys)]
    return ContentPolynomialFamily(fam.degree, polys)


# -- the vanishing system ------------------------------------------------------------


@dataclass(frozen=True)
class CheckRecord:
    equation: str
    k: int
    diagram: tuple
    passed: bool
    lhs: Fraction
    rhs: Fraction = Fraction(0)

    def to_dict(self):
        return {
            "equation": self.equation,
            "k": self.k,
            "lambda": ",".join(map(str, self.diagram)),
            "pass": self.passed,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


@dataclass
class VanishingReport:
    n: int
    records: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self):
        return [r for r in self.records if not r.passed]


def _parts_with(k, total):
    """Weakly decreasing non-negative k-tuples with sum <= total."""
    out = []

    def rec(prefix, remaining, largest):
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        for x in range(min(remaining, largest), -1, -1):
            rec(prefix + [x], remaining - x, x)

    rec([], total, total)
    return out


def _mixed_difference(G, k, lam):
    F = sym_function(G)
    for j in range(1, k + 1):
        F = delta_op(F, j)
    return F(*lam)


def _top_at(p: MultiPoly, cvals):
    """Evaluate p at g = -1 and c_i = cvals[i]."""
    vals = {f"c{i + 1}": Fraction(c) for i, c in enumerate(cvals)}
    vals["g"] = Fraction(-1)
    out = p.evaluate({v: vals.get(v, 0) for v in p.variables})
    return Fraction(out)


def verify_vanishing_system(G, n: int, family: ContentPolynomialFamily | None = None) -> VanishingReport:
    """Check the top-coefficient vanishing identities for a diagram function G.

    For each k with n - 1 - k >= 0 and each lam with at most k rows and
    |lam| <= n - 1 - k, the coefficient of A^(n+1-2k) in the k-fold mixed
    difference of G^sym at lam must vanish. With ``family`` given, the
    low-order identities linking top coefficients of G to the top parts
    p_k^top of the family are checked as well.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > 4:
        raise TooLarge("the vanishing system is checked for n <= 4")
    records = []
    for k in range(n):
        for lam in _parts_with(k, n - 1 - k):
            val = _mixed_difference(G, k, lam) if k else G(YoungDiagram(()))
            lhs = val.coeff(n + 1 - 2 * k)
            records.append(CheckRecord("vanishing", k, lam, lhs == 0, lhs))
    if family is not None:
        top = [p.homogeneous_part(n + 1 - 2 * k) for k, p in enumerate(family.polys)]
        top += [MultiPoly.zero(family_variables(k)) for k in range(len(top), 3)]
        empty = G(YoungDiagram(())).coeff(n + 1)
        rhs = _top_at(top[0], ())
        records.append(CheckRecord("top-empty", 0, (), empty == rhs, empty, rhs))
        for l1 in range(n - 1):
            lhs = _mixed_difference(G, 1, (l1,)).coeff(n - 1)
            rhs = _top_at(top[1], (l1 + 1,))
            records.append(CheckRecord("top-one-row", 1, (l1,), lhs == rhs, lhs, rhs))
        dp1 = top[1].derivative("c1")
        for lam in _parts_with(2, n - 3) if n >= 3 else []:
            l1, l2 = lam
            lhs = _mixed_difference(G, 2, lam).coeff(n - 3)
            rhs = 2 * _top_at(top[2], (l1 + 1, l2 + 1))
            if l1 > l2:
                records.append(CheckRecord("top-two-rows", 2, lam, lhs == rhs, lhs, rhs))
            else:
                rhs -= _top_at(dp1, (l1 + 1,))
                records.append(CheckRecord("top-two-rows-equal", 2, lam, lhs == rhs, lhs, rhs))
    return VanishingReport(n, records)


def family_function(fam: ContentPolynomialFamily):
    """The diagram function lam -> evaluate_family(fam, lam)."""

    def G(lam):
        return evaluate_family(fam, lam)

    return G


def oracle_function(n: int):
    """lam -> Ch_n(lam) from the Jack-polynomial oracle."""
    from .jack import jack_character

    def G(lam):
        return jack_character((n,), lam.parts)

    return G


def map_top_function(n: int):
    """lam -> top-degree part of Ch_n(lam) from the oriented-map sum."""
    from .maps.oriented import ch_top_maps_value

    cache = {}

    def G(lam):
        if lam.parts not in cache:
            cache[lam.parts] = ch_top_maps_value(n, lam) if lam.parts else LaurentA()
        return cache[lam.parts]

    return G
