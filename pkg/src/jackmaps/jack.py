"""Jack polynomials by Gram-Schmidt and the normalized Jack characters.

Jack polynomials J_lambda are computed in the power-sum basis over
Q(alpha), alpha = A^2, by orthogonalizing monomial symmetric functions
for the scalar product <p_pi, p_rho> = delta * z_pi * alpha^len(pi).
Jack characters use the normalization

    Ch_mu(lam) = A^(len(mu) - |mu|) * C(|lam| - |mu| + m1, m1) * z_mu
                 * theta_{mu + 1^(|lam| - |mu|)}(lam)

with m1 the number of parts of mu equal to 1.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .algebra import LaurentA, QPoly, RationalFunction, laurent_to_delta, parse_expression
from .algebra.gamma import a_to_gamma
from .diagrams import YoungDiagram, partitions
from .errors import Inconsistent, NotExpressible, SizeMismatch, TooLarge

__all__ = [
    "SymFuncElement",
    "z_coefficient",
    "powersum_to_monomial",
    "jack_J",
    "theta",
    "jack_character",
    "structure_constants",
    "structure_constants_delta",
    "mn_character",
    "normalized_character",
    "inner_product",
    "set_cache_dir",
    "ORACLE_VERSION",
]

ORACLE_VERSION = "1"
MAX_JACK_SIZE = 8
MAX_MONOMIAL_SIZE = 10


def _as_parts(x) -> tuple:
    if isinstance(x, YoungDiagram):
        return x.parts
    return tuple(sorted((int(p) for p in x if p), reverse=True))


def z_coefficient(parts) -> int:
    parts = _as_parts(parts)
    return prod(i ** m * factorial(m) for i, m in Counter(parts).items())


@dataclass(frozen=True)
class SymFuncElement:
    """Homogeneous symmetric function as ``{partition: coefficient}``."""

    basis: str
    coeffs: dict

    def __post_init__(self):
        if self.basis not in ("monomial", "powersum"):
            raise ValueError(f"unknown basis {self.basis!r}")
        sizes = {sum(p) for p in self.coeffs}
        if len(sizes) > 1:
            raise ValueError("element is not homogeneous")

    def __getitem__(self, parts):
        return self.coeffs.get(_as_parts(parts), 0)

    @property
    def size(self):
        return sum(next(iter(self.coeffs), ()))

    def __str__(self):
        sym = "m" if self.basis == "monomial" else "p"
        terms = []
        for part in sorted(self.coeffs, reverse=True):
            c = self.coeffs[part]
            label = f"{sym}[{','.join(map(str, part))}]"
            terms.append(f"({c})*{label}")
        return " + ".join(terms) if terms else "0"


# -- monomial expansion of power sums -------------------------------------------


@lru_cache(maxsize=None)
def _assignments(pi: tuple, target: tuple) -> int:
    """Number of ways to place the parts of pi into slots with sums ``target``."""
    if not pi:
        return 1 if not any(target) else 0
    first, rest = pi[0], pi[1:]
    total = 0
    for j, t in enumerate(target):
        if t >= first:
            nt = target[:j] + (t - first,) + target[j + 1:]
            total += _assignments(rest, nt)
    return total


def powersum_to_monomial(pi) -> SymFuncElement:
    pi = _as_parts(pi)
    n = sum(pi)
    if n > MAX_MONOMIAL_SIZE:
        raise TooLarge(f"|pi| = {n} exceeds {MAX_MONOMIAL_SIZE}")
    coeffs = {}
    for lam in partitions(n):
        c = _assignments(pi, lam.parts)
        if c:
            coeffs[lam.parts] = c
    return SymFuncElement("monomial", coeffs)


# -- Gram-Schmidt ---------------------------------------------------------------

_lock = threading.Lock()
_tables: dict = {}
_cache_dir = None


def set_cache_dir(path):
    """Enable (or with None disable) the on-disk oracle cache."""
    global _cache_dir
    _cache_dir = path


def _inverse(matrix):
    n = len(matrix)
    m = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c])
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def _gram_schmidt(n: int) -> dict:
    """{lambda: {pi: QPoly in alpha}} with J_lambda = sum theta * p_pi."""
    parts = [p.parts for p in partitions(n)]
    order = list(reversed(parts))  # increasing lexicographic extends dominance
    idx = {p: i for i, p in enumerate(parts)}
    L = [[_assignments(pi, lam) for lam in parts] for pi in parts]
    Linv = _inverse(L)  # m_lam = sum_pi Linv[lam][pi] p_pi
    weight = [QPoly.monomial(z_coefficient(pi), len(pi), "alpha") for pi in parts]
    one_col = idx[(1,) * n]

    def inner(u, v):
        acc = RationalFunction(QPoly((), "alpha"))
        for i, (x, y) in enumerate(zip(u, v)):
            if x and y:
                acc = acc + x * y * RationalFunction(weight[i])
        return acc

    zero = RationalFunction(QPoly((), "alpha"))
    done = []
    result = {}
    for lam in order:
        m_vec = [RationalFunction(QPoly([c], "alpha")) if c else zero for c in Linv[idx[lam]]]
        vec = list(m_vec)
        for prev, norm in done:
            coef = inner(m_vec, prev)
            if coef:
                coef = coef / norm
                vec = [x - coef * y if y else x for x, y in zip(vec, prev)]
        done.append((vec, inner(vec, vec)))
        # coefficient of m_{1^n}: sum_pi P[pi] * [m_{1^n}] p_pi
        lead = sum((x * L[i][one_col] for i, x in enumerate(vec) if x), zero)
        scale = RationalFunction(QPoly([factorial(n)], "alpha")) / lead
        coeffs = {}
        for i, x in enumerate(vec):
            if x:
                y = x * scale
                if not y.is_polynomial():
                    raise Inconsistent(f"theta coefficient of J{lam} at p{parts[i]} is not polynomial: {y}")
                coeffs[parts[i]] = y.num
        result[lam] = coeffs
    return result


def _cache_path(n):
    import os

    return os.path.join(_cache_dir, f"jack-v{ORACLE_VERSION}-n{n}.txt")


def _load_cached(n):
    import os

    if not _cache_dir:
        return None
    path = _cache_path(n)
    if not os.path.exists(path):
        return None
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != f"# jackmaps oracle v{ORACLE_VERSION} n={n}":
            return None
        table: dict = {}
        for line in fh:
            line = line.strip()
            if not line:
                continue
            lam, pi, poly = line.split("|")
            lam_t = YoungDiagram.parse(lam).parts
            pi_t = YoungDiagram.parse(pi).parts
            f = parse_expression(poly)
            if not isinstance(f, LaurentA):
                f = LaurentA.constant(f)
            table.setdefault(lam_t, {})[pi_t] = f
    return table


def _store_cached(n, table):
    import os

    if not _cache_dir:
        return
    os.makedirs(_cache_dir, exist_ok=True)
    tmp = _cache_path(n) + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(f"# jackmaps oracle v{ORACLE_VERSION} n={n}\n")
        for lam in sorted(table, reverse=True):
            for pi in sorted(table[lam], reverse=True):
                fh.write(f"{','.join(map(str, lam))}|{','.join(map(str, pi))}|{table[lam][pi]}\n")
    os.replace(tmp, _cache_path(n))


def _theta_table(n: int) -> dict:
    """{lambda: {pi: LaurentA}} for all partitions of n (memoized)."""
    if n > MAX_JACK_SIZE:
        raise TooLarge(f"Jack polynomials of size {n} exceed the limit {MAX_JACK_SIZE}")
    table = _tables.get(n)
    if table is not None:
        return table
    with _lock:
        table = _tables.get(n)
        if table is None:
            table = _load_cached(n)
            if table is None:
                raw = _gram_schmidt(n)
                table = {lam: {pi: q.to_laurent() for pi, q in row.items()} for lam, row in raw.items()}
                _store_cached(n, table)
            _tables[n] = table
    return table


def jack_J(lam) -> SymFuncElement:
    """J_lambda in the power-sum basis; coefficients are LaurentA in A (alpha = A^2)."""
    lam = _as_parts(lam)
    return SymFuncElement("powersum", dict(_theta_table(sum(lam))[lam]))


def theta(pi, lam) -> LaurentA:
    pi, lam = _as_parts(pi), _as_parts(lam)
    if sum(pi) != sum(lam):
        raise SizeMismatch(f"|{pi}| != |{lam}|")
    return _theta_table(sum(lam))[lam].get(pi, LaurentA())


def inner_product(f: SymFuncElement, g: SymFuncElement) -> LaurentA:
    """<f, g> with <p_pi, p_rho> = delta z_pi alpha^len(pi), alpha = A^2."""
    if f.basis != "powersum" or g.basis != "powersum":
        raise ValueError("inner product needs power-sum coordinates")
    acc = LaurentA()
    for pi, c in f.coeffs.items():
        d = g.coeffs.get(pi)
        if d:
            acc = acc + c * d * LaurentA({2 * len(pi): z_coefficient(pi)})
    return acc


def jack_character(mu, lam) -> LaurentA:
    mu = _as_parts(mu)
    lam = _as_parts(lam)
    k, n = sum(mu), sum(lam)
    if n < k:
        return LaurentA()
    m1 = mu.count(1)
    pi = mu + (1,) * (n - k)
    th = theta(pi, lam)
    return th * LaurentA({len(mu) - k: comb(n - k + m1, m1) * z_coefficient(mu)})


# -- structure constants -----------------------------------------------------------


def _solve_square(matrix, rhs):
    from .algebra.linsolve import solve

    rows = [[RationalFunction.from_laurent(x) for x in row] for row in matrix]
    b = [RationalFunction.from_laurent(x) for x in rhs]
    sol = solve(rows, b, len(rows[0]) if rows else 0, zero=RationalFunction(QPoly((), "A")))
    if not sol.unique:
        raise Inconsistent("character matrix is singular", rank_defect=sol.nullity)
    return [v.to_laurent() for v in sol.values]


def structure_constants(mu, nu, verify: bool = True) -> dict:
    """Coefficients g_rho with Ch_mu * Ch_nu = sum_rho g_rho Ch_rho."""
    mu, nu = _as_parts(mu), _as_parts(nu)
    K = sum(mu) + sum(nu)
    if K > 6:
        raise TooLarge("|mu| + |nu| must be at most 6")
    coeffs: dict = {}
    for size in range(K + 1):
        lams = [p.parts for p in partitions(size)]
        rhos = lams
        rhs = []
        for lam in lams:
            v = jack_character(mu, lam) * jack_character(nu, lam)
            for rho, c in coeffs.items():
                v = v - c * jack_character(rho, lam)
            rhs.append(v)
        matrix = [[jack_character(rho, lam) for rho in rhos] for lam in lams]
        for rho, val in zip(rhos, _solve_square(matrix, rhs)):
            coeffs[rho] = val
    coeffs = {rho: c for rho, c in coeffs.items() if c}
    if verify:
        for lam in partitions(K + 1):
            lhs = jack_character(mu, lam) * jack_character(nu, lam)
            rhs = sum((c * jack_character(rho, lam) for rho, c in coeffs.items()), LaurentA())
            if lhs != rhs:
                raise Inconsistent(f"expansion fails on {lam}")
    return coeffs


def structure_constants_delta(mu, nu) -> dict:
    """Structure constants rewritten as polynomials in delta = A - 1/A when possible."""
    out = {}
    for rho, c in structure_constants(mu, nu).items():
        try:
            out[rho] = laurent_to_delta(c)
        except NotExpressible:
            out[rho] = c
    return out


# -- symmetric group characters ---------------------------------------------------


@lru_cache(maxsize=None)
def _mn(lam: tuple, rho: tuple) -> int:
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    L = len(lam)
    beta = [lam[i] + L - 1 - i for i in range(L)]
    bset = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in bset:
            continue
        sign = -1 if sum(1 for x in beta if t < x < b) % 2 else 1
        nb = sorted((bset - {b}) | {t}, reverse=True)
        new = tuple(x - (L - 1 - i) for i, x in enumerate(nb))
        new = tuple(p for p in new if p)
        total += sign * _mn(new, rest)
    return total


def mn_character(lam, pi) -> int:
    """chi^lam on the class pi + 1^(|lam| - |pi|) by Murnaghan-Nakayama."""
    lam, pi = _as_parts(lam), _as_parts(pi)
    n = sum(lam)
    if sum(pi) > n:
        raise SizeMismatch(f"|{pi}| > |{lam}|")
    rho = pi + (1,) * (n - sum(pi))
    return _mn(lam, tuple(sorted(rho, reverse=True)))


def normalized_character(pi, lam) -> Fraction:
    """Falling factorial times the character ratio (the A = 1 Jack character)."""
    lam, pi = _as_parts(lam), _as_parts(pi)
    n, k = sum(lam), sum(pi)
    if n < k:
        return Fraction(0)
    falling = prod(range(n - k + 1, n + 1))
    return Fraction(falling * mn_character(lam, pi), mn_character(lam, ()))
