"""Oriented bicolored maps encoded as transitive permutation pairs.

Edges are labeled 0..n-1 internally (1..n in serialized form). White
vertices are the cycles of ``sigma``, black vertices the cycles of
``tau`` and faces the cycles of ``sigma o tau``. Rooted maps are handled
through the identity "labeled pairs = (n-1)! x rooted maps"; sums over
rooted maps are labeled sums divided by (n-1)!.
"""

from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .. import kernels
from ..algebra import GAMMA, LaurentA, MultiPoly
from ..diagrams import YoungDiagram, stanley_variables
from ..errors import InvalidMap, TooLarge

MAX_LABELED = 7
MAX_MAP_SUM = 6


def _cycles(p):
    n = len(p)
    seen = [False] * n
    out = []
    for i in range(n):
        if not seen[i]:
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = p[j]
            out.append(tuple(cyc))
    return out


def _vertex_ids(p):
    """Vertex index of each edge, vertices numbered by first appearance."""
    lab = [-1] * len(p)
    nxt = 0
    for i in range(len(p)):
        if lab[i] < 0:
            j = i
            while lab[j] < 0:
                lab[j] = nxt
                j = p[j]
            nxt += 1
    return tuple(lab), nxt


def _is_perm(p, n):
    return len(p) == n and sorted(p) == list(range(n))


@dataclass(frozen=True, order=True)
class OrientedBicolMap:
    """A pair (sigma, tau) of 0-based permutations acting transitively."""

    sigma: tuple
    tau: tuple

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "tau", tuple(self.tau))
        n = len(self.sigma)
        if n < 1 or not _is_perm(self.sigma, n) or not _is_perm(self.tau, n):
            raise InvalidMap("sigma and tau must be permutations of the same size >= 1")
        if not self._transitive():
            raise InvalidMap("sigma and tau do not act transitively")

    def _transitive(self):
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in (self.sigma[i], self.tau[i]):
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(self.sigma)

    @property
    def n(self) -> int:
        return len(self.sigma)

    @classmethod
    def from_one_indexed(cls, sigma, tau) -> "OrientedBicolMap":
        return cls(tuple(x - 1 for x in sigma), tuple(x - 1 for x in tau))

    def whites(self):
        return _cycles(self.sigma)

    def blacks(self):
        return _cycles(self.tau)

    def faces(self):
        return _cycles(tuple(self.sigma[self.tau[i]] for i in range(self.n)))

    def to_dict(self) -> dict:
        return {"n": self.n, "sigma": [x + 1 for x in self.sigma], "tau": [x + 1 for x in self.tau]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "OrientedBicolMap":
        m = cls.from_one_indexed(data["sigma"], data["tau"])
        if data.get("n", m.n) != m.n:
            raise InvalidMap("field n does not match the permutation length")
        return m

    @classmethod
    def from_json(cls, text: str) -> "OrientedBicolMap":
        return cls.from_dict(json.loads(text))

    def profile(self):
        wid, nw = _vertex_ids(self.sigma)
        bid, nb = _vertex_ids(self.tau)
        return wid, bid, nw, nb


@dataclass(frozen=True)
class MapStats:
    whites: int
    blacks: int
    faces: int
    genus: int


def map_stats(m: OrientedBicolMap) -> MapStats:
    w, b, f = len(m.whites()), len(m.blacks()), len(m.faces())
    chi = w + b - m.n + f
    return MapStats(w, b, f, (2 - chi) // 2)


def _guard(n, limit, what):
    if n < 1:
        raise ValueError(f"{what}: n must be positive")
    if n > limit:
        raise TooLarge(f"{what}: n={n} exceeds the limit {limit}")


def enumerate_labeled(n: int):
    """Yield every transitive pair in S_n x S_n, lexicographically by (sigma, tau)."""
    _guard(n, MAX_LABELED, "enumerate_labeled")
    perms = list(permutations(range(n)))
    for s in perms:
        for t in perms:
            try:
                yield OrientedBicolMap(s, t)
            except InvalidMap:
                continue


def count_labeled(n: int, jobs: int = 1) -> int:
    _guard(n, MAX_LABELED, "count_labeled")
    return sum(kernels.pair_profiles(n, jobs=jobs).values())


def _relabel(m: OrientedBicolMap, pi) -> tuple:
    # conjugate by pi: new label pi[i] for old label i
    n = m.n
    s = [0] * n
    t = [0] * n
    for i in range(n):
        s[pi[i]] = pi[m.sigma[i]]
        t[pi[i]] = pi[m.tau[i]]
    return tuple(s), tuple(t)


def rooted_canonical(m: OrientedBicolMap) -> OrientedBicolMap:
    """Lexicographically smallest conjugate by permutations fixing label 1."""
    best = None
    for rest in permutations(range(1, m.n)):
        cand = _relabel(m, (0,) + rest)
        if best is None or cand < best:
            best = cand
    return OrientedBicolMap(*best)


def _bfs_key(m: OrientedBicolMap) -> tuple:
    # relabeling by search order from label 0 is a complete invariant of
    # the rooted map, since the action is transitive
    order = {0: 0}
    queue = [0]
    for i in queue:
        for j in (m.sigma[i], m.tau[i]):
            if j not in order:
                order[j] = len(order)
                queue.append(j)
    pi = [order[i] for i in range(m.n)]
    return _relabel(m, pi)


def enumerate_rooted(n: int):
    """One canonical representative per rooted map, sorted."""
    _guard(n, 5, "enumerate_rooted")
    seen = {}
    for m in enumerate_labeled(n):
        key = _bfs_key(m)
        if key not in seen:
            seen[key] = m
    return sorted(rooted_canonical(m) for m in seen.values())


# -- embeddings and weights -------------------------------------------------


def count_embeddings(m: OrientedBicolMap, lam: YoungDiagram) -> int:
    """Pairs (column per white, row per black) sending every edge into a box of lam."""
    wid, bid, nw, nb = m.profile()
    return kernels.embedding_count(wid, bid, nw, nb, lam.parts)


def _vertex_prefactor(nw: int, nb: int) -> LaurentA:
    # A^W (-A)^(-B)
    return LaurentA({nw - nb: (-1) ** nb})


def weight_N(m: OrientedBicolMap, lam: YoungDiagram) -> LaurentA:
    wid, bid, nw, nb = m.profile()
    return _vertex_prefactor(nw, nb) * kernels.embedding_count(wid, bid, nw, nb, lam.parts)


def _multirect_poly(wid, bid, nw, nb, ell) -> MultiPoly:
    terms = kernels.multirect_terms(wid, bid, nw, nb, ell)
    return MultiPoly(stanley_variables(ell), terms)


def weight_N_multirect(m: OrientedBicolMap, ell: int) -> MultiPoly:
    """Embedding weight on the multirectangular diagram with ``ell`` rectangles.

    Computed in telescoped form: for a row-group choice h of the black
    vertices, the admissible column blocks of a white vertex w sum to
    q_(max h over the neighbours of w).
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    wid, bid, nw, nb = m.profile()
    return _multirect_poly(wid, bid, nw, nb, ell)


def _grouped_profiles(n, jobs):
    """{(wid, bid, nw, nb): {faces: count}} over all labeled pairs."""
    grouped = defaultdict(dict)
    for (faces, wid, bid), c in kernels.pair_profiles(n, jobs=jobs).items():
        key = (wid, bid, max(wid) + 1, max(bid) + 1)
        grouped[key][faces] = grouped[key].get(faces, 0) + c
    return grouped


def ch_top_maps(n: int, ell: int, jobs: int = 1) -> MultiPoly:
    """-(1/(n-1)!) * sum over labeled pairs of g^(n+1-|V|) * weight_N_multirect."""
    _guard(n, MAX_MAP_SUM, "ch_top_maps")
    if ell < 1:
        raise ValueError("ell must be positive")
    vs = stanley_variables(ell, with_gamma=True)
    acc = defaultdict(int)
    for (wid, bid, nw, nb), by_faces in _grouped_profiles(n, jobs).items():
        mult = sum(by_faces.values())
        gexp = n + 1 - nw - nb
        for exps, c in kernels.multirect_terms(wid, bid, nw, nb, ell).items():
            acc[exps + (gexp,)] += c * mult
    fact = math.factorial(n - 1)
    for k, v in acc.items():
        if v % fact:
            raise ArithmeticError(f"labeled sum not divisible by (n-1)! at {k}")
    return MultiPoly(vs, {k: Fraction(-v, fact) for k, v in acc.items()})


def ch_top_maps_value(n: int, lam: YoungDiagram, jobs: int = 1) -> LaurentA:
    """The map sum of ch_top_maps evaluated directly on a concrete diagram.

    Each map contributes gamma^(n+1-|V|) * weight_N(m, lam); no
    multirectangular substitution is involved.
    """
    _guard(n, MAX_MAP_SUM, "ch_top_maps_value")
    total = LaurentA()
    for (wid, bid, nw, nb), by_faces in _grouped_profiles(n, jobs).items():
        mult = sum(by_faces.values())
        cnt = kernels.embedding_count(wid, bid, nw, nb, lam.parts)
        if cnt:
            total = total + GAMMA ** (n + 1 - nw - nb) * _vertex_prefactor(nw, nb) * (cnt * mult)
    return total * Fraction(-1, math.factorial(n - 1))


def ch_a1_one_face(n: int, lam: YoungDiagram, jobs: int = 1) -> Fraction:
    """-(1/(n-1)!) * sum over one-face labeled pairs of weight_N(m, lam) at A = 1."""
    _guard(n, MAX_MAP_SUM, "ch_a1_one_face")
    total = 0
    for (wid, bid, nw, nb), by_faces in _grouped_profiles(n, jobs).items():
        mult = by_faces.get(1, 0)
        if mult:
            total += (-1) ** nb * kernels.embedding_count(wid, bid, nw, nb, lam.parts) * mult
    return Fraction(-total, math.factorial(n - 1))
