"""Exact Gauss-Jordan elimination over any field (Fraction, RationalFunction)."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["Solution", "solve"]


@dataclass
class Solution:
    values: list
    rank: int
    nullity: int
    consistent: bool

    @property
    def unique(self):
        return self.consistent and self.nullity == 0


def solve(rows, rhs, ncols, zero=0):
    """Solve ``rows @ x = rhs`` exactly.

    ``rows`` is a list of length-``ncols`` lists. Free variables (if any)
    are set to zero in ``values``; inspect ``nullity`` before trusting it.
    """
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                row_r = m[r]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    consistent = all(not row[-1] for row in m[r:])
    values = [zero] * ncols
    for i, c in enumerate(pivots):
        values[c] = m[i][-1]
    return Solution(values, len(pivots), ncols - len(pivots), consistent)
