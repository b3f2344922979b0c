"""Constructive matching between the two sides of the two-sided count.

Objects are normalized so that the linear order on edges is 1 < 2 < ... < n;
a pair is then an edge-labeled map together with a root edge r.

Left side: one-face ribbon classes in which the rotation at the white end
of r is fixed (not flipped), satisfying the progressive condition.
Right side: labeled oriented pairs (sigma, tau), with a root edge r.

Both sides are rebuilt by inserting edges n, n-1, ..., 1 onto the full
vertex set. Each insertion offers two twists for the new edge. The left
side keeps those preserving "each component has one face", the right
side those preserving orientability, and twists landing in the same flip
class count once. A leaf edge always gives one class; a bridge between
two larger components gives two (the relative orientation of the sides),
valid on both sides. Legitimate classes are sorted by canonical key and
matched by index.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import AmbiguousChoice, TooLarge
from .oriented import OrientedBicolMap, enumerate_labeled
from .ribbon import (
    RibbonGraph,
    _progressive,
    canonical_key,
    components,
    enumerate_nonoriented_labeled,
    from_key,
    is_orientable,
    root_vertex,
    trace_faces,
)

MAX_BIJECTION = 3


@dataclass(frozen=True)
class InsertionStep:
    edge: int
    bridge: bool
    left_choices: int
    right_choices: int
    index: int


@dataclass
class BijectionEntry:
    source: RibbonGraph
    target: OrientedBicolMap
    root: int
    steps: list = field(default_factory=list)


def _insertion_forest(r: RibbonGraph):
    """Edges that join two components when inserted in order n, ..., 1."""
    parent = list(range(len(r.vertices)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    bridges = set()
    for e in sorted(r.edges, reverse=True):
        a, b = (find(x) for x in r.edge_ends(e))
        if a != b:
            parent[a] = b
            bridges.add(e)
    return bridges


def _normalize(r: RibbonGraph, forest, root):
    """Flip so that forest edges are untwisted, keeping the root vertex fixed."""
    adj = {i: [] for i in range(len(r.vertices))}
    for e in forest:
        a, b = r.edge_ends(e)
        adj[a].append((b, e))
        adj[b].append((a, e))
    bits = {}
    for start in [root] + list(range(len(r.vertices))):
        if start in bits:
            continue
        bits[start] = 0
        stack = [start]
        while stack:
            a = stack.pop()
            for b, e in adj[a]:
                if b not in bits:
                    bits[b] = bits[a] ^ int(r.twists[e])
                    stack.append(b)
    out = r
    for i in sorted(i for i, v in bits.items() if v):
        out = out.flip(i)
    return out


def _legit(partial: RibbonGraph, e, pin, keep):
    """Sorted canonical keys of the legitimate twist classes for edge e."""
    keys = set()
    for t in (False, True):
        tw = dict(partial.twists)
        tw[e] = t
        cand = partial.with_twists(tw)
        if keep(cand):
            keys.add((canonical_key(cand, pin=pin), t))
    # several twists may land in one class; keep one twist per class
    by_key = {}
    for k, t in sorted(keys):
        by_key.setdefault(k, t)
    return sorted(by_key.items())


def _left_ok(g):
    return components(g) == trace_faces(g)


def match(source: RibbonGraph, root: int):
    """Image of a left-side object; returns (target, steps)."""
    n = source.n
    forest = _insertion_forest(source)
    rstar = _normalize(source, forest, root_vertex(source, root))
    left = rstar
    right = rstar.with_twists({e: False for e in rstar.edges})
    pin = root_vertex(source, root)
    steps = []
    for e in range(n, 0, -1):
        present = [x for x in range(1, n + 1) if x < e]
        lpart = left.delete_edges(present)
        rpart = right.delete_edges(present)
        lchoices = _legit(lpart, e, pin, _left_ok)
        rchoices = _legit(rpart, e, pin, is_orientable)
        if len(lchoices) != len(rchoices) or len(lchoices) not in (1, 2):
            raise AmbiguousChoice(
                f"edge {e}: {len(lchoices)} legitimate classes on the left, {len(rchoices)} on the right"
            )
        actual = canonical_key(lpart, pin=pin)
        idx = [k for k, _ in lchoices].index(actual)
        tw = dict(right.twists)
        tw[e] = rchoices[idx][1]
        right = right.with_twists(tw)
        steps.append(InsertionStep(e, e in forest, len(lchoices), len(rchoices), idx))
    if any(right.twists.values()):
        right = _normalize(right, _insertion_forest(right), root_vertex(right, root))
    if any(right.twists.values()):
        raise AmbiguousChoice("right-hand construction is not orientable")
    return right.to_pair(), steps


def left_side(n: int):
    """All (ribbon representative, root) pairs on the left, deterministic order."""
    out = []
    for root in range(1, n + 1):
        for key in _rooted_one_face_keys(n, root):
            r = from_key(key)
            if _progressive(r, tuple(range(1, n + 1))):
                out.append((r, root))
    return out


def _rooted_one_face_keys(n, root):
    keys = set()
    for r in enumerate_nonoriented_labeled(n):
        if trace_faces(r) != 1:
            continue
        # an unrooted class splits into at most two classes once the root is pinned
        keys.add(canonical_key(r, rooted=True, root_edge=root))
        keys.add(canonical_key(r.flip(root_vertex(r, root)), rooted=True, root_edge=root))
    return sorted(keys)


def right_side(n: int):
    return [(m, root) for root in range(1, n + 1) for m in enumerate_labeled(n)]


def build_bijection(n: int):
    """Match every left-side object to a right-side one and verify the result.

    Returns the list of entries; raises AmbiguousChoice if some insertion
    step offers different numbers of classes on the two sides.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_BIJECTION:
        raise TooLarge(f"n={n} exceeds the bijection limit {MAX_BIJECTION}")
    entries = []
    for source, root in left_side(n):
        target, steps = match(source, root)
        entries.append(BijectionEntry(source, target, root, steps))
    images = {(e.target, e.root) for e in entries}
    if len(images) != len(entries):
        raise AmbiguousChoice("the matching is not injective")
    if images != set(right_side(n)):
        raise AmbiguousChoice("the matching is not onto the right-hand side")
    return entries
