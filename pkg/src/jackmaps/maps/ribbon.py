"""Ribbon graphs: bicolored maps on possibly non-orientable surfaces.

A ribbon graph is a rotation system (a cyclic order of half-edges at each
vertex) plus a twist bit per edge. Flipping a vertex reverses its rotation
and toggles the twist of every incident edge; flip-equivalent ribbon
graphs describe the same map.

Edge labels are kept when edges are deleted, so a sub-ribbon graph may
have labels that are not 1..n. Half-edges are integers; the graphs built
here use ``2e - 1`` for the white end of edge ``e`` and ``2e`` for its
black end.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations, product

from ..errors import InvalidMap, TooLarge, UnknownEdge
from .oriented import OrientedBicolMap, enumerate_labeled

MAX_RIBBON = 4


@dataclass(frozen=True)
class Vertex:
    color: str  # "w" or "b"
    rotation: tuple


def _cyclic_min(seq):
    if not seq:
        return ()
    k = seq.index(min(seq))
    return tuple(seq[k:]) + tuple(seq[:k])


class RibbonGraph:
    """Bicolored rotation system with twisted edges."""

    __slots__ = ("vertices", "edges", "twists", "_end")

    def __init__(self, vertices, edges, twists=None):
        self.vertices = tuple(Vertex(c, tuple(r)) for c, r in vertices)
        self.edges = {int(k): tuple(v) for k, v in dict(edges).items()}
        tw = {} if twists is None else {int(k): bool(v) for k, v in dict(twists).items()}
        self.twists = {e: tw.get(e, False) for e in self.edges}
        self._check()

    def _check(self):
        where = {}
        for i, v in enumerate(self.vertices):
            if v.color not in ("w", "b"):
                raise InvalidMap(f"bad vertex color {v.color!r}")
            for h in v.rotation:
                if h in where:
                    raise InvalidMap(f"half-edge {h} appears twice")
                where[h] = i
        paired = set()
        for e, (hw, hb) in self.edges.items():
            for h in (hw, hb):
                if h not in where or h in paired:
                    raise InvalidMap(f"edge {e} has a bad half-edge {h}")
                paired.add(h)
            if self.vertices[where[hw]].color != "w" or self.vertices[where[hb]].color != "b":
                raise InvalidMap(f"edge {e} does not join a white and a black vertex")
        if len(paired) != len(where):
            raise InvalidMap("some half-edge is not paired")
        if set(self.twists) != set(self.edges):
            raise InvalidMap("twists must be given for exactly the edge labels")
        # half-edge -> (edge label, vertex index)
        self._end = {}
        for e, (hw, hb) in self.edges.items():
            self._end[hw] = (e, where[hw])
            self._end[hb] = (e, where[hb])

    @property
    def n(self) -> int:
        return len(self.edges)

    def labels(self):
        return sorted(self.edges)

    def edge_ends(self, e):
        """(white vertex index, black vertex index) of edge e."""
        hw, hb = self.edges[e]
        return self._end[hw][1], self._end[hb][1]

    def degrees(self):
        return tuple(len(v.rotation) for v in self.vertices)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_pair(cls, m: OrientedBicolMap, twists=None) -> "RibbonGraph":
        """Ribbon graph of an oriented map (edge e has label e + 1)."""
        verts = [("w", tuple(2 * e + 1 for e in cyc)) for cyc in m.whites()]
        verts += [("b", tuple(2 * e + 2 for e in cyc)) for cyc in m.blacks()]
        edges = {e + 1: (2 * e + 1, 2 * e + 2) for e in range(m.n)}
        return cls(verts, edges, twists)

    def to_pair(self) -> OrientedBicolMap:
        """The oriented map read off the rotations, ignoring twists."""
        if self.labels() != list(range(1, self.n + 1)):
            raise InvalidMap("edge labels must be 1..n")
        n = self.n
        sigma = [0] * n
        tau = [0] * n
        for v in self.vertices:
            rot = [self._end[h][0] - 1 for h in v.rotation]
            target = sigma if v.color == "w" else tau
            for i, e in enumerate(rot):
                target[e] = rot[(i + 1) % len(rot)]
        return OrientedBicolMap(sigma, tau)

    def with_twists(self, twists) -> "RibbonGraph":
        return RibbonGraph([(v.color, v.rotation) for v in self.vertices], self.edges, twists)

    def delete_edges(self, labels) -> "RibbonGraph":
        """Remove the given edges; their endpoints stay as (possibly isolated) vertices."""
        labels = set(labels)
        gone = {h for e in labels for h in self.edges[e]}
        verts = [(v.color, tuple(h for h in v.rotation if h not in gone)) for v in self.vertices]
        edges = {e: he for e, he in self.edges.items() if e not in labels}
        return RibbonGraph(verts, edges, {e: self.twists[e] for e in edges})

    def flip(self, i: int) -> "RibbonGraph":
        """Reverse the rotation at vertex i and toggle the twists of its edges."""
        verts = [(v.color, v.rotation[::-1] if j == i else v.rotation) for j, v in enumerate(self.vertices)]
        tw = dict(self.twists)
        for h in self.vertices[i].rotation:
            e = self._end[h][0]
            tw[e] = not tw[e]
        return RibbonGraph(verts, self.edges, tw)

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "vertices": [{"color": v.color, "rotation": list(v.rotation)} for v in self.vertices],
            "edges": {str(e): list(self.edges[e]) for e in self.labels()},
            "twists": {str(e): int(self.twists[e]) for e in self.labels()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "RibbonGraph":
        r = cls(
            [(v["color"], v["rotation"]) for v in data["vertices"]],
            {int(k): v for k, v in data["edges"].items()},
            {int(k): v for k, v in data.get("twists", {}).items()},
        )
        if data.get("n", r.n) != r.n:
            raise InvalidMap("field n does not match the edge count")
        return r

    def __eq__(self, other):
        return isinstance(other, RibbonGraph) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(self.to_json())

    def __repr__(self):
        return f"RibbonGraph({self.to_json()})"


# -- invariants -----------------------------------------------------------------


class _DSU:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[a] = b

    def count(self):
        return len({self.find(x) for x in self.parent})


def trace_faces(r: RibbonGraph) -> int:
    """Number of boundary walks; an isolated vertex counts as one face.

    Each half-edge has two sides. At a vertex, side 1 of a half-edge is
    glued to side 0 of the next half-edge in the rotation; along an edge,
    side s at one end continues on side 1-s at the other end, or on the
    same side when the edge is twisted.
    """
    flags = [(h, s) for v in r.vertices for h in v.rotation for s in (0, 1)]
    dsu = _DSU(flags)
    for v in r.vertices:
        rot = v.rotation
        for i, h in enumerate(rot):
            dsu.union((h, 1), (rot[(i + 1) % len(rot)], 0))
    for e, (hw, hb) in r.edges.items():
        for s in (0, 1):
            dsu.union((hw, s), (hb, s if r.twists[e] else 1 - s))
    isolated = sum(1 for v in r.vertices if not v.rotation)
    return (dsu.count() if flags else 0) + isolated


def components(r: RibbonGraph) -> int:
    dsu = _DSU(range(len(r.vertices)))
    for e in r.edges:
        dsu.union(*r.edge_ends(e))
    return dsu.count()


def _flip_solution(r: RibbonGraph, fixed=None):
    """Flip bits making every twist zero, or None if impossible.

    ``fixed`` optionally pins the flip bit of one vertex to 0.
    """
    adj = {i: [] for i in range(len(r.vertices))}
    for e in r.edges:
        a, b = r.edge_ends(e)
        adj[a].append((b, r.twists[e]))
        adj[b].append((a, r.twists[e]))
    bits = {}
    order = ([fixed] if fixed is not None else []) + list(range(len(r.vertices)))
    for start in order:
        if start in bits:
            continue
        bits[start] = 0
        stack = [start]
        while stack:
            a = stack.pop()
            for b, t in adj[a]:
                want = bits[a] ^ int(t)
                if b not in bits:
                    bits[b] = want
                    stack.append(b)
                elif bits[b] != want:
                    return None
    return bits


def is_orientable(r: RibbonGraph) -> bool:
    """True when some set of vertex flips removes every twist."""
    return _flip_solution(r) is not None


# -- canonical forms ---------------------------------------------------------------


def _apply_flips(r: RibbonGraph, bits) -> tuple:
    """Serialized key of r after flipping the vertices with bit 1."""
    label = {h: r._end[h][0] for v in r.vertices for h in v.rotation}
    tw = dict(r.twists)
    verts = []
    for i, v in enumerate(r.vertices):
        rot = [label[h] for h in v.rotation]
        if bits.get(i, 0):
            rot.reverse()
            for e in rot:
                tw[e] = not tw[e]
        verts.append((v.color, _cyclic_min(rot)))
    return tuple(sorted(verts)), tuple(int(tw[e]) for e in r.labels())


def root_vertex(r: RibbonGraph, root_edge=None):
    """White endpoint of ``root_edge`` (default: the smallest label)."""
    if not r.edges:
        return None
    if root_edge is None:
        root_edge = min(r.edges)
    return r.edge_ends(root_edge)[0]


def _component_trees(r: RibbonGraph):
    """Per component with edges: (vertex list sorted, BFS tree edges by label)."""
    adj = {i: [] for i in range(len(r.vertices))}
    for e in r.labels():
        a, b = r.edge_ends(e)
        adj[a].append((e, b))
        adj[b].append((e, a))
    seen = set()
    out = []
    for e0 in r.labels():
        start = r.edge_ends(e0)[0]
        if start in seen:
            continue
        seen.add(start)
        queue = [start]
        tree = []
        for a in queue:
            for e, b in sorted(adj[a]):
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
                    tree.append((a, e, b))
        out.append((start, tree))
    return out


def canonical_key(r: RibbonGraph, rooted: bool = False, root_edge=None, pin=None) -> tuple:
    """Complete invariant of the flip class of r (labels preserved).

    Each component is normalized by flipping so that its breadth-first
    spanning tree (from the white end of its smallest edge) is untwisted;
    the remaining freedom is the flip of the tree root, minimized over.
    With ``rooted`` the flip of the root vertex is pinned instead; ``pin``
    names the pinned vertex directly (useful once the root edge is deleted).
    """
    comps = _component_trees(r)
    pinned = pin if pin is not None else (root_vertex(r, root_edge) if rooted else None)
    options = []
    for start, tree in comps:
        choices = []
        for root_bit in (0, 1):
            bits = {start: root_bit}
            for a, e, b in tree:
                bits[b] = bits[a] ^ int(r.twists[e])
            if bits.get(pinned, 0) == 0:
                choices.append(bits)
        options.append(choices)
    best = None
    for combo in product(*options):
        bits = {}
        for part in combo:
            bits.update(part)
        key = _apply_flips(r, bits)
        if best is None or key < best:
            best = key
    return best


def canonical_key_exhaustive(r: RibbonGraph, rooted: bool = False, root_edge=None) -> tuple:
    """Reference implementation: minimum over all 2^V flip patterns."""
    pinned = root_vertex(r, root_edge) if rooted else None
    best = None
    for bits in product((0, 1), repeat=len(r.vertices)):
        if pinned is not None and bits[pinned]:
            continue
        key = _apply_flips(r, dict(enumerate(bits)))
        if best is None or key < best:
            best = key
    return best


def from_key(key) -> RibbonGraph:
    """Rebuild the representative ribbon graph of a canonical key."""
    verts, tw = key
    labels = sorted(e for _, rot in verts for e in rot)
    labels = sorted(set(labels))
    out = []
    for color, rot in verts:
        off = 1 if color == "w" else 0
        out.append((color, tuple(2 * e - off for e in rot)))
    edges = {e: (2 * e - 1, 2 * e) for e in labels}
    return RibbonGraph(out, edges, dict(zip(labels, tw)))


def flip_equivalent(r1: RibbonGraph, r2: RibbonGraph) -> bool:
    """Related by vertex flips and a label-preserving, color-preserving isomorphism."""
    if r1.labels() != r2.labels():
        return False
    return canonical_key(r1) == canonical_key(r2)


def twist_edge(r: RibbonGraph, e) -> RibbonGraph:
    if e not in r.edges:
        raise UnknownEdge(f"no edge labeled {e}")
    tw = dict(r.twists)
    tw[e] = not tw[e]
    return r.with_twists(tw)


# -- ordered maps and the progressive condition --------------------------------------


@dataclass(frozen=True)
class OrderedMap:
    """A map with a linear order on its edge labels (first = smallest)."""

    map: object
    order: tuple

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        labels = self.ribbon().labels()
        if sorted(self.order) != labels:
            raise InvalidMap("order must be a permutation of the edge labels")

    def ribbon(self) -> RibbonGraph:
        if isinstance(self.map, OrientedBicolMap):
            return RibbonGraph.from_pair(self.map)
        return self.map


def _progressive(r: RibbonGraph, order) -> bool:
    for i in range(1, len(order)):
        sub = r.delete_edges(order[:i])
        if components(sub) != trace_faces(sub):
            return False
    return True


def progressive_condition(om: OrderedMap) -> bool:
    """Every proper prefix deletion leaves each component with exactly one face."""
    r = om.ribbon()
    if components(r) != 1 or trace_faces(r) != 1:
        raise InvalidMap("progressive_condition needs a connected one-face map")
    return _progressive(r, om.order)


# -- enumeration and the two-sided count ------------------------------------------------


def _guard(n):
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_RIBBON:
        raise TooLarge(f"n={n} exceeds the ribbon enumeration limit {MAX_RIBBON}")


def _all_classes(n, rooted):
    keys = set()
    for m in enumerate_labeled(n):
        base = RibbonGraph.from_pair(m)
        for bits in product((False, True), repeat=n):
            r = base.with_twists(dict(zip(range(1, n + 1), bits)))
            keys.add(canonical_key(r, rooted=rooted))
    return sorted(keys)


def enumerate_nonoriented_labeled(n: int, rooted: bool = False):
    """One representative per flip class of connected edge-labeled ribbon graphs.

    With ``rooted`` the rotation at the white end of edge 1 is not allowed
    to flip, which counts each class once per orientation of the root.
    """
    _guard(n)
    return [from_key(k) for k in _all_classes(n, rooted)]


def count_S1_S2(n: int):
    """Both sides of the two-sided count for n edges.

    S1: pairs (one-face ribbon class rooted at edge 1, linear order on the
    labels) satisfying the progressive condition, divided by (n-1)! to pass
    from labeled to rooted objects. S2: n x (labeled oriented pairs).
    """
    _guard(n)
    one_face = [r for r in enumerate_nonoriented_labeled(n, rooted=True) if trace_faces(r) == 1]
    total = 0
    orders = list(permutations(range(1, n + 1)))
    for r in one_face:
        total += sum(1 for o in orders if _progressive(r, o))
    fact = 1
    for i in range(2, n):
        fact *= i
    if total % fact:
        raise ArithmeticError("S1 count not divisible by (n-1)!")
    s2 = n * sum(1 for _ in enumerate_labeled(n))
    return total // fact, s2
