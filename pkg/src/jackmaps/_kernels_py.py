"""Pure-Python enumeration kernels (fallback for the compiled ``_kernels``).

Profiles encode a labeled permutation pair by what the map-sum formulas
need: the face count and, per edge, the index of its white and black
vertex (vertices numbered by first appearance along edge labels).
Keys are packed into a single int, 3 bits per digit.
"""

from itertools import permutations, product

BACKEND = "python"


def _labels(p, n):
    lab = [-1] * n
    nxt = 0
    for i in range(n):
        if lab[i] < 0:
            j = i
            while lab[j] < 0:
                lab[j] = nxt
                j = p[j]
            nxt += 1
    return lab, nxt


def encode_profile(n, faces, wid, bid):
    key = faces
    for v in wid:
        key = (key << 3) | v
    for v in bid:
        key = (key << 3) | v
    return key


def pair_profiles(n, start=0, stop=None):
    """Count transitive pairs (sigma, tau) by packed profile key.

    sigma ranges over lexicographic permutation indices [start, stop).
    """
    perms = list(permutations(range(n)))
    if stop is None:
        stop = len(perms)
    counts = {}
    for si in range(start, stop):
        s = perms[si]
        wid, nw = _labels(s, n)
        for t in perms:
            bid, nb = _labels(t, n)
            # transitivity: union whites and blacks through edges
            parent = list(range(nw + nb))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            comps = nw + nb
            for e in range(n):
                a, b = find(wid[e]), find(nw + bid[e])
                if a != b:
                    parent[a] = b
                    comps -= 1
            if comps != 1:
                continue
            # faces: cycles of sigma o tau
            seen = [False] * n
            faces = 0
            for i in range(n):
                if not seen[i]:
                    faces += 1
                    j = i
                    while not seen[j]:
                        seen[j] = True
                        j = s[t[j]]
            key = encode_profile(n, faces, wid, bid)
            counts[key] = counts.get(key, 0) + 1
    return counts


def _adjacency(wid, bid, nw):
    adj = [set() for _ in range(nw)]
    for w, b in zip(wid, bid):
        adj[w].add(b)
    return [sorted(a) for a in adj]


def embedding_count(wid, bid, nw, nb, rows):
    """Number of (column, row) assignments with every edge landing in the diagram.

    ``rows`` lists the row lengths; a white vertex whose black neighbours
    sit in rows y_1..y_m has rows[max y] admissible columns.
    """
    if not rows:
        return 0
    adj = _adjacency(wid, bid, nw)
    total = 0
    for f2 in product(range(len(rows)), repeat=nb):
        acc = 1
        for nbrs in adj:
            acc *= rows[max(f2[b] for b in nbrs)]
            if not acc:
                break
        total += acc
    return total


def multirect_terms(wid, bid, nw, nb, ell):
    """Monomial counts of sum_h prod_b p_h(b) prod_w q_max(h(nbrs of w)).

    Keys are exponent tuples (p_1..p_ell, q_1..q_ell).
    """
    adj = _adjacency(wid, bid, nw)
    out = {}
    for h in product(range(ell), repeat=nb):
        exps = [0] * (2 * ell)
        for v in h:
            exps[v] += 1
        for nbrs in adj:
            exps[ell + max(h[b] for b in nbrs)] += 1
        key = tuple(exps)
        out[key] = out.get(key, 0) + 1
    return out
