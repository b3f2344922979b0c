# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

cdef int MAXN = 8


cdef void _fill_perms(int n, int* out, long count):
    # lexicographic permutations via next_permutation
    cdef int a[8]
    cdef int i, j, k, tmp
    cdef long r
    for i in range(n):
        a[i] = i
    for r in range(count):
        for i in range(n):
            out[r * n + i] = a[i]
        i = n - 2
        while i >= 0 and a[i] > a[i + 1]:
            i -= 1
        if i < 0:
            break
        j = n - 1
        while a[j] < a[i]:
            j -= 1
        tmp = a[i]; a[i] = a[j]; a[j] = tmp
        k = i + 1
        j = n - 1
        while k < j:
            tmp = a[k]; a[k] = a[j]; a[j] = tmp
            k += 1
            j -= 1


cdef int _labels(int n, int* p, int* lab):
    cdef int i, j, nxt = 0
    for i in range(n):
        lab[i] = -1
    for i in range(n):
        if lab[i] < 0:
            j = i
            while lab[j] < 0:
                lab[j] = nxt
                j = p[j]
            nxt += 1
    return nxt


cdef inline int _find(int* parent, int x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def pair_profiles(int n, long start=0, stop=None):
    if n < 1 or n > 7:
        raise ValueError("n out of range for the compiled kernel")
    cdef long count = 1
    cdef int i
    for i in range(2, n + 1):
        count *= i
    cdef long stop_ = count if stop is None else stop
    cdef int* perms = <int*> malloc(count * n * sizeof(int))
    cdef int* wlab = <int*> malloc(count * n * sizeof(int))
    cdef int* nlab = <int*> malloc(count * sizeof(int))
    cdef int parent[16]
    cdef int seen[8]
    cdef long si, ti
    cdef int nw, nb, comps, e, a, b, faces, j
    cdef int* s
    cdef int* t
    cdef int* wid
    cdef int* bid
    cdef long long key
    counts = {}
    try:
        _fill_perms(n, perms, count)
        for si in range(count):
            nlab[si] = _labels(n, perms + si * n, wlab + si * n)
        for si in range(start, stop_):
            s = perms + si * n
            wid = wlab + si * n
            nw = nlab[si]
            for ti in range(count):
                t = perms + ti * n
                bid = wlab + ti * n
                nb = nlab[ti]
                for i in range(nw + nb):
                    parent[i] = i
                comps = nw + nb
                for e in range(n):
                    a = _find(parent, wid[e])
                    b = _find(parent, nw + bid[e])
                    if a != b:
                        parent[a] = b
                        comps -= 1
                if comps != 1:
                    continue
                for i in range(n):
                    seen[i] = 0
                faces = 0
                for i in range(n):
                    if not seen[i]:
                        faces += 1
                        j = i
                        while not seen[j]:
                            seen[j] = 1
                            j = s[t[j]]
                key = faces
                for e in range(n):
                    key = (key << 3) | wid[e]
                for e in range(n):
                    key = (key << 3) | bid[e]
                pykey = key
                counts[pykey] = counts.get(pykey, 0) + 1
    finally:
        free(perms)
        free(wlab)
        free(nlab)
    return counts


cdef void _adjacency(list wid, list bid, int nw, int* adj, int* deg):
    # adj[w * 8 + k] = k-th distinct black neighbour of white w
    cdef int e, w, b, k, found
    for w in range(nw):
        deg[w] = 0
    for e in range(len(wid)):
        w = wid[e]
        b = bid[e]
        found = 0
        for k in range(deg[w]):
            if adj[w * 8 + k] == b:
                found = 1
                break
        if not found:
            adj[w * 8 + deg[w]] = b
            deg[w] += 1


def embedding_count(wid, bid, int nw, int nb, rows):
    cdef int nrows = len(rows)
    if nrows == 0:
        return 0
    cdef int adj[64]
    cdef int deg[8]
    cdef long long rowlen[64]
    cdef int f2[8]
    cdef int w, k, b, m, i
    cdef long long acc
    total = 0
    if nrows > 64:
        raise ValueError("too many rows")
    for i in range(nrows):
        rowlen[i] = rows[i]
    _adjacency(list(wid), list(bid), nw, adj, deg)
    for i in range(nb):
        f2[i] = 0
    cdef long long subtotal = 0
    while True:
        acc = 1
        for w in range(nw):
            m = 0
            for k in range(deg[w]):
                b = f2[adj[w * 8 + k]]
                if b > m:
                    m = b
            acc *= rowlen[m]
            if acc == 0:
                break
        subtotal += acc
        if subtotal > (1LL << 60):
            total += subtotal
            subtotal = 0
        i = 0
        while i < nb:
            f2[i] += 1
            if f2[i] < nrows:
                break
            f2[i] = 0
            i += 1
        if i == nb:
            break
    return total + subtotal


def multirect_terms(wid, bid, int nw, int nb, int ell):
    cdef int adj[64]
    cdef int deg[8]
    cdef int h[8]
    cdef int exps[32]
    cdef int w, k, m, i, v
    if ell > 16:
        raise ValueError("too many rectangles")
    _adjacency(list(wid), list(bid), nw, adj, deg)
    for i in range(nb):
        h[i] = 0
    out = {}
    while True:
        for i in range(2 * ell):
            exps[i] = 0
        for i in range(nb):
            exps[h[i]] += 1
        for w in range(nw):
            m = 0
            for k in range(deg[w]):
                v = h[adj[w * 8 + k]]
                if v > m:
                    m = v
            exps[ell + m] += 1
        key = tuple([exps[i] for i in range(2 * ell)])
        out[key] = out.get(key, 0) + 1
        i = 0
        while i < nb:
            h[i] += 1
            if h[i] < ell:
                break
            h[i] = 0
            i += 1
        if i == nb:
            break
    return out
