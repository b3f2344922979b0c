"""Backend selection for the enumeration kernels.

The compiled extension is used when it imports; setting
``JACKMAPS_PURE_PYTHON=1`` forces the pure-Python module. Both expose the
same three functions and return identical results.
"""

import math
import os
from concurrent.futures import ProcessPoolExecutor

from . import _kernels_py

_impl = _kernels_py
if os.environ.get("JACKMAPS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]

        _impl = _compiled
    except ImportError:  # extension not built
        pass

BACKEND = _impl.BACKEND


def backend_module(name=None):
    """Return the kernel module for ``name`` ("python", "cython") or the active one."""
    if name is None:
        return _impl
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _kernels  # type: ignore[attr-defined]

        return _kernels
    raise ValueError(f"unknown kernel backend {name!r}")


def decode_profile(n, key):
    """Unpack a profile key into (faces, white ids, black ids)."""
    digits = []
    for _ in range(2 * n):
        digits.append(key & 7)
        key >>= 3
    digits.reverse()
    return key, tuple(digits[:n]), tuple(digits[n:])


def _chunk(args):
    n, start, stop, name = args
    return backend_module(name).pair_profiles(n, start, stop)


def pair_profiles(n, jobs=1, backend=None):
    """Profiles of all transitive pairs in S_n x S_n as {(F, wid, bid): count}.

    With jobs > 1 the sigma range is split across worker processes; the
    merged result does not depend on the split.
    """
    impl = backend_module(backend)
    total = math.factorial(n)
    if jobs <= 1 or total < 2 * jobs:
        raw = impl.pair_profiles(n, 0, total)
    else:
        bounds = [total * i // jobs for i in range(jobs + 1)]
        tasks = [(n, bounds[i], bounds[i + 1], impl.BACKEND) for i in range(jobs)]
        raw = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_chunk, tasks):
                for k, v in part.items():
                    raw[k] = raw.get(k, 0) + v
    return {decode_profile(n, k): v for k, v in sorted(raw.items())}


def embedding_count(wid, bid, nw, nb, rows, backend=None):
    return backend_module(backend).embedding_count(list(wid), list(bid), nw, nb, list(rows))


def multirect_terms(wid, bid, nw, nb, ell, backend=None):
    return backend_module(backend).multirect_terms(list(wid), list(bid), nw, nb, ell)
