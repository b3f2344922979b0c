import os
import subprocess
import sys

import pytest

from jackmaps import kernels
from jackmaps.maps import enumerate_labeled

BACKENDS = ["python"]
try:
    kernels.backend_module("cython")
    BACKENDS.append("cython")
except ImportError:
    pass

needs_compiled = pytest.mark.skipif("cython" not in BACKENDS, reason="extension not built")


@pytest.mark.parametrize("backend", BACKENDS)
def test_labeled_totals(backend):
    for n, total in [(1, 1), (2, 3), (3, 26), (4, 426)]:
        assert sum(kernels.pair_profiles(n, backend=backend).values()) == total


@needs_compiled
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_backends_agree_on_profiles(n):
    assert kernels.pair_profiles(n, backend="python") == kernels.pair_profiles(n, backend="cython")


@needs_compiled
def test_backends_agree_on_weights():
    for m in enumerate_labeled(3):
        wid, bid, nw, nb = m.profile()
        for rows in [(1,), (2, 1), (3, 3, 1), (4, 2, 2, 1)]:
            assert kernels.embedding_count(wid, bid, nw, nb, rows, "python") == kernels.embedding_count(
                wid, bid, nw, nb, rows, "cython"
            )
        for ell in (1, 2, 3):
            assert kernels.multirect_terms(wid, bid, nw, nb, ell, "python") == kernels.multirect_terms(
                wid, bid, nw, nb, ell, "cython"
            )


def test_jobs_do_not_change_results():
    assert kernels.pair_profiles(5, jobs=3) == kernels.pair_profiles(5, jobs=1)


def test_profile_roundtrip():
    from jackmaps._kernels_py import encode_profile

    key = encode_profile(3, 2, (0, 1, 0), (0, 0, 1))
    assert kernels.decode_profile(3, key) == (2, (0, 1, 0), (0, 0, 1))


def test_pure_python_switch():
    env = dict(os.environ, JACKMAPS_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from jackmaps import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.backend_module("fortran")
