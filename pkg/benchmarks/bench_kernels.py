"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernels.py [--max-n 6] [--repeat 3]
"""

import argparse
import time

from jackmaps import kernels
from jackmaps.maps import enumerate_labeled


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = ["python"]
    try:
        kernels.backend_module("cython")
        backends.append("cython")
    except ImportError:
        print("compiled extension not built; timing the Python kernels only")

    print(f"{'kernel':<22}{'n':>3}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for n in range(3, args.max_n + 1):
        row, results = [], []
        for b in backends:
            # the Python kernel at n=6 takes minutes; time it once
            rep = 1 if (b == "python" and n >= 6) else args.repeat
            t, out = best_of(rep, lambda: kernels.pair_profiles(n, backend=b))
            row.append(t)
            results.append(out)
        assert all(r == results[0] for r in results)
        _report("pair_profiles", n, row)

    maps = list(enumerate_labeled(4))
    for name, call in [
        ("embedding_count", lambda b, w, k, nw, nb: kernels.embedding_count(w, k, nw, nb, (5, 4, 3, 3, 1), b)),
        ("multirect_terms", lambda b, w, k, nw, nb: kernels.multirect_terms(w, k, nw, nb, 3, b)),
    ]:
        row = []
        for b in backends:
            def run(b=b):
                return [call(b, *m.profile()) for m in maps]

            t, _ = best_of(args.repeat, run)
            row.append(t)
        _report(name, 4, row)


def _report(name, n, row):
    speed = f"{row[0] / row[-1]:9.1f}x" if len(row) > 1 and row[-1] else ""
    print(f"{name:<22}{n:>3}" + "".join(f"{t:11.3f}s" for t in row) + speed)


if __name__ == "__main__":
    main()
