"""Command-line interface: ``jackmaps <command> [options]``.

Every command produces a :class:`CommandResult`; stdout depends only on the
inputs (timings go to stderr with ``--timing``). Exit codes: 0 ok,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .errors import JackMapsError

SUITES = ("eq11", "eq15", "eq21", "def12", "lemma33", "theorem41", "theorem22", "structconst")

# Full Stanley polynomial of -Ch_3 on two rectangles; fixture for the eq15 suite.
CH3_NEG_STANLEY_2 = (
    "p1^3*q1 + 3*p1^2*q1^2 + p1*q1^3 + 3*p1^2*p2*q2 + 3*p1*p2^2*q2 + p2^3*q2"
    " + 3*p1*p2*q1*q2 + 3*p1*p2*q2^2 + 3*p2^2*q2^2 + p2*q2^3 + 3*p1^2*q1*g"
    " + 3*p1*q1^2*g + 6*p1*p2*q2*g + 3*p2^2*q2*g + 3*p2*q2^2*g + 2*p1*q1*g^2"
    " + 2*p2*q2*g^2 + p1*q1 + p2*q2"
)

# Ch_3 * Ch_3 in the Ch basis, coefficients as polynomials in d = -gamma.
CH3_SQUARED = {
    (3,): "6*d^2 + 3",
    (2, 1): "9*d",
    (4,): "18*d",
    (1, 1, 1): "3",
    (3, 1): "9",
    (2, 2): "9",
    (5,): "9",
    (3, 3): "1",
}


@dataclass
class CommandResult:
    status: str  # "ok" or "fail"
    payload: dict
    text: str = ""
    rows: list = field(default_factory=list)
    timing_ms: float = 0.0

    @property
    def exit_code(self) -> int:
        return 0 if self.status == "ok" else 1

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps({"status": self.status, **self.payload}, sort_keys=True, indent=2) + "\n"
        if fmt == "csv":
            if not self.rows:
                return ""
            buf = io.StringIO()
            cols = list(self.rows[0])
            w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
            w.writeheader()
            for r in self.rows:
                w.writerow(r)
            return buf.getvalue()
        return self.text if self.text.endswith("\n") or not self.text else self.text + "\n"


class UsageError(Exception):
    pass


def _diagram(text):
    from .diagrams import YoungDiagram

    try:
        return YoungDiagram.parse(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def _parts(text):
    return _diagram(text).parts


def _perm(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad permutation {text!r}") from None


def _poly_result(p, extra=None):
    s = str(p)
    payload = {"result": s, **(extra or {})}
    rows = [{"coefficient": str(c), "monomial": _monomial(p.variables, e)} for e, c in p.items()]
    return CommandResult("ok", payload, s, rows)


def _monomial(variables, exps):
    parts = []
    for v, e in zip(variables, exps):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts) or "1"


# -- command handlers -------------------------------------------------------------


def cmd_ch_top(args):
    from .characters import solve_character_family, top_degree
    from .maps import ch_top_maps

    if args.route == "maps":
        p = ch_top_maps(args.n, args.rects, jobs=args.jobs)
    else:
        p = top_degree(solve_character_family(args.n), args.rects).stanley_top
    return _poly_result(p, {"n": args.n, "rects": args.rects, "route": args.route})


def cmd_stanley(args):
    from .characters import delta_n, solve_character_family, stanley_polynomial, top_degree

    sol = solve_character_family(args.n)
    if args.part == "top":
        p = top_degree(sol, args.rects).stanley_top
    elif args.part == "delta":
        p = delta_n(sol, args.rects)
    else:
        p = stanley_polynomial(sol, args.rects)
    res = _poly_result(p, {"n": args.n, "rects": args.rects, "part": args.part})
    if args.show_family:
        fam = sol.family.to_dict()
        res.payload["family"] = fam
        res.text = "\n".join(f"p{k} = {v}" for k, v in fam.items()) + "\n" + res.text
    return res


def cmd_ch_eval(args):
    from .characters import family_function, map_top_function, oracle_function, solve_character_family

    lam = _diagram(args.lam)
    if args.route == "oracle":
        val = oracle_function(args.n)(lam)
    elif args.route == "maps-top":
        val = map_top_function(args.n)(lam)
    else:
        val = family_function(solve_character_family(args.n).family)(lam)
    out = val.evaluate(1) if args.a1 else val
    s = str(out) if not args.a1 else _fraction(out)
    return CommandResult("ok", {"result": s, "n": args.n, "lambda": str(lam), "route": args.route}, s,
                         [{"n": args.n, "lambda": str(lam), "value": s}])


def _fraction(x):
    from .algebra.laurent import format_rational

    return format_rational(x)


def cmd_oracle(args):
    from . import jack

    if args.what == "ch":
        if args.mu is None or args.lam is None:
            raise UsageError("oracle ch needs --mu and --lambda")
        val = jack.jack_character(_parts(args.mu), _parts(args.lam))
        s = str(val)
        return CommandResult("ok", {"result": s, "mu": args.mu, "lambda": args.lam}, s,
                             [{"mu": args.mu, "lambda": args.lam, "value": s}])
    if args.what == "jack":
        if args.lam is None:
            raise UsageError("oracle jack needs --lambda")
        J = jack.jack_J(_parts(args.lam))
        rows = [{"pi": ",".join(map(str, pi)), "coefficient": str(c)} for pi, c in sorted(J.coeffs.items(), reverse=True)]
        text = "\n".join(f"p[{r['pi']}]: {r['coefficient']}" for r in rows)
        return CommandResult("ok", {"lambda": args.lam, "powersum": {r["pi"]: r["coefficient"] for r in rows}}, text, rows)
    if args.pi is None or args.lam is None:
        raise UsageError("oracle theta needs --pi and --lambda")
    val = jack.theta(_parts(args.pi), _parts(args.lam))
    s = str(val)
    return CommandResult("ok", {"result": s, "pi": args.pi, "lambda": args.lam}, s,
                         [{"pi": args.pi, "lambda": args.lam, "value": s}])


def cmd_maps(args):
    from .maps import (
        OrientedBicolMap,
        count_embeddings,
        enumerate_labeled,
        enumerate_rooted,
        map_stats,
        weight_N,
    )

    if args.what == "enumerate":
        if args.n is None:
            raise UsageError("maps enumerate needs --n")
        ms = enumerate_rooted(args.n) if args.rooted else enumerate_labeled(args.n)
        rows = []
        for i, m in enumerate(ms):
            if args.limit is not None and i >= args.limit:
                break
            st = map_stats(m)
            rows.append({"sigma": " ".join(str(x + 1) for x in m.sigma), "tau": " ".join(str(x + 1) for x in m.tau),
                         "whites": st.whites, "blacks": st.blacks, "faces": st.faces, "genus": st.genus})
        maps_json = [{"n": args.n, "sigma": [int(x) for x in r["sigma"].split()],
                      "tau": [int(x) for x in r["tau"].split()]} for r in rows]
        text = "\n".join(json.dumps(m, separators=(",", ":")) for m in maps_json)
        return CommandResult("ok", {"n": args.n, "rooted": args.rooted, "count": len(rows), "maps": maps_json}, text, rows)
    if args.map:
        m = OrientedBicolMap.from_json(args.map)
    elif args.sigma and args.tau:
        m = OrientedBicolMap.from_one_indexed(_perm(args.sigma), _perm(args.tau))
    else:
        raise UsageError("maps stats needs --map or --sigma and --tau")
    st = map_stats(m)
    payload = {"map": m.to_dict(), "whites": st.whites, "blacks": st.blacks, "faces": st.faces, "genus": st.genus}
    if args.lam:
        lam = _diagram(args.lam)
        payload["embeddings"] = count_embeddings(m, lam)
        payload["weight"] = str(weight_N(m, lam))
    text = "\n".join(f"{k}: {v}" for k, v in payload.items() if k != "map")
    row = {k: v for k, v in payload.items() if k != "map"}
    return CommandResult("ok", payload, text, [row])


def cmd_bijection(args):
    from .maps.bijection import build_bijection
    from .maps.ribbon import count_S1_S2

    if args.what == "count":
        rows = []
        for n in range(1, args.n + 1):
            s1, s2 = count_S1_S2(n)
            rows.append({"n": n, "S1": s1, "S2": s2, "equal": s1 == s2})
        ok = all(r["equal"] for r in rows)
        text = "\n".join(f"n={r['n']} S1={r['S1']} S2={r['S2']} {'PASS' if r['equal'] else 'FAIL'}" for r in rows)
        return CommandResult("ok" if ok else "fail", {"counts": rows}, text, rows)
    entries = build_bijection(args.n)
    rows = []
    for e in entries:
        rows.append({
            "root": e.root,
            "source": e.source.to_json(),
            "target": e.target.to_json(),
            "choices": " ".join(f"{s.edge}:{s.left_choices}/{s.right_choices}" for s in e.steps),
        })
    text = "\n".join(f"{r['root']} {r['source']} -> {r['target']}" for r in rows)
    text += f"\nentries: {len(rows)}"
    return CommandResult("ok", {"n": args.n, "entries": rows, "count": len(rows)}, text, rows)


def cmd_structure_constants(args):
    from . import jack

    mu, nu = _parts(args.mu), _parts(args.nu)
    if args.gamma:
        raw = jack.structure_constants(mu, nu)
        coeffs = {rho: str(v) for rho, v in raw.items()}
    else:
        coeffs = {rho: str(v) for rho, v in jack.structure_constants_delta(mu, nu).items()}
    keys = sorted(coeffs, key=lambda r: (sum(r), tuple(-x for x in r)))
    rows = [{"rho": ",".join(map(str, r)), "coefficient": coeffs[r]} for r in keys]
    text = "\n".join(f"Ch[{r['rho']}]: {r['coefficient']}" for r in rows)
    return CommandResult("ok", {"mu": args.mu, "nu": args.nu, "coefficients": {r["rho"]: r["coefficient"] for r in rows}},
                         text, rows)


# -- verification suites ------------------------------------------------------------


def _check(name, ok, detail=""):
    return {"check": name, "pass": bool(ok), "detail": detail}


def suite_eq11(max_n):
    from .characters import ch3_explicit_family, solve_character_family
    from .diagrams import YoungDiagram, evaluate_family

    fam = ch3_explicit_family()
    out = [_check("solver(3) equals the explicit Ch_3 family", solve_character_family(3).family == fam)]
    for parts, want in [((1,), "0"), ((2,), "0"), ((2, 1), "-3")]:
        got = str(evaluate_family(fam, YoungDiagram(parts)))
        out.append(_check(f"Ch_3 family on ({','.join(map(str, parts))})", got == want, got))
    return out


def suite_eq15(max_n):
    from .algebra import parse_poly
    from .characters import solve_character_family, stanley_polynomial, top_degree
    from .maps import ch_top_maps

    expected = -parse_poly(CH3_NEG_STANLEY_2, ("p1", "p2", "q1", "q2", "g"))
    sol = solve_character_family(3)
    full = stanley_polynomial(sol, 2)
    return [
        _check("Stanley polynomial of Ch_3, two rectangles", full == expected, str(full)),
        _check("top-degree part via the map sum", ch_top_maps(3, 2) == expected.homogeneous_part(4)),
        _check("top-degree part via the solver", top_degree(sol, 2).stanley_top == expected.homogeneous_part(4)),
    ]


def suite_eq21(max_n):
    from .diagrams import diagrams_up_to
    from .jack import normalized_character
    from .maps import ch_a1_one_face

    out = []
    for n in range(1, min(max_n, 5) + 1):
        bad = [lam for lam in diagrams_up_to(7) if lam.parts
               and ch_a1_one_face(n, lam) != normalized_character((n,), lam.parts)]
        bad += [lam for lam in diagrams_up_to(7) if not lam.parts and ch_a1_one_face(n, lam) != 0]
        out.append(_check(f"one-face map sum at A=1 vs symmetric-group characters, n={n}", not bad,
                          ";".join(str(x) for x in bad)))
    return out


def suite_def12(max_n):
    from .characters import solve_character_family
    from .diagrams import diagrams_up_to, evaluate_family
    from .jack import jack_character

    out = []
    for n in range(1, min(max_n, 5) + 1):
        sol = solve_character_family(n)
        fam = sol.family
        vanish = all(not evaluate_family(fam, lam) for lam in diagrams_up_to(n - 1))
        lead = fam.polys[1].coefficient(c1=n - 1, g=0) if n > 0 else 0
        out.append(_check(f"unique solution for n={n}", sol.rank == sol.unknowns, f"rank {sol.rank}/{sol.unknowns}"))
        out.append(_check(f"vanishes below size n, n={n}", vanish))
        out.append(_check(f"normalization [c1^(n-1)] p1 = n, n={n}", lead == n, str(lead)))
        if n <= 4:
            bad = [lam for lam in diagrams_up_to(7) if evaluate_family(fam, lam) != jack_character((n,), lam.parts)]
            out.append(_check(f"agrees with the Jack oracle on |lambda|<=7, n={n}", not bad,
                              ";".join(str(x) for x in bad)))
    return out


def suite_lemma33(max_n):
    import random

    from .characters import (
        _basis,
        _basis_poly,
        family_function,
        family_top,
        map_top_function,
        oracle_function,
        solve_character_family,
        verify_vanishing_system,
    )
    from .algebra import MultiPoly
    from .diagrams import ContentPolynomialFamily, family_variables

    out = []
    rng = random.Random(12345)
    for n in range(1, min(max_n, 4) + 1):
        sol = solve_character_family(n)
        r1 = verify_vanishing_system(oracle_function(n), n, sol.family)
        r2 = verify_vanishing_system(map_top_function(n), n, family_top(sol))
        polys = [MultiPoly.zero(family_variables(k)) for k in range(n // 2 + 1)]
        for k, a, nu in _basis(n):
            polys[k] = polys[k] + _basis_poly(k, a, nu) * rng.randint(-5, 5)
        pert = ContentPolynomialFamily(n, polys)
        G, F = map_top_function(n), family_function(pert)
        r3 = verify_vanishing_system(lambda lam: G(lam) + F(lam), n)
        same = [a.lhs for a in r3.records] == [b.lhs for b in verify_vanishing_system(G, n).records]
        out.append(_check(f"oracle Ch_n, n={n}", r1.passed, _failures(r1)))
        out.append(_check(f"map-sum top degree, n={n}", r2.passed, _failures(r2)))
        out.append(_check(f"lower-degree perturbation leaves all left-hand sides unchanged, n={n}", same and r3.passed))
    return out


def _failures(report):
    return ";".join(f"{r.equation}[k={r.k},{r.diagram}]={r.lhs}" for r in report.failures())


def suite_theorem41(max_n):
    from .characters import solve_character_family, top_degree
    from .maps import ch_top_maps

    out = []
    for n in range(1, min(max_n, 5) + 1):
        for ell in (1, 2):
            ok = top_degree(solve_character_family(n), ell).stanley_top == ch_top_maps(n, ell)
            out.append(_check(f"solver top degree equals map sum, n={n}, rects={ell}", ok))
    return out


def suite_theorem22(max_n):
    from .errors import AmbiguousChoice
    from .maps.bijection import build_bijection
    from .maps.ribbon import count_S1_S2

    out = []
    for n in range(1, min(max_n, 4) + 1):
        s1, s2 = count_S1_S2(n)
        out.append(_check(f"S1=S2 at n={n}", s1 == s2, f"S1={s1} S2={s2}"))
    for n in range(1, min(max_n, 3) + 1):
        try:
            entries = build_bijection(n)
            out.append(_check(f"bijection n={n}", True, f"{len(entries)} pairs"))
        except AmbiguousChoice as exc:
            out.append(_check(f"bijection n={n}", False, str(exc)))
    return out


def suite_structconst(max_n):
    from fractions import Fraction

    from .algebra import parse_poly
    from .jack import structure_constants, structure_constants_delta

    got = structure_constants_delta((3,), (3,))
    want = {rho: parse_poly(s, ("d",)) for rho, s in CH3_SQUARED.items()}
    nonneg = all(c >= 0 and Fraction(c).denominator == 1 for p in got.values() for _, c in p.items())
    out = [
        _check("Ch_3 * Ch_3 expansion", got == want, "; ".join(f"{k}: {v}" for k, v in sorted(got.items()))),
        _check("coefficients are non-negative integer polynomials in d", nonneg),
    ]
    g11 = structure_constants((1,), (1,))
    out.append(_check("Ch_1 * Ch_1", {k: str(v) for k, v in g11.items()} == {(1,): "1", (1, 1): "1"}))
    g21 = {k: v.evaluate(1) for k, v in structure_constants((2,), (1,)).items()}
    out.append(_check("Ch_2 * Ch_1 at A=1", {k: v for k, v in g21.items() if v} == {(2,): 2, (2, 1): 1}))
    return out


SUITE_FUNCS = {
    "eq11": suite_eq11,
    "eq15": suite_eq15,
    "eq21": suite_eq21,
    "def12": suite_def12,
    "lemma33": suite_lemma33,
    "theorem41": suite_theorem41,
    "theorem22": suite_theorem22,
    "structconst": suite_structconst,
}

SUITE_DEFAULT_N = {"eq21": 5, "def12": 5, "lemma33": 4, "theorem41": 5, "theorem22": 3}


def cmd_verify(args):
    names = SUITES if args.suite == "all" else (args.suite,)
    rows = []
    for name in names:
        max_n = args.max_n if args.max_n is not None else SUITE_DEFAULT_N.get(name, 5)
        for rec in SUITE_FUNCS[name](max_n):
            rows.append({"suite": name, **rec})
    ok = all(r["pass"] for r in rows)
    lines = []
    for r in rows:
        line = f"{'PASS' if r['pass'] else 'FAIL'} {r['suite']}: {r['check']}"
        # short details always, long ones (polynomials, failure lists) only on failure
        if r["detail"] and (not r["pass"] or len(r["detail"]) <= 40):
            line += f" ({r['detail']})"
        lines.append(line)
    text = "\n".join(lines)
    text += f"\n{'ok' if ok else 'FAILED'}: {sum(r['pass'] for r in rows)}/{len(rows)} checks passed"
    return CommandResult("ok" if ok else "fail", {"suite": args.suite, "checks": rows}, text, rows)


# -- argument parsing -------------------------------------------------------------------


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand from resetting an option given before it
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--cache-dir", default=argparse.SUPPRESS, help="oracle cache (default: $JACKMAPS_CACHE_DIR)")
    common.add_argument("--jobs", type=_positive, default=argparse.SUPPRESS, help="worker processes (default: CPU count)")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS, help="print elapsed time to stderr")

    p = _Parser(prog="jackmaps", description="Jack characters, Stanley polynomials and bipartite maps.",
                parents=[common])
    p.add_argument("--version", action="version", version=f"jackmaps {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("ch-top", parents=[common], help="top-degree Stanley polynomial of Ch_n")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--rects", type=_positive, default=2)
    s.add_argument("--route", choices=("maps", "solver"), default="maps")
    s.set_defaults(func=cmd_ch_top)

    s = sub.add_parser("stanley", parents=[common], help="Stanley polynomial of Ch_n from the solved family")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--rects", type=_positive, default=2)
    s.add_argument("--part", choices=("full", "top", "delta"), default="full")
    s.add_argument("--show-family", action="store_true")
    s.set_defaults(func=cmd_stanley)

    s = sub.add_parser("ch-eval", parents=[common], help="Ch_n on a concrete diagram")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--route", choices=("family", "oracle", "maps-top"), default="family")
    s.add_argument("--a1", action="store_true", help="specialize A = 1")
    s.set_defaults(func=cmd_ch_eval)

    s = sub.add_parser("oracle", parents=[common], help="Jack polynomial oracle")
    s.add_argument("what", choices=("ch", "jack", "theta"))
    s.add_argument("--mu")
    s.add_argument("--pi")
    s.add_argument("--lambda", dest="lam")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("maps", parents=[common], help="oriented maps as permutation pairs")
    s.add_argument("what", choices=("enumerate", "stats"))
    s.add_argument("--n", type=_positive)
    s.add_argument("--rooted", action="store_true", help="one representative per rooted map")
    s.add_argument("--limit", type=int)
    s.add_argument("--map", help='JSON record like {"n":3,"sigma":[2,3,1],"tau":[2,3,1]}')
    s.add_argument("--sigma")
    s.add_argument("--tau")
    s.add_argument("--lambda", dest="lam")
    s.set_defaults(func=cmd_maps)

    s = sub.add_parser("bijection", parents=[common], help="two-sided count and constructive matching")
    s.add_argument("what", choices=("count", "build"))
    s.add_argument("--n", type=_positive, required=True)
    s.set_defaults(func=cmd_bijection)

    s = sub.add_parser("structure-constants", parents=[common], help="expand Ch_mu * Ch_nu in the Ch basis")
    s.add_argument("--mu", required=True)
    s.add_argument("--nu", required=True)
    s.add_argument("--gamma", action="store_true", help="print Laurent coefficients in A instead of d = -gamma")
    s.set_defaults(func=cmd_structure_constants)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", choices=SUITES + ("all",), required=True)
    s.add_argument("--max-n", type=_positive)
    s.set_defaults(func=cmd_verify)
    return p


def run_command(argv) -> tuple:
    """Parse and execute; returns (CommandResult or None, exit code, format)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"jackmaps: error: {exc}", file=sys.stderr)
        return None, 2, "text"
    fmt = getattr(args, "format", "text")
    cache = getattr(args, "cache_dir", None) or os.environ.get("JACKMAPS_CACHE_DIR")
    if cache:
        from .jack import set_cache_dir

        set_cache_dir(cache)
    args.jobs = getattr(args, "jobs", None) or os.cpu_count() or 1
    start = time.perf_counter()
    try:
        res = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"jackmaps: error: {exc}", file=sys.stderr)
        return None, 2, fmt
    except (JackMapsError, ValueError, KeyError) as exc:
        print(f"jackmaps: {type(exc).__name__}: {exc}", file=sys.stderr)
        return None, 2, fmt
    res.timing_ms = (time.perf_counter() - start) * 1000
    if getattr(args, "timing", False):
        print(f"elapsed: {res.timing_ms:.1f} ms", file=sys.stderr)
    return res, res.exit_code, fmt


def main(argv=None) -> int:
    res, code, fmt = run_command(sys.argv[1:] if argv is None else argv)
    if res is not None:
        sys.stdout.write(res.render(fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
