"""Acceptance criteria 1 to 10, one test each.

Every test records a PASS or FAIL line; the lines are printed together at
the end of the pytest run (see conftest.py) and also when this file is run
as a script.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import permutations

from jackmaps.algebra import MultiPoly, parse_poly
from jackmaps.characters import (
    ch3_explicit_family,
    family_function,
    map_top_function,
    oracle_function,
    solve_character_family,
    stanley_polynomial,
    verify_vanishing_system,
)
from jackmaps.diagrams import ContentPolynomialFamily, YoungDiagram, diagrams_up_to, evaluate_family, family_variables
from jackmaps.jack import jack_character, normalized_character, structure_constants_delta
from jackmaps.maps import ch_a1_one_face, ch_top_maps
from jackmaps.maps.bijection import build_bijection
from jackmaps.maps.ribbon import count_S1_S2

RESULTS = []

# the printed right-hand side for -Ch_3 on two rectangles
BRACED = (
    "p1^3*q1 + 3*p1^2*q1^2 + p1*q1^3 + 3*p1^2*p2*q2 + 3*p1*p2^2*q2 + p2^3*q2 + 3*p1*p2*q1*q2"
    " + 3*p1*p2*q2^2 + 3*p2^2*q2^2 + p2*q2^3 + 3*p1^2*q1*g + 3*p1*q1^2*g + 6*p1*p2*q2*g"
    " + 3*p2^2*q2*g + 3*p2*q2^2*g + 2*p1*q1*g^2 + 2*p2*q2*g^2"
)
TAIL = "p1*q1 + p2*q2"

EXPANSION = {
    (3,): "6*d^2 + 3",
    (2, 1): "9*d",
    (4,): "18*d",
    (1, 1, 1): "3",
    (3, 1): "9",
    (2, 2): "9",
    (5,): "9",
    (3, 3): "1",
}


@contextmanager
def criterion(number, title):
    start = time.perf_counter()
    notes = []
    try:
        yield notes
    except BaseException as exc:
        RESULTS.append(f"criterion {number:2d} FAIL  {title}: {type(exc).__name__} {exc}"[:300])
        raise
    elapsed = time.perf_counter() - start
    extra = f" ({'; '.join(notes)})" if notes else ""
    RESULTS.append(f"criterion {number:2d} PASS  {title} [{elapsed:.1f} s]{extra}")


def test_criterion_01_stanley_n3():
    with criterion(1, "Stanley polynomial of Ch_3 on two rectangles") as notes:
        start = time.perf_counter()
        got = stanley_polynomial(solve_character_family(3), 2)
        printed = parse_poly(BRACED + " + " + TAIL)
        assert got == -printed
        assert str(got) == str(-printed)
        assert time.perf_counter() - start < 10
        notes.append(f"{len(printed.terms)} terms")


def test_criterion_02_top_from_maps():
    with criterion(2, "top-degree part of Ch_3 from the oriented-map sum") as notes:
        start = time.perf_counter()
        top = ch_top_maps(3, 2)
        # the braced block sits under -Ch_3, so Ch_3^top is its negative
        assert top == -parse_poly(BRACED)
        assert time.perf_counter() - start < 5
        notes.append("equals minus the braced terms")


def test_criterion_03_solver_n3():
    with criterion(3, "solver recovers the explicit Ch_3 family"):
        fam = solve_character_family(3).family
        v1 = family_variables(1)
        c1, g = MultiPoly.var("c1", v1), MultiPoly.var("g", v1)
        assert fam.polys[0] == 0
        assert fam.polys[1] == (c1 + g) * (c1 + g * 2) * 3 + Fraction(3, 2)
        assert fam.polys[2] == Fraction(-3, 2)
        assert len(fam.polys) == 3 and fam == ch3_explicit_family()


def test_criterion_04_oracle_agreement():
    with criterion(4, "oracle agrees with the Ch_3 family; Ch_n vanishes on small diagrams") as notes:
        fam = ch3_explicit_family()
        lams = diagrams_up_to(7)
        for lam in lams:
            assert jack_character((3,), lam.parts) == evaluate_family(fam, lam)
        for n in range(1, 6):
            for lam in diagrams_up_to(n - 1):
                assert jack_character((n,), lam.parts) == 0
        notes.append(f"{len(lams)} diagrams with at most 7 boxes")


def test_criterion_05_one_face_at_a1():
    with criterion(5, "one-face map sum at A = 1 equals the symmetric-group character"):
        assert ch_a1_one_face(3, YoungDiagram((3,))) == 6
        assert ch_a1_one_face(3, YoungDiagram((2, 1))) == -3
        assert ch_a1_one_face(3, YoungDiagram((1,))) == 0
        for n in range(1, 6):
            for lam in diagrams_up_to(7):
                assert ch_a1_one_face(n, lam) == normalized_character((n,), lam.parts)


def test_criterion_06_structure_constants():
    with criterion(6, "Ch_3 * Ch_3 in the Ch basis with coefficients in d"):
        out = structure_constants_delta((3,), (3,))
        assert {rho: str(c) for rho, c in out.items()} == EXPANSION
        for c in out.values():
            assert isinstance(c, MultiPoly)
            assert all(v >= 0 and Fraction(v).denominator == 1 for v in c.terms.values())


def test_criterion_07_route_agreement():
    with criterion(7, "solver top-degree part equals the map sum for n <= 5, l <= 2"):
        start = time.perf_counter()
        for n in range(1, 6):
            sol = solve_character_family(n)
            for ell in (1, 2):
                assert stanley_polynomial(sol, ell).homogeneous_part(n + 1) == ch_top_maps(n, ell)
        assert time.perf_counter() - start < 60


def _random_low_family(rng, degree):
    polys = []
    for k in range(degree // 2 + 1):
        vs = family_variables(k)
        terms = {}
        for _ in range(3):
            budget = degree - 2 * k
            exps = []
            for _ in vs:
                exps.append(rng.randint(0, budget))
                budget -= exps[-1]
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            for perm in set(permutations(exps[:k])):
                key = tuple(perm) + (exps[k],)
                terms[key] = terms.get(key, 0) + c
        polys.append(MultiPoly(vs, terms))
    return ContentPolynomialFamily(degree, polys).check()


def test_criterion_08_vanishing_system():
    with criterion(8, "vanishing system for the oracle and the map sum, n <= 4") as notes:
        rng = random.Random(20261016)
        checks = 0
        for n in range(1, 5):
            fam = solve_character_family(n).family
            for G in (oracle_function(n), map_top_function(n)):
                report = verify_vanishing_system(G, n, family=fam)
                assert report.passed, [r.to_dict() for r in report.failures()]
                checks += len(report.records)
            base = map_top_function(n)
            lhs = [r.lhs for r in verify_vanishing_system(base, n).records]
            for _ in range(3):
                pert = family_function(_random_low_family(rng, n))
                G = lambda lam, base=base, pert=pert: base(lam) + pert(lam)
                assert [r.lhs for r in verify_vanishing_system(G, n).records] == lhs
            if n >= 3:
                ids = {r.equation for r in verify_vanishing_system(oracle_function(n), n, family=fam).records}
                assert "top-two-rows-equal" in ids
        notes.append(f"{checks} identities")


def test_criterion_09_two_sided_count():
    with criterion(9, "two-sided count and the constructive matching") as notes:
        values = []
        for n, expected in [(1, 1), (2, 6), (3, 78)]:
            s1, s2 = count_S1_S2(n)
            assert s1 == s2 == expected
            values.append(s1)
        s1, s2 = count_S1_S2(4)
        assert s1 == s2
        values.append(s1)
        for n in (1, 2, 3):
            assert len(build_bijection(n)) == values[n - 1]
        notes.append("counts " + ", ".join(map(str, values)))


def test_criterion_10_property_suites():
    import test_properties as props

    with criterion(10, "randomized property suites") as notes:
        suites = [
            props.test_gamma_roundtrip,
            props.test_faulhaber_matches_literal_sum,
            props.test_euler_parity,
            props.test_multirect_matches_concrete,
            props.test_flip_invariance,
            props.test_jack_orthogonality,
        ]
        assert props.PROPS.max_examples >= 100
        for suite in suites:
            suite()
        notes.append(f"{len(suites)} suites")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except BaseException:
                failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
