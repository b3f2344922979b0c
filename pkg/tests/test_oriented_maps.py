import json
from itertools import product

import pytest

from jackmaps.algebra import LaurentA, MultiPoly, parse_poly
from jackmaps.diagrams import YoungDiagram, concrete_to_multirect, diagrams_up_to, stanley_variables, substitute_diagram
from jackmaps.errors import InvalidMap, TooLarge
from jackmaps.maps import (
    OrientedBicolMap,
    ch_a1_one_face,
    ch_top_maps,
    count_embeddings,
    count_labeled,
    enumerate_labeled,
    enumerate_rooted,
    map_stats,
    weight_N,
    weight_N_multirect,
)

A = LaurentA({1: 1})
Y = YoungDiagram
EDGE = OrientedBicolMap.from_one_indexed([1], [1])
CHERRY = OrientedBicolMap.from_one_indexed([1, 2], [2, 1])
TORUS = OrientedBicolMap.from_one_indexed([2, 3, 1], [2, 3, 1])


def literal_multirect(m, ell):
    """Sum over column and row groups with h(b) <= g(w) on every edge."""
    vs = stanley_variables(ell)
    p = [MultiPoly.var(f"p{i}", vs) for i in range(1, ell + 1)]
    q = [MultiPoly.var(f"q{i}", vs) for i in range(1, ell + 1)] + [MultiPoly.zero(vs)]
    wid, bid, nw, nb = m.profile()
    total = MultiPoly.zero(vs)
    for g in product(range(ell), repeat=nw):
        for h in product(range(ell), repeat=nb):
            if any(h[b] > g[w] for w, b in zip(wid, bid)):
                continue
            term = MultiPoly.const(1, vs)
            for w in range(nw):
                term = term * (q[g[w]] - q[g[w] + 1])
            for b in range(nb):
                term = term * p[h[b]]
            total = total + term
    return total


def test_labeled_counts():
    assert [count_labeled(n) for n in (1, 2, 3)] == [1, 3, 26]
    assert len(list(enumerate_labeled(3))) == 26
    assert count_labeled(5) == 11064


def test_enumeration_is_sorted_and_guarded():
    maps = list(enumerate_labeled(3))
    assert maps == sorted(maps)
    with pytest.raises(TooLarge):
        list(enumerate_labeled(8))


def test_rooted_counts():
    assert [len(enumerate_rooted(n)) for n in (1, 2, 3, 4)] == [1, 3, 13, 71]


def test_transitivity_is_enforced():
    with pytest.raises(InvalidMap):
        OrientedBicolMap.from_one_indexed([1, 2], [1, 2])
    with pytest.raises(InvalidMap):
        OrientedBicolMap.from_one_indexed([1, 1], [1, 2])


def test_map_stats_examples():
    assert tuple(map_stats(TORUS).__dict__.values()) == (1, 1, 1, 1)
    s = map_stats(CHERRY)
    assert (s.whites, s.blacks, s.faces, s.genus) == (2, 1, 1, 0)
    s = map_stats(EDGE)
    assert (s.whites, s.blacks, s.faces, s.genus) == (1, 1, 1, 0)


def test_serialization():
    data = TORUS.to_dict()
    assert data == {"n": 3, "sigma": [2, 3, 1], "tau": [2, 3, 1]}
    assert OrientedBicolMap.from_json(json.dumps(data)) == TORUS


def test_embedding_examples():
    lam = Y((2, 1))
    assert [count_embeddings(m, lam) for m in (EDGE, CHERRY, TORUS)] == [3, 5, 3]
    assert [weight_N(m, lam) for m in (EDGE, CHERRY, TORUS)] == [LaurentA.constant(-3), -5 * A, LaurentA.constant(-3)]


def test_multirect_examples():
    assert weight_N_multirect(EDGE, 2) == parse_poly("p1*q1 + p2*q2", stanley_variables(2))
    assert weight_N_multirect(CHERRY, 1) == parse_poly("p1*q1^2", stanley_variables(1))
    assert weight_N_multirect(TORUS, 2) == parse_poly("p1*q1 + p2*q2", stanley_variables(2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_telescoped_weight_matches_literal_sum(n):
    for m in enumerate_labeled(n):
        for ell in (1, 2, 3):
            assert weight_N_multirect(m, ell) == literal_multirect(m, ell)


def test_multirect_agrees_with_concrete_weights():
    lams = [lam for lam in diagrams_up_to(6) if lam.parts]
    for n in (1, 2, 3):
        for m in enumerate_labeled(n):
            poly = weight_N_multirect(m, 3)
            for lam in lams:
                if len(set(lam.parts)) <= 3:
                    assert substitute_diagram(poly, lam) == weight_N(m, lam)


def test_ch_top_small():
    assert ch_top_maps(1, 1) == parse_poly("-p1*q1")
    assert ch_top_maps(2, 1) == parse_poly("-p1^2*q1 - p1*q1^2 - p1*q1*g")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ch_top_is_homogeneous(n):
    top = ch_top_maps(n, 2)
    assert top.homogeneous_part(n + 1) == top


def test_ch_a1_examples():
    assert ch_a1_one_face(3, Y((3,))) == 6
    assert ch_a1_one_face(3, Y((1,))) == 0
    assert ch_a1_one_face(3, Y((2, 1))) == -3


def test_ch_a1_vanishes_below_n():
    for n in range(1, 6):
        for lam in diagrams_up_to(n - 1):
            assert ch_a1_one_face(n, lam) == 0


def test_euler_parity():
    for n in range(1, 5):
        for m in enumerate_labeled(n):
            s = map_stats(m)
            assert (s.whites + s.blacks + s.faces - n) % 2 == 0
            assert s.whites + s.blacks + s.faces <= n + 2
            assert s.whites + s.blacks - n + s.faces == 2 - 2 * s.genus


def test_substitution_shape():
    assert set(concrete_to_multirect(Y((3, 3, 1)))) == {"p1", "p2", "q1", "q2"}
