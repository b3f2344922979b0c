from itertools import permutations

import pytest

from jackmaps.errors import InvalidMap, TooLarge, UnknownEdge
from jackmaps.maps import OrientedBicolMap, enumerate_labeled
from jackmaps.maps.ribbon import (
    OrderedMap,
    RibbonGraph,
    canonical_key,
    canonical_key_exhaustive,
    components,
    count_S1_S2,
    enumerate_nonoriented_labeled,
    flip_equivalent,
    from_key,
    is_orientable,
    progressive_condition,
    trace_faces,
    twist_edge,
)


def edge():
    return RibbonGraph([("w", [1]), ("b", [2])], {1: (1, 2)})


def double(t1=False, t2=False):
    return RibbonGraph([("w", [1, 3]), ("b", [2, 4])], {1: (1, 2), 2: (3, 4)}, {1: t1, 2: t2})


def path():
    return RibbonGraph([("w", [1]), ("b", [2, 4]), ("w", [3])], {1: (1, 2), 2: (3, 4)})


def test_trace_faces_examples():
    assert trace_faces(edge()) == 1
    assert trace_faces(double()) == 2
    assert trace_faces(double(False, True)) == 1
    assert trace_faces(double(True, True)) == 2


def test_isolated_vertices_count_as_faces():
    sub = path().delete_edges([1])
    assert components(sub) == 2 and trace_faces(sub) == 2


def test_faces_match_oriented_pairs():
    for n in (1, 2, 3, 4):
        for m in enumerate_labeled(n):
            assert trace_faces(RibbonGraph.from_pair(m)) == len(m.faces())
            assert RibbonGraph.from_pair(m).to_pair() == m


def test_validation():
    with pytest.raises(InvalidMap):
        RibbonGraph([("w", [1]), ("w", [2])], {1: (1, 2)})
    with pytest.raises(InvalidMap):
        RibbonGraph([("w", [1, 1]), ("b", [2])], {1: (1, 2)})


def test_serialization_roundtrip():
    r = double(False, True)
    assert RibbonGraph.from_dict(r.to_dict()) == r
    assert r.to_dict()["twists"] == {"1": 0, "2": 1}


def test_flip_equivalent_examples():
    assert flip_equivalent(double(False, True), double(True, False))
    assert not flip_equivalent(double(), double(False, True))
    assert flip_equivalent(path(), path())


def test_twist_edge():
    r = double()
    assert flip_equivalent(twist_edge(twist_edge(r, 1), 1), r)
    assert flip_equivalent(twist_edge(edge(), 1), edge())
    assert trace_faces(twist_edge(r, 2)) == 1
    with pytest.raises(UnknownEdge):
        twist_edge(r, 5)


def test_progressive_examples():
    assert progressive_condition(OrderedMap(edge(), (1,)))
    assert progressive_condition(OrderedMap(path(), (1, 2)))
    assert progressive_condition(OrderedMap(path(), (2, 1)))
    with pytest.raises(InvalidMap):
        progressive_condition(OrderedMap(double(), (1, 2)))


def test_progressive_fails_on_untwisted_double_edge():
    # any one-face 3-edge class whose first deletion leaves a two-faced double edge
    found = 0
    for r in enumerate_nonoriented_labeled(3):
        if trace_faces(r) != 1:
            continue
        for order in permutations(r.labels()):
            sub = r.delete_edges(order[:1])
            if components(sub) == 1 and trace_faces(sub) == 2:
                assert not progressive_condition(OrderedMap(r, order))
                found += 1
    assert found > 0


def test_class_counts():
    assert [len(enumerate_nonoriented_labeled(n)) for n in (1, 2, 3)] == [1, 4, 28]
    assert [len(enumerate_nonoriented_labeled(n, rooted=True)) for n in (1, 2, 3)] == [1, 4, 50]
    with pytest.raises(TooLarge):
        enumerate_nonoriented_labeled(5)


def test_orientable_classes():
    orientable = [r for r in enumerate_nonoriented_labeled(2) if is_orientable(r)]
    assert len(orientable) == 3 == len(list(enumerate_labeled(2)))
    for n in (1, 2, 3):
        rooted = [r for r in enumerate_nonoriented_labeled(n, rooted=True) if is_orientable(r)]
        assert len(rooted) == len(list(enumerate_labeled(n)))


def test_representatives_are_fixed_points():
    for r in enumerate_nonoriented_labeled(3):
        assert from_key(canonical_key(r)) == r


def test_tree_key_and_exhaustive_key_induce_same_classes():
    fast, slow = {}, {}
    for m in enumerate_labeled(3):
        base = RibbonGraph.from_pair(m)
        for bits in range(8):
            r = base.with_twists({e: bool(bits >> (e - 1) & 1) for e in (1, 2, 3)})
            fast.setdefault(canonical_key(r), set()).add(canonical_key_exhaustive(r))
            slow.setdefault(canonical_key_exhaustive(r), set()).add(canonical_key(r))
    assert all(len(v) == 1 for v in fast.values())
    assert all(len(v) == 1 for v in slow.values())


def test_flip_invariants_exhaustive_small():
    for r in enumerate_nonoriented_labeled(2):
        for i in range(len(r.vertices)):
            f = r.flip(i)
            assert trace_faces(f) == trace_faces(r)
            assert is_orientable(f) == is_orientable(r)
            assert canonical_key(f) == canonical_key(r)


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 6), (3, 78)])
def test_two_sided_count(n, expected):
    assert count_S1_S2(n) == (expected, expected)


def test_ordered_map_validates_order():
    with pytest.raises(InvalidMap):
        OrderedMap(OrientedBicolMap.from_one_indexed([1], [1]), (1, 2))
