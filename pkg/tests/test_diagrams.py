from fractions import Fraction

import pytest

from jackmaps.algebra import GAMMA, LaurentA, MultiPoly, a_to_gamma, parse_poly
from jackmaps.characters import ch3_explicit_family
from jackmaps.diagrams import (
    Box,
    ContentPolynomialFamily,
    YoungDiagram,
    concrete_to_multirect,
    content,
    delta_op,
    diagrams_up_to,
    evaluate_family,
    evaluate_family_multirect,
    family_variables,
    partitions,
    substitute_diagram,
    sym_extend,
)
from jackmaps.errors import EmptyDiagram

A = LaurentA({1: 1})
Y = YoungDiagram


def family(degree, *texts):
    return ContentPolynomialFamily(degree, [parse_poly(t, family_variables(k)) for k, t in enumerate(texts)])


def test_young_diagram_basics():
    lam = Y.parse("3,1")
    assert lam.size == 4 and len(lam) == 2
    assert Box(3, 1) in lam and Box(2, 2) not in lam
    assert lam.conjugate() == Y((2, 1, 1))
    assert str(Y.parse("")) == "" and Y.parse("").size == 0
    with pytest.raises(ValueError):
        Y((1, 2))


def test_partition_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(diagrams_up_to(7)) == 45


def test_content():
    assert content(Box(1, 1)) == A - A**-1
    assert a_to_gamma(content(Box(1, 1))) == -parse_poly("g", ("g",))
    assert content(Box(3, 2)) == 3 * A - 2 * A**-1


def test_evaluate_family_examples():
    ch3 = ch3_explicit_family()
    assert evaluate_family(ch3, Y((1,))) == 0
    assert evaluate_family(ch3, Y((2, 1))) == -3
    assert evaluate_family(ContentPolynomialFamily(4, []), Y((3, 2))) == 0


def test_family_validity():
    assert family(3, "0", "2*c1 + 2*g").is_valid()
    assert not family(2, "0", "c1^2").is_valid()
    assert not family(4, "0", "0", "c1").is_valid()


def test_multirect_examples():
    assert str(evaluate_family_multirect(family(2, "0", "1"), 1)) == "-p1*q1"
    ch2 = family(3, "0", "2*c1 + 2*g")
    assert str(evaluate_family_multirect(ch2, 1)) == "-p1^2*q1 - p1*q1^2 - p1*q1*g"


def test_concrete_to_multirect_examples():
    assert concrete_to_multirect(Y((2,))) == {"p1": LaurentA({-1: -1}), "q1": LaurentA({1: 2})}
    sub = concrete_to_multirect(Y((2, 1)))
    assert (sub["p1"], sub["p2"], sub["q1"], sub["q2"]) == (-(A**-1), -(A**-1), 2 * A, A)
    assert concrete_to_multirect(Y((1,))) == {"p1": -(A**-1), "q1": A}
    with pytest.raises(EmptyDiagram):
        concrete_to_multirect(Y(()))


def test_substitution_reproduces_values():
    ch2 = family(3, "0", "2*c1 + 2*g")
    assert substitute_diagram(evaluate_family_multirect(ch2, 1), Y((2,))) == 2 * A
    stan = evaluate_family_multirect(ch3_explicit_family(), 2)
    assert substitute_diagram(stan, Y((2, 1))) == -3


def test_delta_and_sym():
    sq = delta_op(lambda x: x * x, 1)
    assert [sq(x) for x in range(4)] == [2 * x + 1 for x in range(4)]
    assert delta_op(lambda x: 7, 1)(3) == 0
    assert delta_op(lambda a, b: a * b, 2)(5, 9) == 5
    seen = []
    sym_extend(lambda lam: seen.append(lam.parts), (1, 3))
    sym_extend(lambda lam: seen.append(lam.parts), (2, 0, 2))
    assert seen == [(3, 1), (2, 2)]


def test_family_serialization():
    ch3 = ch3_explicit_family()
    data = ch3.to_dict()
    assert data == {"0": "0", "1": "3*c1^2 + 9*c1*g + 6*g^2 + 3/2", "2": "-3/2"}
    assert ContentPolynomialFamily.from_dict(4, data) == ch3


def test_linearity():
    f1 = family(3, "g", "2*c1 + 2*g")
    f2 = family(3, "1", "c1^2")
    for lam in diagrams_up_to(4):
        assert evaluate_family(f1 + f2.scale(Fraction(3)), lam) == evaluate_family(f1, lam) + 3 * evaluate_family(f2, lam)


def test_gamma_constant_family():
    # p_0 = g evaluates to gamma on every diagram
    assert evaluate_family(family(2, "g"), Y((4, 2))) == GAMMA
    assert isinstance(evaluate_family(family(2, "g"), Y(())), LaurentA)
    _ = MultiPoly
