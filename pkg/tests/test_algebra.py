from fractions import Fraction

import pytest

from jackmaps.algebra import (
    GAMMA,
    LaurentA,
    MultiPoly,
    QPoly,
    RationalFunction,
    a_to_gamma,
    bernoulli,
    faulhaber_range_sum,
    gamma_substitute,
    homogeneous_part,
    laurent_to_delta,
    parse_expression,
    parse_poly,
)
from jackmaps.algebra.linsolve import solve
from jackmaps.errors import NotExpressible, NotLaurent

A = LaurentA({1: 1})


def g_poly(text):
    return parse_poly(text, ("g",))


class TestLaurent:
    def test_printing(self):
        assert str(A**2 - 2 + A**-2) == "A^2 - 2 + A^-2"
        assert str(GAMMA) == "-A + A^-1"
        assert str(LaurentA()) == "0"
        assert str(LaurentA({0: Fraction(3, 2)})) == "3/2"

    def test_no_zero_terms(self):
        f = A + 1 - A
        assert f.terms == {0: 1}

    def test_involution_fixes_gamma(self):
        assert GAMMA.involution() == GAMMA
        assert (A + A**-1).involution() == -(A + A**-1)

    def test_evaluate(self):
        assert GAMMA.evaluate(1) == 0
        assert (3 * A - 2 * A**-1).evaluate(1) == 1

    def test_equality_with_scalars(self):
        assert LaurentA.constant(5) == 5
        assert hash(LaurentA.constant(5)) == hash(5)

    def test_parse(self):
        assert parse_expression("A^2 - 2 + A^-2") == A**2 - 2 + A**-2


class TestGamma:
    def test_substitute_examples(self):
        assert gamma_substitute(g_poly("g")) == GAMMA
        assert gamma_substitute(g_poly("g^2")) == A**2 - 2 + A**-2
        assert gamma_substitute(g_poly("3*g + 1")) == -3 * A + 3 * A**-1 + 1

    def test_inverse_examples(self):
        assert a_to_gamma(A**2 - 2 + A**-2) == g_poly("g^2")
        assert a_to_gamma(-A + A**-1) == g_poly("g")
        with pytest.raises(NotExpressible):
            a_to_gamma(A + A**-1)

    def test_delta(self):
        assert str(laurent_to_delta(6 * GAMMA**2 + 3)) == "6*d^2 + 3"
        assert str(laurent_to_delta(-9 * GAMMA)) == "9*d"


class TestMultiPoly:
    def test_canonical_printing(self):
        p = parse_poly("q1*p1 + g*3*p1^2*q1 - 1/2*p2")
        assert str(p) == "3*p1^2*q1*g + p1*q1 - 1/2*p2"

    def test_roundtrip(self):
        text = "-p1^3*q1 - 3*p1^2*p2*q2 - 2*p2*q2*g^2 - p1*q1"
        assert str(parse_poly(text)) == text

    def test_arithmetic(self):
        x = parse_poly("p1 + q1")
        assert str(x * x) == "p1^2 + 2*p1*q1 + q1^2"
        assert x - x == 0
        assert str(x ** 0) == "1"

    def test_homogeneous_part(self):
        assert homogeneous_part(MultiPoly.const(7), 0) == 7
        assert homogeneous_part(parse_poly("p1*q1 + p1^2*q1"), 2) == parse_poly("p1*q1")
        assert homogeneous_part(parse_poly("p1*q1 + p1^2*q1"), 5) == 0

    def test_subs_and_derivative(self):
        p = parse_poly("c1^2*g + c1")
        assert p.evaluate({"c1": 2, "g": -1}) == -2
        assert str(p.derivative("c1")) == "2*c1*g + 1"

    def test_symmetry(self):
        assert parse_poly("c1 + c2 + g").is_symmetric_in(("c1", "c2"))
        assert not parse_poly("c1 + 2*c2").is_symmetric_in(("c1", "c2"))


class TestSummation:
    def test_bernoulli(self):
        assert [bernoulli(m) for m in range(5)] == [1, Fraction(1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]

    def test_examples(self):
        N = MultiPoly.var("q1")
        assert faulhaber_range_sum(1, 0, N) == N * (N + 1) / 2
        c, L = MultiPoly.var("c1", ("c1", "q1")), MultiPoly.var("q1", ("c1", "q1"))
        assert faulhaber_range_sum(0, c, L) == L
        assert faulhaber_range_sum(2, 2, 3) == 50


class TestRationalFunctions:
    def test_normalized(self):
        x = QPoly([0, 1])
        f = RationalFunction(x * x - QPoly([1]), x * 2 - QPoly([2]))
        assert f.den == QPoly([1])
        assert f.num == QPoly([Fraction(1, 2), Fraction(1, 2)])

    def test_to_laurent(self):
        f = RationalFunction(QPoly([1, 0, 1]), QPoly([0, 1]))
        assert f.to_laurent() == A + A**-1
        with pytest.raises(NotLaurent):
            RationalFunction(QPoly([1]), QPoly([1, 1])).to_laurent()

    def test_alpha_variable(self):
        f = RationalFunction(QPoly([0, 1], "alpha"))
        assert f.to_laurent() == A**2


class TestLinearSolve:
    def test_unique(self):
        sol = solve([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]], [Fraction(3), Fraction(5)], 2)
        assert sol.unique and sol.values == [Fraction(4, 5), Fraction(7, 5)]

    def test_rank_defect(self):
        sol = solve([[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]], [Fraction(1), Fraction(2)], 2)
        assert sol.consistent and sol.nullity == 1
        bad = solve([[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]], [Fraction(1), Fraction(3)], 2)
        assert not bad.consistent
