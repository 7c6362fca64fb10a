"""Polynomial arithmetic, monomial orders, parsing, bidegrees."""

import random
from fractions import Fraction

import pytest

from gaext.poly import (BIDEG_BOTTOM, MonomialOrder, Polynomial,
                        StructuralError, bidegree, default_order, parse, ring)

XY = ("x", "y")
XYUV = ("x", "y", "u", "v")


def test_construction_and_equality():
    x, y = ring("x y")
    assert x + y == y + x
    assert x - x == Polynomial.zero(XY)
    assert (x + y) * (x - y) == x * x - y * y
    assert Polynomial.constant(Fraction(3, 2), XY) * 2 == Polynomial.constant(3, XY)


def test_zero_handling():
    z = Polynomial.zero(XY)
    assert z.is_zero()
    assert z.total_degree() == -1
    assert not z.terms
    x, _ = ring("x y")
    assert (x * 0).is_zero()
    assert (z * x).is_zero()


def test_pow():
    x, y = ring("x y")
    assert (x + y) ** 0 == Polynomial.one(XY)
    assert (x + y) ** 3 == x**3 + 3 * x**2 * y + 3 * x * y**2 + y**3
    with pytest.raises(ValueError):
        (x + y) ** -1


def test_variable_mismatch_raises():
    x, _ = ring("x y")
    u = Polynomial.variable("u", ("u", "v"))
    with pytest.raises(StructuralError):
        x + u


def test_diff():
    x, y = ring("x y")
    f = x**3 * y + 2 * x * y**2
    assert f.diff("x") == 3 * x**2 * y + 2 * y**2
    assert f.diff("y") == x**3 + 4 * x * y


def test_substitute_is_homomorphism():
    random.seed(11)
    x, y = ring("x y")
    a, b = ring("a b")
    images = {"x": a * b + 1, "y": a - b**2}
    for _ in range(20):
        f = sum((x**random.randint(0, 3) * y**random.randint(0, 3)
                 * random.randint(-4, 4) for _ in range(3)),
                Polynomial.zero(XY))
        g = sum((x**random.randint(0, 3) * random.randint(-4, 4)
                 for _ in range(3)), Polynomial.zero(XY))
        assert (f * g).substitute(images) == f.substitute(images) * g.substitute(images)
        assert (f + g).substitute(images) == f.substitute(images) + g.substitute(images)


def test_parse_roundtrip():
    random.seed(7)
    x, y, u, v = ring("x y u v")
    for _ in range(25):
        f = Polynomial.zero(XYUV)
        for _ in range(random.randint(1, 5)):
            term = Polynomial.constant(Fraction(random.randint(-9, 9),
                                                random.randint(1, 5)), XYUV)
            for w in (x, y, u, v):
                term = term * w ** random.randint(0, 3)
            f = f + term
        assert parse(str(f), XYUV) == f


def test_parse_forms():
    assert parse("x^2 - 2*x*y + y^2", XY) == parse("(x - y)^2", XY)
    assert parse("1/2 x", XY) * 2 == parse("x", XY)
    assert parse("-x + x", XY).is_zero()
    with pytest.raises(StructuralError):
        parse("x + z", XY)


def test_order_leading_terms():
    f = parse("x*v - y*u - 1", XYUV)
    deglex = MonomialOrder("deglex", XYUV)
    assert f.leading_term(deglex) == ((1, 0, 0, 1), Fraction(1))
    lex = MonomialOrder("lex", XYUV)
    assert f.leading_term(lex)[0] == (1, 0, 0, 1)
    grevlex = MonomialOrder("degrevlex", XYUV)
    # under degrevlex the later pair y*u beats x*v
    assert f.leading_term(grevlex)[0] == (0, 1, 1, 0)


def test_order_total_degree_dominates():
    deglex = default_order(XY)
    f = parse("x + y^3", XY)
    assert f.leading_term(deglex)[0] == (0, 3)


def test_bidegree():
    tvu = ("t", "v", "u")
    f = parse("t^7*u^5 + 2*v^3*u^4 + 3*v*u^5", tvu)
    assert bidegree(f) == (5, 1)
    assert bidegree(Polynomial.zero(tvu)) == BIDEG_BOTTOM
    assert BIDEG_BOTTOM < (0, 0)
    assert bidegree(parse("t^4", tvu)) == (0, 0)
