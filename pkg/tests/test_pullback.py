"""Pullbacks of the standard bundle along plane maps."""

import pytest

from gaext.groebner import InputError
from gaext.poly import Polynomial, parse
from gaext.pullback import (build_pullback, expected_pullback_ideal,
                            graded_sequence_of_pullback, pullback_subalgebra)
from gaext.sl2 import base_power_ideal

XY = ("x", "y")


def test_identity_map_reproduces_surface():
    bundle = build_pullback(XY, parse("x", XY), parse("y", XY))
    assert bundle.ring.variables == ("x", "y", "f0", "f1")
    assert not bundle.trivial
    relation = bundle.ring.relations[0]
    expected = parse("x*f1 - y*f0 - 1", bundle.ring.variables)
    assert (relation - expected).is_zero() or (relation + expected).is_zero()
    sequence = graded_sequence_of_pullback(bundle, 2)
    for nu in (1, 2):
        assert sequence[nu].equals(base_power_ideal(nu))


def test_nontrivial_map_sequence():
    bundle = build_pullback(XY, parse("x^2", XY), parse("y", XY))
    sequence = graded_sequence_of_pullback(bundle, 2)
    for nu in (1, 2):
        assert sequence[nu].equals(expected_pullback_ideal(bundle, nu))
    assert parse("x^2", XY) in sequence[1]
    assert parse("x", XY) not in sequence[1]


def test_degenerate_map_rejected():
    zero = Polynomial.zero(XY)
    with pytest.raises(InputError):
        build_pullback(XY, zero, zero)


def test_trivial_flag():
    assert build_pullback(XY, parse("1", XY), parse("y", XY)).trivial
    assert build_pullback(XY, parse("x", XY), parse("3", XY)).trivial
    assert not build_pullback(XY, parse("x", XY), parse("y", XY)).trivial


def test_trivial_bundle_has_unit_levels():
    bundle = build_pullback(XY, parse("1", XY), parse("y", XY))
    sequence = graded_sequence_of_pullback(bundle, 1)
    assert sequence[0].is_unit()
    assert sequence[1].is_unit()


def test_supported_on_common_zeros():
    # every level-1 generator lies in <g, h>
    bundle = build_pullback(XY, parse("x^2 + y", XY), parse("y^2", XY))
    sequence = graded_sequence_of_pullback(bundle, 1)
    target = expected_pullback_ideal(bundle, 1)
    for gen in sequence[1].generators:
        assert gen in target
