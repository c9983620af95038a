import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_divides, small_moduli
from zelisko.errors import MalformedInput, ModulusMismatch, NotAUnit
from zelisko.euclid import PolynomialsModP
from zelisko.linsolve import generating_solution
from zelisko.residue import (
    Modulus,
    alpha_element,
    ann_generator,
    associates,
    divides,
    gcd_with_modulus,
    invert_unit,
    is_unit_residue,
    reduce,
    unit_decompose,
)

MODULI = small_moduli()


def ids(mods):
    return [repr(m) for m in mods]


def test_modulus_validation():
    assert Modulus(-36) == Modulus(36)
    for bad in (0, 1, -1):
        with pytest.raises(MalformedInput):
            Modulus(bad)
    f3 = PolynomialsModP(3)
    with pytest.raises(MalformedInput):
        Modulus(f3.poly([2]), f3)
    # non-monic moduli are normalized
    assert Modulus(f3.poly([0, 2]), f3).m == (0, 1)


def test_arithmetic_examples(z36):
    assert reduce(230, z36) == 14
    assert reduce(0, z36) == 0
    assert z36(26) * z36(7) == 2
    assert z36(-1) == 35
    assert 3 - z36(5) == 34


def test_units(z36):
    assert invert_unit(z36(11)) == 23
    assert invert_unit(z36(1)) == 1
    assert not is_unit_residue(z36(30))
    with pytest.raises(NotAUnit):
        invert_unit(z36(30))


def test_unit_decompose_examples(z36):
    assert unit_decompose(z36(33)) == (3, z36(11))
    assert unit_decompose(z36(30)) == (6, z36(5))
    assert unit_decompose(z36(0)) == (36, z36(1))
    for u in (1, 5, 7, 35):
        assert unit_decompose(z36(u)) == (1, z36(u))


def test_divides_examples(z36, z8):
    assert divides(z36(33), z36(30))
    assert divides(z36(7), z36(0))
    assert not divides(z8(4), z8(2))
    assert associates(z36(14), z36(2))


def test_annihilator_examples(z36, z144):
    assert ann_generator(z36(33)) == 12
    assert {ann_generator(z36(33)) * t for t in z36.elements()} == {z36(0), z36(12), z36(24)}
    assert ann_generator(z144(8)) == 18
    assert len({z144(18) * t for t in z144.elements()}) == 8
    assert alpha_element(z36(33)) == 24
    assert alpha_element(z36(30)) == 30
    assert associates(z36(24), z36(12))


def test_ann_of_four_in_z144(z144):
    # the annihilator of 4 is generated by 36, i.e. {0, 36, 72, 108}
    ann = {x for x in z144.elements() if z144(4) * x == 0}
    assert ann == {z144(v) for v in (0, 36, 72, 108)}
    assert ann_generator(z144(4)) == 36


def test_modulus_mismatch(z36, z144):
    with pytest.raises(ModulusMismatch):
        z36(1) + z144(1)
    with pytest.raises(ModulusMismatch):
        divides(z36(2), z144(4))


def test_residue_json(z36, f2_x4x):
    assert z36(14).to_json() == {"rep": 14, "mod": 36}
    x = f2_x4x(f2_x4x.ring.poly([1, 1]))
    assert x.to_json() == {"rep": [1, 1], "mod": [0, 1, 0, 0, 1]}


@pytest.mark.parametrize("modulus", MODULI, ids=ids(MODULI))
def test_decomposition_exhaustive(modulus):
    ring = modulus.ring
    for c in modulus.elements():
        mu, e = unit_decompose(c)
        assert modulus(mu) * e == c
        assert is_unit_residue(e)
        assert mu == gcd_with_modulus(c)
        assert ring.canonical_associate(mu)[0] == mu


@pytest.mark.parametrize("modulus", MODULI, ids=ids(MODULI))
def test_divides_matches_brute_force(modulus):
    elems = list(modulus.elements())
    for a in elems:
        for b in elems:
            assert divides(a, b) == brute_divides(a, b), (a, b)


@pytest.mark.parametrize("modulus", MODULI, ids=ids(MODULI))
def test_annihilator_generators_exhaustive(modulus):
    elems = list(modulus.elements())
    for c in elems:
        ann = {x for x in elems if c * x == 0}
        assert {ann_generator(c) * t for t in elems} == ann
        assert {alpha_element(c) * t for t in elems} == ann


@pytest.mark.parametrize("modulus", MODULI, ids=ids(MODULI))
def test_units_invert(modulus):
    for c in modulus.elements():
        if is_unit_residue(c):
            assert c * invert_unit(c) == 1
        else:
            assert all(c * x != 1 for x in modulus.elements())


def _literal_alpha(c):
    # annihilator generator twisted by e rather than by e^-1
    return ann_generator(c) * unit_decompose(c).e


def test_literal_twist_breaks_transfer(z36):
    c1, c2 = z36(9), z36(27)
    g = generating_solution(c1, c2)
    assert g * _literal_alpha(c2) != _literal_alpha(c1)
    assert g * alpha_element(c2) == alpha_element(c1)


@given(st.integers(2, 400), st.integers(), st.integers())
def test_ring_axioms_integers(m, a, b):
    z = Modulus(m)
    x, y = z(a), z(b)
    assert x + y == (a + b) % m
    assert x * y == (a * b) % m
    assert x - y + y == x
    assert -x + x == 0


def test_random_in_range():
    rng = random.Random(0)
    z = Modulus(10)
    assert {z.random(rng).rep for _ in range(500)} == set(range(10))
