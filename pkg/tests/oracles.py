"""Exhaustive reference answers, computed by scanning R_m element by element."""

from zelisko.euclid import PolynomialsModP
from zelisko.residue import Modulus


def brute_solutions(a, b):
    return {x for x in a.modulus.elements() if a * x == b}


def brute_divides(a, b):
    return any(a * x == b for x in a.modulus.elements())


def small_moduli():
    f2, f3 = PolynomialsModP(2), PolynomialsModP(3)
    return [
        Modulus(4),
        Modulus(12),
        Modulus(36),
        Modulus(f2.poly([0, 0, 1]), f2),  # x^2
        Modulus(f2.poly([0, 1, 0, 0, 1]), f2),  # x^4 + x
        Modulus(f3.poly([1, 0, 1]), f3),  # x^2 + 1, irreducible: a field
        Modulus(f3.poly([0, 0, 1]), f3),  # x^2
    ]
