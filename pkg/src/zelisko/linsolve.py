"""Linear congruences ``a*x = b`` in R_m: generating solutions and their cosets."""

from typing import NamedTuple

from .errors import PreconditionViolated, RingTooLarge, Unsolvable
from .residue import (
    alpha_element,
    ann_generator,
    associates,
    check_same,
    divides,
    invert_unit,
    unit_decompose,
)

__all__ = [
    "DEFAULT_BOUND",
    "SolutionCoset",
    "is_solvable",
    "generating_solution",
    "solution_coset",
    "enumerate_solutions",
    "is_generating",
    "compose_generating",
    "alpha_transfer_check",
]

DEFAULT_BOUND = 10**4


class SolutionCoset(NamedTuple):
    """All solutions of ``a*x = b``: ``x0 + ann_gen * R_m``."""

    x0: object
    ann_gen: object


def is_solvable(a, b):
    return divides(a, b)


def generating_solution(a, b):
    """``(mu_b / mu_a) * e_b * e_a^-1`` from the pinned unit decompositions.

    ``generating_solution(0, 0)`` is ``1``: every x solves and 1 divides all.
    """
    check_same(a.modulus, b.modulus)
    if not divides(a, b):
        raise Unsolvable(f"{a} * x = {b} has no solution")
    modulus = a.modulus
    if not a:
        return modulus.one
    ring = modulus.ring
    mu_a, e_a = unit_decompose(a)
    mu_b, e_b = unit_decompose(b)
    return modulus(ring.exact_div(mu_b, mu_a)) * e_b * invert_unit(e_a)


def solution_coset(a, b):
    return SolutionCoset(generating_solution(a, b), ann_generator(a))


def enumerate_solutions(coset, bound=DEFAULT_BOUND):
    """Distinct elements of ``x0 + t * ann_gen``, in canonical order."""
    modulus = coset.x0.modulus
    if modulus.size > bound:
        raise RingTooLarge(f"|R_m| = {modulus.size} exceeds bound {bound}")
    # the ideal ann_gen*R_m is swept once; duplicates are absorbed by the set
    return {coset.x0 + coset.ann_gen * t for t in modulus.elements()}


def is_generating(a, b, x):
    """``x`` solves ``a*x = b`` and divides every solution."""
    check_same(a.modulus, x.modulus)
    if not divides(a, b) or a * x != b:
        return False
    return associates(x, generating_solution(a, b))


def compose_generating(g21, g32, chain=None):
    """Product of generating solutions along ``c1 | c2 | c3``.

    ``chain=(c1, c2, c3)`` turns on precondition checking.
    """
    if chain is not None:
        c1, c2, c3 = chain
        if not (is_generating(c1, c2, g21) and is_generating(c2, c3, g32)):
            raise PreconditionViolated("factors are not generating for the given chain")
    return g21 * g32


def alpha_transfer_check(c1, c2):
    """Check ``g * alpha(c2) == alpha(c1)`` with ``g`` generating for ``c1*x = c2``.

    Also confirms ``g`` is a generating solution of ``alpha(c2) * x = alpha(c1)``.
    """
    check_same(c1.modulus, c2.modulus)
    if not c1 or not c2 or not divides(c1, c2):
        raise PreconditionViolated("need non-zero c1 | c2")
    g = generating_solution(c1, c2)
    a1 = alpha_element(c1)
    a2 = alpha_element(c2)
    return g * a2 == a1 and is_generating(a2, a1, g)
