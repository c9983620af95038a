"""Arithmetic in the residue ring R_m = R/mR.

A :class:`Residue` always holds the canonical representative of its class
(``0 <= rep < m`` for integers, ``deg rep < deg m`` for polynomials), so
equality and hashing are plain tuple comparisons.
"""

from functools import lru_cache
from typing import NamedTuple

from .euclid import ZZ
from .errors import MalformedInput, ModulusMismatch, NotAUnit

__all__ = [
    "Modulus",
    "Residue",
    "UnitDecomposition",
    "reduce",
    "is_unit_residue",
    "invert_unit",
    "unit_decompose",
    "divides",
    "associates",
    "ann_generator",
    "alpha_element",
    "gcd_with_modulus",
]


class Modulus:
    """A non-zero, non-unit element ``m`` of a Euclidean domain, kept canonical."""

    __slots__ = ("ring", "m")

    def __init__(self, m, ring=ZZ):
        m = ring.canonical_associate(m)[0]
        if ring.is_zero(m):
            raise MalformedInput("modulus must be non-zero")
        if ring.is_unit(m):
            raise MalformedInput("modulus must not be a unit")
        self.ring = ring
        self.m = m

    def __eq__(self, other):
        return (
            isinstance(other, Modulus) and self.m == other.m and self.ring == other.ring
        )

    def __hash__(self):
        return hash((self.ring, self.m))

    def __repr__(self):
        return f"Modulus({self.ring.format(self.m)}, {self.ring!r})"

    def __call__(self, c):
        """Reduce a domain element (or small int) into this residue ring."""
        if isinstance(c, Residue):
            check_same(c.modulus, self)
            return c
        if isinstance(c, int):
            c = self.ring.from_int(c)
        return Residue(self.ring.reduce(c, self.m), self)

    @property
    def size(self):
        return self.ring.residue_count(self.m)

    @property
    def zero(self):
        return Residue(self.ring.zero, self)

    @property
    def one(self):
        return Residue(self.ring.one, self)

    def elements(self):
        """All residues in canonical order."""
        return (Residue(r, self) for r in self.ring.residues(self.m))

    def random(self, rng):
        return Residue(self.ring.random_residue(rng, self.m), self)


def check_same(a, b):
    if a != b:
        raise ModulusMismatch(f"{a!r} vs {b!r}")


class Residue:
    """A canonical element of R_m. Construct via :func:`reduce` or ``Modulus(...)``."""

    __slots__ = ("rep", "modulus")

    def __init__(self, rep, modulus):
        self.rep = rep
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, Residue):
            check_same(self.modulus, other.modulus)
            return other
        if isinstance(other, int):
            return self.modulus(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ring = self.modulus.ring
        return Residue(ring.reduce(ring.add(self.rep, other.rep), self.modulus.m), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ring = self.modulus.ring
        return Residue(ring.reduce(ring.sub(self.rep, other.rep), self.modulus.m), self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ring = self.modulus.ring
        return Residue(ring.reduce(ring.mul(self.rep, other.rep), self.modulus.m), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        ring = self.modulus.ring
        return Residue(ring.reduce(ring.neg(self.rep), self.modulus.m), self.modulus)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.rep == other.rep and self.modulus == other.modulus
        if isinstance(other, int):
            return self == self.modulus(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.rep, self.modulus.m))

    def __bool__(self):
        return not self.modulus.ring.is_zero(self.rep)

    def __repr__(self):
        ring = self.modulus.ring
        return f"Residue({ring.format(self.rep)} mod {ring.format(self.modulus.m)})"

    def __str__(self):
        return self.modulus.ring.format(self.rep)

    def is_unit(self):
        return is_unit_residue(self)

    def inverse(self):
        return invert_unit(self)

    def to_json(self):
        ring = self.modulus.ring
        return {"rep": ring.to_json(self.rep), "mod": ring.to_json(self.modulus.m)}


class UnitDecomposition(NamedTuple):
    """``c == mu * e`` in R_m with ``mu = (c, m)`` canonical and ``e`` a unit."""

    mu: object
    e: Residue


def reduce(c, modulus):
    return modulus(c)


def gcd_with_modulus(c):
    """Canonical ``(rep, m)``; equals ``m`` for the zero residue."""
    return c.modulus.ring.gcd(c.rep, c.modulus.m)


def is_unit_residue(c):
    ring = c.modulus.ring
    return gcd_with_modulus(c) == ring.one


def invert_unit(c):
    ring = c.modulus.ring
    g, u, _ = ring.xgcd(c.rep, c.modulus.m)
    if g != ring.one:
        raise NotAUnit(f"{c!r} is not a unit")
    return c.modulus(u)


@lru_cache(maxsize=1 << 16)
def unit_decompose(c):
    """Pinned decomposition ``c = mu * e``.

    With ``c = mu * c'``, ``e`` is the first ``c' + t*(m/mu)`` (``t`` in the
    domain's enumeration order) coprime to ``m``. The search terminates since
    ``(c', m/mu) = 1``.
    """
    ring = c.modulus.ring
    m = c.modulus.m
    mu = gcd_with_modulus(c)
    cofactor = ring.exact_div(c.rep, mu)
    step = ring.exact_div(m, mu)
    for t in ring.elements():
        e = ring.reduce(ring.add(cofactor, ring.mul(t, step)), m)
        if ring.gcd(e, m) == ring.one:
            return UnitDecomposition(mu, Residue(e, c.modulus))
    raise AssertionError("unreachable")  # pragma: no cover


def divides(a, b):
    """``a | b`` in R_m, decided by ``(a, m) | (b, m)``."""
    check_same(a.modulus, b.modulus)
    return a.modulus.ring.divides(gcd_with_modulus(a), gcd_with_modulus(b))


def associates(a, b):
    check_same(a.modulus, b.modulus)
    return gcd_with_modulus(a) == gcd_with_modulus(b)


def ann_generator(c):
    """The generator ``m / (c, m)`` of ``Ann(c)``."""
    ring = c.modulus.ring
    return c.modulus(ring.exact_div(c.modulus.m, gcd_with_modulus(c)))


def alpha_element(c):
    """Unit-twisted annihilator generator ``(m / mu_c) * e^-1``.

    Twisting by the inverse of the pinned unit is what makes
    ``generating_solution(c1, c2) * alpha_element(c2) == alpha_element(c1)``
    hold exactly for every ``c1 | c2``.
    """
    return ann_generator(c) * invert_unit(unit_decompose(c).e)
