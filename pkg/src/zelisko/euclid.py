"""Euclidean domains: the integers and univariate polynomials over F_p.

Every higher module is written against :class:`EuclideanDomain`, so the
residue-ring machinery works unchanged for ``Z/mZ`` and ``F_p[x]/(m(x))``.

Element representations:

* integers are plain Python ``int``;
* polynomials are tuples of coefficients in ``range(p)``, constant term first,
  with no trailing zeros (``()`` is the zero polynomial).
"""

import json

from .errors import DivisionByZero, MalformedInput, NotDivisible

__all__ = [
    "EuclideanDomain",
    "Integers",
    "PolynomialsModP",
    "ZZ",
    "is_prime",
]


def is_prime(p):
    """Trial division primality test."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class EuclideanDomain:
    """Operations shared by both instantiations.

    Subclasses supply the primitive arithmetic (``add``, ``mul``, ``divmod``,
    ``norm``, unit handling, residue enumeration and text encoding); gcd,
    Bezout coefficients and exact division are derived here once.
    """

    zero = None
    one = None

    # -- primitives -------------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def divmod(self, a, b):
        raise NotImplementedError

    def norm(self, a):
        """Euclidean function: remainders are strictly smaller than divisors."""
        raise NotImplementedError

    def is_unit(self, a):
        raise NotImplementedError

    def unit_inverse(self, u):
        raise NotImplementedError

    def canonical_associate(self, a):
        """Return ``(a', u)`` with ``a == u * a'``, ``a'`` canonical and ``u`` a unit."""
        raise NotImplementedError

    def from_int(self, k):
        raise NotImplementedError

    def is_zero(self, a):
        return a == self.zero

    # -- derived ----------------------------------------------------------
    def gcd(self, a, b):
        """Canonical gcd; ``gcd(0, 0) == 0``."""
        while not self.is_zero(b):
            a, b = b, self.divmod(a, b)[1]
        return self.canonical_associate(a)[0]

    def xgcd(self, a, b):
        """Return ``(g, u, v)`` with ``u*a + v*b == g`` and ``g`` the canonical gcd."""
        r0, r1 = a, b
        s0, s1 = self.one, self.zero
        t0, t1 = self.zero, self.one
        while not self.is_zero(r1):
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(q, s1))
            t0, t1 = t1, self.sub(t0, self.mul(q, t1))
        g, unit = self.canonical_associate(r0)
        inv = self.unit_inverse(unit)
        return g, self.mul(s0, inv), self.mul(t0, inv)

    def exact_div(self, a, b):
        if self.is_zero(b):
            raise DivisionByZero("exact division by zero")
        q, r = self.divmod(a, b)
        if not self.is_zero(r):
            raise NotDivisible(f"{self.format(b)} does not divide {self.format(a)}")
        return q

    def divides(self, a, b):
        """True when ``a | b`` in the domain (``0 | b`` only for ``b == 0``)."""
        if self.is_zero(a):
            return self.is_zero(b)
        return self.is_zero(self.divmod(b, a)[1])

    def reduce(self, a, m):
        """Canonical representative of ``a`` modulo ``m``."""
        return self.divmod(a, m)[1]

    # -- residue enumeration ---------------------------------------------
    def residue_count(self, m):
        raise NotImplementedError

    def residues(self, m):
        """Iterate canonical representatives of ``R/mR`` in canonical order."""
        raise NotImplementedError

    def elements(self):
        """Iterate ``0, 1, 2, ...`` in canonical enumeration order (infinite)."""
        raise NotImplementedError

    def random_residue(self, rng, m):
        raise NotImplementedError

    # -- text / JSON ------------------------------------------------------
    def to_json(self, a):
        raise NotImplementedError

    def from_json(self, obj):
        raise NotImplementedError

    def parse(self, text):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"cannot parse element {text!r}") from exc
        return self.from_json(obj)

    def format(self, a):
        return json.dumps(self.to_json(a), separators=(",", ":"))


class Integers(EuclideanDomain):
    """The ring Z with non-negative canonical associates."""

    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def divmod(self, a, b):
        if b == 0:
            raise DivisionByZero("integer division by zero")
        q, r = divmod(a, b)
        if r < 0:  # only possible for b < 0; keep 0 <= r < |b|
            q, r = q + 1, r - b
        return q, r

    def norm(self, a):
        return abs(a)

    def is_unit(self, a):
        return a in (1, -1)

    def unit_inverse(self, u):
        return u

    def canonical_associate(self, a):
        return (-a, -1) if a < 0 else (a, 1)

    def from_int(self, k):
        return int(k)

    def residue_count(self, m):
        return abs(m)

    def residues(self, m):
        return iter(range(abs(m)))

    def elements(self):
        k = 0
        while True:
            yield k
            k += 1

    def random_residue(self, rng, m):
        return rng.randrange(abs(m))

    def to_json(self, a):
        return a

    def from_json(self, obj):
        if isinstance(obj, bool) or not isinstance(obj, int):
            raise MalformedInput(f"expected an integer, got {obj!r}")
        return obj

    def __eq__(self, other):
        return isinstance(other, Integers)

    def __hash__(self):
        return hash("ZZ")

    def __repr__(self):
        return "ZZ"


ZZ = Integers()


class PolynomialsModP(EuclideanDomain):
    """The ring F_p[x]; canonical associates are monic."""

    zero = ()
    one = (1,)

    def __init__(self, p):
        p = int(p)
        if not (2 <= p <= 2**31) or not is_prime(p):
            raise MalformedInput(f"{p} is not a prime in [2, 2^31]")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PolynomialsModP) and other.p == self.p

    def __hash__(self):
        return hash(("F_p[x]", self.p))

    def __repr__(self):
        return f"F_{self.p}[x]"

    def poly(self, coeffs):
        """Normalize an arbitrary coefficient sequence into an element."""
        c = [int(x) % self.p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def degree(self, a):
        return len(a) - 1

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        p = self.p
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return self.poly(out)

    def neg(self, a):
        p = self.p
        return tuple((-c) % p for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        p = self.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % p
        return self.poly(out)

    def scale(self, a, c):
        return self.poly(x * c for x in a)

    def divmod(self, a, b):
        if not b:
            raise DivisionByZero("polynomial division by zero")
        p = self.p
        inv_lead = pow(b[-1], -1, p)
        rem = list(a)
        db = len(b) - 1
        if len(rem) <= db:
            return (), tuple(rem)
        quot = [0] * (len(rem) - db)
        for shift in range(len(rem) - 1 - db, -1, -1):
            coef = rem[shift + db] * inv_lead % p
            quot[shift] = coef
            if coef:
                for j, y in enumerate(b):
                    rem[shift + j] = (rem[shift + j] - coef * y) % p
        return self.poly(quot), self.poly(rem[:db])

    def norm(self, a):
        return len(a)  # degree + 1, zero -> 0

    def is_unit(self, a):
        return len(a) == 1

    def unit_inverse(self, u):
        return (pow(u[0], -1, self.p),)

    def canonical_associate(self, a):
        if not a:
            return (), (1,)
        lead = a[-1]
        return self.scale(a, pow(lead, -1, self.p)), (lead,)

    def from_int(self, k):
        return self.poly([k])

    def residue_count(self, m):
        return self.p ** (len(m) - 1)

    def _from_index(self, idx):
        digits = []
        while idx:
            idx, d = divmod(idx, self.p)
            digits.append(d)
        return tuple(digits)

    def residues(self, m):
        return (self._from_index(i) for i in range(self.residue_count(m)))

    def elements(self):
        i = 0
        while True:
            yield self._from_index(i)
            i += 1

    def random_residue(self, rng, m):
        return self.poly(rng.randrange(self.p) for _ in range(len(m) - 1))

    def to_json(self, a):
        return list(a)

    def from_json(self, obj):
        if isinstance(obj, int) and not isinstance(obj, bool):
            return self.poly([obj])
        if not isinstance(obj, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) for c in obj
        ):
            raise MalformedInput(f"expected a coefficient list, got {obj!r}")
        return self.poly(obj)

    def pretty(self, a):
        if not a:
            return "0"
        terms = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)

