"""Exact permutation expansion of the structured determinants behind ``det(S) == det(H)``.

Variables are interned tuples: ``("a", i)`` stands for the subdiagonal entry
``a_{i,i-1}`` and ``("h", i, j)`` for the cofactor ``h_ij`` (1-based).
Every matrix entry here is a single monomial, so a permutation term is a
monomial and a determinant is a sum of them.
"""

from itertools import permutations

from .errors import SizeOutOfRange
from .matrix import permutation_sign

__all__ = [
    "Monomial",
    "SymPolynomial",
    "a_var",
    "h_var",
    "lam",
    "build_lemma3_matrix",
    "build_lemma4_matrices",
    "perm_term",
    "sym_det",
    "check_lemma3",
    "check_lemma4",
    "evaluate_matrix",
    "MIN_N",
    "MAX_N",
]

MIN_N, MAX_N = 2, 7


def a_var(i):
    return ("a", i)


def h_var(i, j):
    return ("h", i, j)


class Monomial:
    """``coeff * prod(var**exp)`` with the exponent table stored sorted."""

    __slots__ = ("coeff", "exps")

    def __init__(self, coeff=1, exps=()):
        if isinstance(exps, dict):
            exps = exps.items()
        self.coeff = coeff
        self.exps = tuple(sorted((v, e) for v, e in exps if e)) if coeff else ()

    @classmethod
    def var(cls, v):
        return cls(1, ((v, 1),))

    def __mul__(self, other):
        if isinstance(other, int):
            return Monomial(self.coeff * other, self.exps)
        table = dict(self.exps)
        for v, e in other.exps:
            table[v] = table.get(v, 0) + e
        return Monomial(self.coeff * other.coeff, table)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, Monomial)
            and self.coeff == other.coeff
            and self.exps == other.exps
        )

    def __hash__(self):
        return hash((self.coeff, self.exps))

    def __repr__(self):
        if not self.coeff:
            return "0"
        factors = [_var_name(v) + (f"^{e}" if e > 1 else "") for v, e in self.exps]
        body = "*".join(factors)
        if not body:
            return str(self.coeff)
        if self.coeff == 1:
            return body
        if self.coeff == -1:
            return "-" + body
        return f"{self.coeff}*{body}"

    def evaluate(self, values):
        out = self.coeff
        for v, e in self.exps:
            out *= values[v] ** e
        return out


def _var_name(v):
    if v[0] == "a":
        return f"a{v[1]}{v[1] - 1}"
    return f"h{v[1]}{v[2]}"


class SymPolynomial:
    """Integer polynomial kept as ``{exponent table: coefficient}`` without zeros."""

    __slots__ = ("terms",)

    def __init__(self, monomials=()):
        terms = {}
        for mono in monomials:
            c = terms.get(mono.exps, 0) + mono.coeff
            if c:
                terms[mono.exps] = c
            else:
                terms.pop(mono.exps, None)
        self.terms = terms

    def monomials(self):
        return [Monomial(self.terms[k], k) for k in sorted(self.terms)]

    def __sub__(self, other):
        return SymPolynomial(
            self.monomials() + [Monomial(-c, k) for k, c in other.terms.items()]
        )

    def __eq__(self, other):
        return isinstance(other, SymPolynomial) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(repr(m) for m in self.monomials())

    def evaluate(self, values):
        return sum(Monomial(c, k).evaluate(values) for k, c in self.terms.items())


def _check_size(n):
    if not MIN_N <= n <= MAX_N:
        raise SizeOutOfRange(f"n must be in [{MIN_N}, {MAX_N}], got {n}")


def lam(p, q):
    """Multiplier at 1-based row ``p``, column ``q``.

    ``a_{p,p-1}`` on the first subdiagonal, ``a_{q+1,q} ... a_{p,p-1}``
    further down, and 1 on or above the diagonal.
    """
    if p - q < 1:
        return Monomial()
    return Monomial(1, {a_var(r): 1 for r in range(q + 1, p + 1)})


def build_lemma3_matrix(n):
    _check_size(n)
    return [[lam(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def build_lemma4_matrices(n):
    """``(A, B)``: ``A[i][j] = lam(i, j) h_ij`` and ``B[i][j] = lam(j, i) h_ij``."""
    _check_size(n)
    idx = range(1, n + 1)
    a = [[lam(i, j) * Monomial.var(h_var(i, j)) for j in idx] for i in idx]
    b = [[lam(j, i) * Monomial.var(h_var(i, j)) for j in idx] for i in idx]
    return a, b


def transpose(mat):
    return [list(col) for col in zip(*mat)]


def perm_term(sigma, mat):
    """Signed product ``sign(sigma) * prod(mat[i][sigma[i]])`` (0-based ``sigma``)."""
    term = Monomial(permutation_sign(sigma))
    for i, j in enumerate(sigma):
        term = term * mat[i][j]
    return term


def inverse_perm(sigma):
    inv = [0] * len(sigma)
    for i, j in enumerate(sigma):
        inv[j] = i
    return tuple(inv)


def sym_det(mat):
    n = len(mat)
    return SymPolynomial(perm_term(s, mat) for s in permutations(range(n)))


def check_lemma3(n):
    """Every term satisfies ``gamma_sigma == gamma_{sigma^-1} == delta_sigma``."""
    a = build_lemma3_matrix(n)
    at = transpose(a)
    for sigma in permutations(range(n)):
        g = perm_term(sigma, a)
        if g != perm_term(inverse_perm(sigma), a) or g != perm_term(sigma, at):
            return False
    return True


def check_lemma4(n):
    """Term-by-term equality of ``det(A)`` and ``det(B)``, then equality of the sums."""
    a, b = build_lemma4_matrices(n)
    for sigma in permutations(range(n)):
        if perm_term(sigma, a) != perm_term(sigma, b):
            return False
    return (sym_det(a) - sym_det(b)).is_zero()


def evaluate_matrix(mat, values):
    return [[entry.evaluate(values) for entry in row] for row in mat]
