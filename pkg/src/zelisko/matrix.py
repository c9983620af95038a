"""Dense square matrices over R_m, divisor-chain diagonals, and Smith normal form."""

from dataclasses import dataclass
from itertools import permutations

from .euclid import ZZ
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    MalformedChain,
    MalformedInput,
    NotAUnit,
)
from .linsolve import generating_solution
from .residue import (
    Modulus,
    Residue,
    alpha_element,
    check_same,
    divides,
    invert_unit,
    is_unit_residue,
)

__all__ = [
    "MatrixRm",
    "DivisorChainPhi",
    "det",
    "is_invertible",
    "mat_mul",
    "inverse",
    "identity",
    "bareiss_det",
    "permutation_sign",
    "build_phi",
    "chain_quotient",
    "smith_normal_form",
    "phi_from_matrix",
]

# cofactor expansion up to this size, fraction-free elimination above it
COFACTOR_MAX_N = 4


class MatrixRm:
    """An ``n x n`` matrix of residues sharing one modulus."""

    __slots__ = ("n", "modulus", "rows")

    def __init__(self, rows, modulus):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square and non-empty")
        self.n = n
        self.modulus = modulus
        self.rows = tuple(tuple(modulus(x) for x in r) for r in rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, MatrixRm)
            and self.modulus == other.modulus
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(self.reps())

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"MatrixRm([{body}] mod {self.modulus.ring.format(self.modulus.m)})"

    def __matmul__(self, other):
        return mat_mul(self, other)

    def reps(self):
        return tuple(tuple(x.rep for x in r) for r in self.rows)

    def transpose(self):
        return MatrixRm(zip(*self.rows), self.modulus)

    def det(self):
        return det(self)

    def to_json(self):
        ring = self.modulus.ring
        out = {
            "mod": ring.to_json(self.modulus.m),
            "n": self.n,
            "rows": [[ring.to_json(x.rep) for x in r] for r in self.rows],
        }
        if ring != ZZ:
            out["p"] = ring.p
        return out

    @classmethod
    def from_json(cls, obj, ring=ZZ):
        try:
            modulus = Modulus(ring.from_json(obj["mod"]), ring)
            rows = [[ring.from_json(x) for x in r] for r in obj["rows"]]
            n = obj.get("n", len(rows))
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad matrix JSON: {exc}") from exc
        if n != len(rows):
            raise MalformedInput(f"declared n={n} but got {len(rows)} rows")
        return cls(rows, modulus)


def identity(n, modulus):
    return MatrixRm(
        [[modulus.one if i == j else modulus.zero for j in range(n)] for i in range(n)],
        modulus,
    )


def mat_mul(a, b):
    check_same(a.modulus, b.modulus)
    if a.n != b.n:
        raise DimensionMismatch(f"{a.n}x{a.n} times {b.n}x{b.n}")
    cols = list(zip(*b.rows))
    out = []
    for row in a.rows:
        out_row = []
        for col in cols:
            acc = a.modulus.zero
            for x, y in zip(row, col):
                acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return MatrixRm(out, a.modulus)


def permutation_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _cofactor_det(rows, modulus):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = modulus.zero
    for j, pivot in enumerate(rows[0]):
        if not pivot:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = pivot * _cofactor_det(minor, modulus)
        total = total - term if j % 2 else total + term
    return total


def bareiss_det(rows, ring):
    """Exact determinant of a square matrix over a Euclidean domain."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if ring.is_zero(a[k][k]):
            swap = next((i for i in range(k + 1, n) if not ring.is_zero(a[i][k])), None)
            if swap is None:
                return ring.zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ring.sub(ring.mul(a[i][j], a[k][k]), ring.mul(a[i][k], a[k][j]))
                a[i][j] = ring.exact_div(num, prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else ring.neg(d)


def det(m):
    """Determinant in R_m (cofactor expansion for small n, lifted Bareiss above)."""
    if m.n <= COFACTOR_MAX_N:
        return _cofactor_det([list(r) for r in m.rows], m.modulus)
    return m.modulus(bareiss_det(m.reps(), m.modulus.ring))


def permutation_det(m):
    """Leibniz-formula determinant; exponential, used as a cross-check."""
    total = m.modulus.zero
    for perm in permutations(range(m.n)):
        term = m.modulus.one
        for i, j in enumerate(perm):
            term = term * m.rows[i][j]
        total = total + term if permutation_sign(perm) > 0 else total - term
    return total


def is_invertible(m):
    return is_unit_residue(det(m))


def inverse(m):
    """Adjugate times the inverse determinant."""
    d = det(m)
    if not is_unit_residue(d):
        raise NotAUnit("matrix is not invertible over R_m")
    d_inv = invert_unit(d)
    n = m.n
    if n == 1:
        return MatrixRm([[d_inv]], m.modulus)
    rows = [list(r) for r in m.rows]
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1 :] for k, r in enumerate(rows) if k != i]
            cof = det(MatrixRm(minor, m.modulus))
            if (i + j) % 2:
                cof = -cof
            out[j][i] = cof * d_inv
    return MatrixRm(out, m.modulus)


@dataclass(frozen=True)
class DivisorChainPhi:
    """``diag(1,...,1, phi_t,...,phi_k, 0,...,0)`` with its fixed quotient tables.

    ``adj_quot[i]`` is the pinned generating solution of
    ``chain[i] * x = chain[i+1]``; ``alpha_table[i]`` generates ``Ann(chain[i])``.
    Leading units of the supplied diagonal are stored in ``leading_units`` and
    replaced by 1.
    """

    modulus: Modulus
    n: int
    ones_count: int
    chain: tuple
    zeros_count: int
    adj_quot: tuple
    alpha_table: tuple
    leading_units: tuple = ()

    @property
    def chain_start(self):
        return self.ones_count

    @property
    def chain_end(self):
        return self.ones_count + len(self.chain)

    @property
    def t(self):
        return self.ones_count + 1

    @property
    def k(self):
        return self.ones_count + len(self.chain)

    def diag(self):
        m = self.modulus
        return (m.one,) * self.ones_count + self.chain + (m.zero,) * self.zeros_count

    def value(self, i):
        if i < self.ones_count:
            return self.modulus.one
        if i < self.chain_end:
            return self.chain[i - self.ones_count]
        return self.modulus.zero

    def alpha(self, i):
        return self.alpha_table[i - self.ones_count]

    def as_matrix(self):
        d = self.diag()
        zero = self.modulus.zero
        return MatrixRm(
            [[d[i] if i == j else zero for j in range(self.n)] for i in range(self.n)],
            self.modulus,
        )

    def to_json(self):
        ring = self.modulus.ring
        out = {"mod": ring.to_json(self.modulus.m), "diag": [ring.to_json(x.rep) for x in self.diag()]}
        if ring != ZZ:
            out["p"] = ring.p
        return out

    @classmethod
    def from_json(cls, obj, ring=ZZ):
        try:
            modulus = Modulus(ring.from_json(obj["mod"]), ring)
            diag = [modulus(ring.from_json(x)) for x in obj["diag"]]
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad diagonal JSON: {exc}") from exc
        return build_phi(len(diag), diag)


def build_phi(n, diagonal):
    diagonal = list(diagonal)
    if len(diagonal) != n or n < 1:
        raise MalformedChain(f"expected {n} diagonal entries, got {len(diagonal)}")
    modulus = diagonal[0].modulus
    for d in diagonal:
        check_same(d.modulus, modulus)

    i = 0
    while i < n and is_unit_residue(diagonal[i]):
        i += 1
    leading = tuple(diagonal[:i])
    chain_start = i
    while i < n and diagonal[i]:
        if is_unit_residue(diagonal[i]):
            raise MalformedChain(f"unit {diagonal[i]} at position {i} inside the chain")
        i += 1
    chain = tuple(diagonal[chain_start:i])
    for j in range(i, n):
        if diagonal[j]:
            raise MalformedChain(f"non-zero entry {diagonal[j]} at position {j} after a zero")
    for j in range(len(chain) - 1):
        if not divides(chain[j], chain[j + 1]):
            raise MalformedChain(
                f"{chain[j]} does not divide {chain[j + 1]} "
                f"(positions {chain_start + j}, {chain_start + j + 1})"
            )

    adj = tuple(generating_solution(chain[j], chain[j + 1]) for j in range(len(chain) - 1))
    alphas = tuple(alpha_element(c) for c in chain)
    return DivisorChainPhi(
        modulus=modulus,
        n=n,
        ones_count=chain_start,
        chain=chain,
        zeros_count=n - i,
        adj_quot=adj,
        alpha_table=alphas,
        leading_units=leading,
    )


def chain_quotient(phi, p, q):
    """Composite quotient for diagonal positions ``q < p`` (0-based) inside the chain.

    The product of adjacent quotients from ``q`` up to ``p``; a generating
    solution of ``phi_q * x = phi_p``.
    """
    lo, hi = phi.chain_start, phi.chain_end
    if not (lo <= q < p < hi):
        raise IndexOutOfRange(f"need {lo} <= q < p < {hi}, got q={q}, p={p}")
    out = phi.modulus.one
    for i in range(q - lo, p - lo):
        out = out * phi.adj_quot[i]
    return out


def smith_normal_form(a, ring=ZZ):
    """Return ``(U, D, V)`` with ``U*A*V = D`` over the domain itself.

    ``D`` is diagonal with canonical entries ``d_1 | d_2 | ...``; ``U`` and
    ``V`` are invertible over the domain. Matrices are lists of lists of
    domain elements.
    """
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionMismatch("smith_normal_form expects a square matrix")
    d = [list(r) for r in a]
    u = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    v = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]

    def add_row(dst, src, factor):
        for mat in (d, u):
            mat[dst] = [ring.add(x, ring.mul(factor, y)) for x, y in zip(mat[dst], mat[src])]

    def add_col(dst, src, factor):
        for mat in (d, v):
            for r in mat:
                r[dst] = ring.add(r[dst], ring.mul(factor, r[src]))

    for k in range(n):
        while True:
            best = None
            for i in range(k, n):
                for j in range(k, n):
                    if not ring.is_zero(d[i][j]) and (
                        best is None or ring.norm(d[i][j]) < ring.norm(d[best[0]][best[1]])
                    ):
                        best = (i, j)
            if best is None:
                break
            i, j = best
            for mat in (d, u):
                mat[k], mat[i] = mat[i], mat[k]
            for mat in (d, v):
                for r in mat:
                    r[k], r[j] = r[j], r[k]

            pivot = d[k][k]
            clean = True
            for i in range(k + 1, n):
                if not ring.is_zero(d[i][k]):
                    q, r = ring.divmod(d[i][k], pivot)
                    add_row(i, k, ring.neg(q))
                    clean = clean and ring.is_zero(r)
            for j in range(k + 1, n):
                if not ring.is_zero(d[k][j]):
                    q, r = ring.divmod(d[k][j], pivot)
                    add_col(j, k, ring.neg(q))
                    clean = clean and ring.is_zero(r)
            if not clean:
                continue
            bad = next(
                (
                    i
                    for i in range(k + 1, n)
                    for j in range(k + 1, n)
                    if not ring.divides(pivot, d[i][j])
                ),
                None,
            )
            if bad is None:
                break
            add_row(k, bad, ring.one)

        if not ring.is_zero(d[k][k]):
            _, unit = ring.canonical_associate(d[k][k])
            inv = ring.unit_inverse(unit)
            for mat in (d, u):
                mat[k] = [ring.mul(inv, x) for x in mat[k]]
    return u, d, v


def phi_from_matrix(a, modulus):
    """Reduce the Smith diagonal of ``a`` (over R) into a :class:`DivisorChainPhi`."""
    _, d, _ = smith_normal_form(a, modulus.ring)
    return build_phi(len(d), [modulus(d[i][i]) for i in range(len(d))])
