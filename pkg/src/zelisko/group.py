"""Membership in the Zelisko group G_Phi = {H in GL_n(R_m) : H*Phi = Phi*S, S in GL_n(R_m)}.

Rows and columns split into three blocks by the diagonal of ``Phi``: the
leading ones (block 1), the divisor chain (block 2) and the trailing zeros
(block 3). An entry ``p_ij`` strictly below the diagonal must be a multiple of
``multiplier(phi, i, j)``:

=========  ================================
block      multiplier
=========  ================================
H_21       ``phi_i``
H_22       ``[[phi_i / phi_j]]`` (composite quotient)
H_32       ``alpha_j``
H_31       ``0`` (the block vanishes)
H_11/H_33  ``1`` (unconstrained)
=========  ================================

Each multiplier is the product of the "links" between consecutive diagonal
positions from ``j`` to ``i``, which is what lets the witness ``S`` reuse the
same cofactors transposed and keep ``det(S) == det(H)``.
"""

import itertools
import math
import random
from dataclasses import dataclass, field

from . import kernels
from .errors import (
    DimensionMismatch,
    NotInvertible,
    RingTooLarge,
    SamplingExhausted,
    StructureViolation,
    Unsolvable,
)
from .euclid import ZZ
from .linsolve import generating_solution
from .matrix import MatrixRm, chain_quotient, det, is_invertible
from .residue import check_same, divides, is_unit_residue

__all__ = [
    "BlockProfile",
    "StructuredMember",
    "block_profile",
    "multiplier",
    "is_member",
    "find_violation",
    "check_structure",
    "construct_witness",
    "sample_member",
    "oracle_is_member",
    "enumerate_members",
    "member_codes",
    "witness_tables",
    "multiplier_gcds",
    "encode",
    "decode",
    "ENUMERATE_MAX_N",
    "ENUMERATE_MAX_RING",
    "ORACLE_BOUND",
]

ENUMERATE_MAX_N = 3
ENUMERATE_MAX_RING = 12
ORACLE_BOUND = 10**6


@dataclass(frozen=True)
class BlockProfile:
    """Case tag and 0-based index ranges of the three diagonal blocks.

    ``t`` and ``k`` follow the 1-based convention of the characterization
    (chain occupies positions ``t..k``); ``s`` is the ones/zeros split for
    case ``"v"`` and ``None`` otherwise.
    """

    case: str
    n: int
    t: int
    k: int
    s: object
    ones: range
    chain: range
    zeros: range

    def block_of(self, i):
        if i in self.ones:
            return 1
        if i in self.chain:
            return 2
        return 3

    def block_name(self, i, j):
        return f"H_{self.block_of(i)}{self.block_of(j)}"

    def blocks(self):
        parts = {1: self.ones, 2: self.chain, 3: self.zeros}
        return {
            f"H_{a}{b}": (parts[a], parts[b])
            for a in (1, 2, 3)
            for b in (1, 2, 3)
            if len(parts[a]) and len(parts[b])
        }


def block_profile(phi):
    ones = range(0, phi.chain_start)
    chain = range(phi.chain_start, phi.chain_end)
    zeros = range(phi.chain_end, phi.n)
    t, k, n = phi.t, phi.k, phi.n
    s = None
    if not chain:
        case, s = "v", phi.ones_count
    elif t > 1 and k < n:
        case = "i"
    elif t == 1 and k < n:
        case = "ii"
    elif t == 1:
        case = "iii"
    else:
        case = "iv"
    return BlockProfile(case, n, t, k, s, ones, chain, zeros)


def multiplier(phi, i, j):
    """Required factor of ``H[i, j]`` for ``i > j`` (see module table)."""
    if i <= j:
        raise ValueError("multiplier is defined strictly below the diagonal")
    m = phi.modulus
    lo, hi = phi.chain_start, phi.chain_end
    bi = 1 if i < lo else (2 if i < hi else 3)
    bj = 1 if j < lo else (2 if j < hi else 3)
    if bi == bj and bi != 2:
        return m.one
    if (bi, bj) == (2, 1):
        return phi.value(i)
    if (bi, bj) == (2, 2):
        return chain_quotient(phi, i, j)
    if (bi, bj) == (3, 2):
        return phi.alpha(j)
    return m.zero  # (3, 1)


@dataclass(eq=False)
class StructuredMember:
    """An accepted ``H`` with its cofactors ``h`` and witness ``S``.

    Two members compare equal when their ``H`` agree; ``h`` is only fixed up
    to annihilators.
    """

    H: MatrixRm
    profile: BlockProfile
    h: tuple
    S: MatrixRm = field(default=None)

    def __eq__(self, other):
        return isinstance(other, StructuredMember) and self.H == other.H

    def __hash__(self):
        return hash(self.H)


def _check_inputs(H, phi):
    check_same(H.modulus, phi.modulus)
    if H.n != phi.n:
        raise DimensionMismatch(f"H is {H.n}x{H.n} but Phi has size {phi.n}")


def find_violation(H, phi):
    """First entry ``(i, j)`` where ``phi_i * s = phi_j * p_ij`` is unsolvable.

    Returns ``"det"`` when ``H`` is not invertible and ``None`` for members.
    """
    _check_inputs(H, phi)
    if not is_invertible(H):
        return "det"
    d = phi.diag()
    for i in range(H.n):
        for j in range(H.n):
            if not divides(d[i], d[j] * H.rows[i][j]):
                return (i, j)
    return None


def is_member(H, phi):
    return find_violation(H, phi) is None


def check_structure(H, phi):
    """Factor ``H`` block by block; raise if it is not of the required form."""
    _check_inputs(H, phi)
    if not is_invertible(H):
        raise NotInvertible(f"det(H) = {det(H)} is not a unit")
    profile = block_profile(phi)
    zero = phi.modulus.zero
    n = H.n
    h = [list(r) for r in H.rows]
    for i in range(n):
        for j in range(i):
            mult = multiplier(phi, i, j)
            p = H.rows[i][j]
            if mult == 1:
                continue
            if not p or not mult:
                # a zero entry keeps a zero cofactor, so H = I gives S = I
                if p:
                    raise StructureViolation(profile.block_name(i, j), (i, j))
                h[i][j] = zero
                continue
            try:
                h[i][j] = generating_solution(mult, p)
            except Unsolvable:
                raise StructureViolation(
                    profile.block_name(i, j),
                    (i, j),
                    f"entry {(i, j)} = {p} is not a multiple of {mult} "
                    f"({profile.block_name(i, j)})",
                ) from None
    h = tuple(tuple(r) for r in h)
    return StructuredMember(H, profile, h, _witness(h, phi))


def _witness(h, phi):
    n = phi.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i < j:
                row.append(multiplier(phi, j, i) * h[i][j])
            else:
                row.append(h[i][j])
        rows.append(row)
    return MatrixRm(rows, phi.modulus)


def construct_witness(sm, phi):
    """``S`` with ``H*Phi == Phi*S``: transposed multipliers above the diagonal."""
    return _witness(sm.h, phi)


def _assemble(h, phi):
    n = phi.n
    return MatrixRm(
        [
            [multiplier(phi, i, j) * h[i][j] if i > j else h[i][j] for j in range(n)]
            for i in range(n)
        ],
        phi.modulus,
    )


def sample_member(phi, seed=None, max_tries=1000):
    """Random element of G_Phi: uniform cofactors, retried until ``det`` is a unit."""
    rng = random.Random(seed)
    modulus = phi.modulus
    profile = block_profile(phi)
    n = phi.n
    for _ in range(max(1, max_tries)):
        h = [[modulus.random(rng) for _ in range(n)] for _ in range(n)]
        for i in profile.zeros:
            for j in profile.ones:
                h[i][j] = modulus.zero
        H = _assemble(h, phi)
        if is_unit_residue(det(H)):
            h = tuple(tuple(r) for r in h)
            return StructuredMember(H, profile, h, _witness(h, phi))
    raise SamplingExhausted(f"no invertible sample in {max_tries} tries")


# -- brute force ---------------------------------------------------------


def _int_kernel_ok(phi):
    return phi.modulus.ring == ZZ and phi.n <= kernels.MAX_N and phi.modulus.m < 2**31


def _diag_ints(phi):
    return [x.rep for x in phi.diag()]


def encode(H):
    """Integer code of a matrix over Z_m: ``sum(p_ij * m**(i*n + j))``."""
    m = H.modulus.m
    code = 0
    for x in reversed([x.rep for r in H.rows for x in r]):
        code = code * m + x
    return code


def decode(code, n, modulus):
    m = modulus.m
    flat = []
    for _ in range(n * n):
        code, r = divmod(int(code), m)
        flat.append(r)
    return MatrixRm([flat[i * n : (i + 1) * n] for i in range(n)], modulus)


def oracle_is_member(H, phi, bound=ORACLE_BOUND):
    """Decide membership straight from the definition.

    Every ``s_ij`` is drawn from ``{s : phi_i * s == phi_j * p_ij}`` (found
    by scanning R_m) and each combination is tested for invertibility.
    """
    _check_inputs(H, phi)
    if _int_kernel_ok(phi):
        flat = [x.rep for r in H.rows for x in r]
        res = kernels.oracle_member(flat, H.n, H.modulus.m, _diag_ints(phi), bound)
        if res < 0:
            raise RingTooLarge(f"more than {bound} candidate witnesses")
        return bool(res)

    modulus = phi.modulus
    if modulus.size > bound:
        raise RingTooLarge(f"|R_m| = {modulus.size} exceeds bound {bound}")
    if not is_invertible(H):
        return False
    d = phi.diag()
    n = H.n
    elems = list(modulus.elements())
    cands = []
    total = 1
    for i in range(n):
        for j in range(n):
            target = d[j] * H.rows[i][j]
            opts = [s for s in elems if d[i] * s == target]
            if not opts:
                return False
            total *= len(opts)
            cands.append(opts)
    if total > bound:
        raise RingTooLarge(f"{total} candidate witnesses exceed bound {bound}")
    for flat in itertools.product(*cands):
        S = MatrixRm([flat[i * n : (i + 1) * n] for i in range(n)], modulus)
        if is_invertible(S):
            return True
    return False


def _check_enumeration_bounds(phi):
    if phi.n > ENUMERATE_MAX_N or phi.modulus.size > ENUMERATE_MAX_RING:
        raise RingTooLarge(
            f"enumeration needs n <= {ENUMERATE_MAX_N} and |R_m| <= {ENUMERATE_MAX_RING}"
        )


def multiplier_gcds(phi):
    """Flat ``gcd(multiplier, m)`` table (1 on and above the diagonal) for the block test."""
    n, m = phi.n, phi.modulus.m
    return [
        math.gcd(multiplier(phi, i, j).rep, m) if i > j else 1
        for i in range(n)
        for j in range(n)
    ]


def witness_tables(phi):
    """Flat ``(mult, gen)`` tables for :func:`kernels.witness_failures`.

    ``gen[(i*n + j)*m + p]`` is the cofactor :func:`check_structure` extracts
    from entry value ``p`` at ``(i, j)``, or -1 when that entry is rejected.
    """
    if not _int_kernel_ok(phi):
        raise ValueError("witness tables are only defined over Z_m")
    modulus, n, m = phi.modulus, phi.n, phi.modulus.m
    mult, gen = [], []
    for i in range(n):
        for j in range(n):
            mu = multiplier(phi, i, j) if i > j else modulus.one
            mult.append(mu.rep)
            for p in range(m):
                if mu == 1 or p == 0:
                    gen.append(p)
                elif not mu:
                    gen.append(-1)
                else:
                    try:
                        gen.append(generating_solution(mu, modulus(p)).rep)
                    except Unsolvable:
                        gen.append(-1)
    return mult, gen


def member_codes(phi):
    """Sorted codes of all oracle members over Z_m (numpy int64 array)."""
    _check_enumeration_bounds(phi)
    if not _int_kernel_ok(phi):
        raise ValueError("member codes are only defined over Z_m")
    return kernels.enumerate_members(phi.n, phi.modulus.m, _diag_ints(phi), ORACLE_BOUND)


def enumerate_members(phi):
    """Yield every member of G_Phi, in canonical order, as decided by the oracle."""
    _check_enumeration_bounds(phi)
    modulus = phi.modulus
    n = phi.n
    if _int_kernel_ok(phi):
        for code in member_codes(phi):
            yield decode(code, n, modulus)
        return
    elems = list(modulus.elements())
    for flat in itertools.product(elems, repeat=n * n):
        # canonical order: the last entry varies slowest, matching the int codes
        flat = flat[::-1]
        H = MatrixRm([flat[i * n : (i + 1) * n] for i in range(n)], modulus)
        if oracle_is_member(H, phi):
            yield H
