"""Pure-Python twin of the compiled ``_kernels`` extension.

All routines work on ``Z_m`` with matrices flattened row-major into lists of
ints, and on integer codes ``sum(p_ij * m**(i*n + j))``. Return conventions
match the extension exactly.
"""

from itertools import permutations, product
from math import gcd

MAX_N = 4


def _perm_table(n):
    table = []
    for perm in permutations(range(n)):
        inversions = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        table.append((perm, -1 if inversions % 2 else 1))
    return table


_PERMS = {n: _perm_table(n) for n in range(1, MAX_N + 1)}


def det_mod(flat, n, m):
    if n not in _PERMS:
        raise ValueError("kernel supports 1 <= n <= 4")
    total = 0
    for perm, sign in _PERMS[n]:
        term = 1
        for i in range(n):
            term = term * flat[i * n + perm[i]] % m
            if not term:
                break
        total += sign * term
    return total % m


def _decode(code, n, m):
    flat = []
    for _ in range(n * n):
        code, r = divmod(code, m)
        flat.append(r)
    return flat


def _encode(flat, m):
    code = 0
    for x in reversed(flat):
        code = code * m + x
    return code


def oracle_member(flat, n, m, diag, bound):
    """1 if some invertible S solves H*Phi = Phi*S, 0 if none, -1 past ``bound``."""
    if gcd(det_mod(flat, n, m), m) != 1:
        return 0
    cands = []
    total = 1
    for i in range(n):
        for j in range(n):
            target = diag[j] * flat[i * n + j] % m
            opts = [s for s in range(m) if (diag[i] * s - target) % m == 0]
            if not opts:
                return 0
            total = min(total * len(opts), bound + 1)
            cands.append(opts)
    if total > bound:
        return -1
    for s in product(*cands):
        if gcd(det_mod(s, n, m), m) == 1:
            return 1
    return 0


def _all_flats(n, m):
    # odometer with entry 0 fastest, so codes come out in increasing order
    for flat in product(range(m), repeat=n * n):
        yield flat[::-1]


def enumerate_members(n, m, diag, bound):
    out = []
    for code, flat in enumerate(_all_flats(n, m)):
        res = oracle_member(flat, n, m, diag, bound)
        if res < 0:
            raise OverflowError("oracle bound exceeded")
        if res:
            out.append(code)
    return out


def sweep(n, m, diag, mult_gcd, bound):
    """Classify every matrix by the oracle, the entrywise test and the block test.

    Returns three lists of codes. ``mult_gcd[i*n + j]`` (for ``i > j``) is
    ``gcd(multiplier, m)``, so the block test is ``p_ij % mult_gcd == 0``.
    """
    g = [gcd(d, m) for d in diag]
    oracle, entry, struct = [], [], []
    for code, flat in enumerate(_all_flats(n, m)):
        if gcd(det_mod(flat, n, m), m) != 1:
            continue
        if all(
            diag[j] * flat[i * n + j] % g[i] == 0 for i in range(n) for j in range(n)
        ):
            entry.append(code)
        if all(flat[i * n + j] % mult_gcd[i * n + j] == 0 for i in range(n) for j in range(i)):
            struct.append(code)
        res = oracle_member(flat, n, m, diag, bound)
        if res < 0:
            raise OverflowError("oracle bound exceeded")
        if res:
            oracle.append(code)
    return oracle, entry, struct


def _inverse_flat(flat, n, m):
    d = det_mod(flat, n, m)
    if gcd(d, m) != 1:
        return None
    d_inv = pow(d, -1, m)
    if n == 1:
        return [d_inv]
    out = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            minor = [
                flat[r * n + c] for r in range(n) if r != i for c in range(n) if c != j
            ]
            cof = det_mod(minor, n - 1, m)
            if (i + j) % 2:
                cof = -cof
            out[j * n + i] = cof * d_inv % m
    return out


def inverse_codes(codes, n, m):
    """Codes of the inverses; -1 marks a non-invertible input."""
    out = []
    for code in codes:
        inv = _inverse_flat(_decode(int(code), n, m), n, m)
        out.append(-1 if inv is None else _encode(inv, m))
    return out


def product_codes(a_codes, b_codes, n, m):
    out = []
    for ca, cb in zip(a_codes, b_codes):
        a = _decode(int(ca), n, m)
        b = _decode(int(cb), n, m)
        c = [
            sum(a[i * n + k] * b[k * n + j] for k in range(n)) % m
            for i in range(n)
            for j in range(n)
        ]
        out.append(_encode(c, m))
    return out


def witness_failures(codes, n, m, diag, mult, gen):
    """Codes whose transposed-cofactor witness fails ``H*Phi == Phi*S`` or ``det(S) == det(H)``.

    ``mult[i*n + j]`` is the multiplier for ``i > j`` and ``gen[(i*n + j)*m + p]``
    the cofactor ``h_ij`` for entry value ``p`` (-1 when there is none).
    """
    bad = []
    for code in codes:
        h = _decode(int(code), n, m)
        s = [gen[pos * m + h[pos]] for pos in range(n * n)]
        if min(s) < 0:
            bad.append(code)
            continue
        for i in range(n):
            for j in range(i + 1, n):
                s[i * n + j] = mult[j * n + i] * s[i * n + j] % m
        ok = all(
            (h[i * n + j] * diag[j] - diag[i] * s[i * n + j]) % m == 0
            for i in range(n)
            for j in range(n)
        )
        if not ok or det_mod(s, n, m) != det_mod(h, n, m):
            bad.append(code)
    return bad
