# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for brute-force work over Z_m (see ``_kernels_py`` for the twin)."""

from itertools import permutations

from libc.stdlib cimport free, malloc

cdef enum:
    NMAX = 4

MAX_N = NMAX


cdef int _perm_data[NMAX + 1][24][NMAX]
cdef int _perm_sign[NMAX + 1][24]
cdef int _perm_count[NMAX + 1]


def _init_perms():
    cdef int n, p, i, inv
    for n in range(1, NMAX + 1):
        p = 0
        for perm in permutations(range(n)):
            inv = 0
            for i in range(n):
                for j in range(i + 1, n):
                    if perm[i] > perm[j]:
                        inv += 1
            for i in range(n):
                _perm_data[n][p][i] = perm[i]
            _perm_sign[n][p] = -1 if inv % 2 else 1
            p += 1
        _perm_count[n] = p


_init_perms()


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef long long _det(const long long* a, int n, long long m) noexcept nogil:
    cdef long long total = 0, term
    cdef int p, i
    for p in range(_perm_count[n]):
        term = 1
        for i in range(n):
            term = term * a[i * n + _perm_data[n][p][i]] % m
            if term == 0:
                break
        if _perm_sign[n][p] > 0:
            total += term
        else:
            total -= term
    total %= m
    if total < 0:
        total += m
    return total


cdef struct Workspace:
    long long* cand
    int* ncand
    int* idx
    long long* s


cdef int _ws_alloc(Workspace* ws, int n, long long m) except -1:
    cdef int nn = n * n
    ws.cand = <long long*> malloc(nn * m * sizeof(long long))
    ws.ncand = <int*> malloc(nn * sizeof(int))
    ws.idx = <int*> malloc(nn * sizeof(int))
    ws.s = <long long*> malloc(nn * sizeof(long long))
    if not ws.cand or not ws.ncand or not ws.idx or not ws.s:
        _ws_free(ws)
        raise MemoryError()
    return 0


cdef void _ws_free(Workspace* ws) noexcept:
    free(ws.cand)
    free(ws.ncand)
    free(ws.idx)
    free(ws.s)
    ws.cand = NULL
    ws.ncand = NULL
    ws.idx = NULL
    ws.s = NULL


cdef int _oracle(const long long* h, int n, long long m, const long long* diag,
                 long long bound, Workspace* ws) noexcept nogil:
    cdef int nn = n * n
    cdef int pos, i, j, c, k
    cdef long long x, target, total = 1
    if _gcd(_det(h, n, m), m) != 1:
        return 0
    for pos in range(nn):
        i = pos // n
        j = pos % n
        target = diag[j] * h[pos] % m
        c = 0
        for x in range(m):
            if (diag[i] * x - target) % m == 0:
                ws.cand[pos * m + c] = x
                c += 1
        if c == 0:
            return 0
        ws.ncand[pos] = c
        total = total * c
        if total > bound:
            total = bound + 1
    if total > bound:
        return -1
    for pos in range(nn):
        ws.idx[pos] = 0
        ws.s[pos] = ws.cand[pos * m]
    while True:
        if _gcd(_det(ws.s, n, m), m) == 1:
            return 1
        # advance the last position fastest (same order as itertools.product)
        k = nn - 1
        while k >= 0:
            ws.idx[k] += 1
            if ws.idx[k] < ws.ncand[k]:
                ws.s[k] = ws.cand[k * m + ws.idx[k]]
                break
            ws.idx[k] = 0
            ws.s[k] = ws.cand[k * m]
            k -= 1
        if k < 0:
            return 0


cdef int _load(long long* dst, object flat, int nn) except -1:
    cdef int i
    for i in range(nn):
        dst[i] = flat[i]
    return 0


def det_mod(flat, int n, long long m):
    cdef long long a[NMAX * NMAX]
    if n < 1 or n > NMAX:
        raise ValueError("kernel supports 1 <= n <= 4")
    _load(a, flat, n * n)
    return _det(a, n, m)


def oracle_member(flat, int n, long long m, diag, long long bound):
    """1 if some invertible S solves H*Phi = Phi*S, 0 if none, -1 past ``bound``."""
    cdef long long h[NMAX * NMAX]
    cdef long long d[NMAX]
    cdef Workspace ws
    cdef int res
    if n < 1 or n > NMAX:
        raise ValueError("kernel supports 1 <= n <= 4")
    _load(h, flat, n * n)
    _load(d, diag, n)
    _ws_alloc(&ws, n, m)
    try:
        res = _oracle(h, n, m, d, bound, &ws)
    finally:
        _ws_free(&ws)
    return res


cdef long long _total_codes(int n, long long m) except -1:
    cdef long long total = 1
    cdef int i
    for i in range(n * n):
        if total > (1LL << 62) // m:
            raise OverflowError("m**(n*n) does not fit in 62 bits")
        total *= m
    return total


cdef inline void _advance(long long* h, int nn, long long m) noexcept nogil:
    cdef int k = 0
    while k < nn:
        h[k] += 1
        if h[k] < m:
            return
        h[k] = 0
        k += 1


def enumerate_members(int n, long long m, diag, long long bound):
    cdef long long h[NMAX * NMAX]
    cdef long long d[NMAX]
    cdef long long code, total
    cdef int nn = n * n, i, res
    cdef Workspace ws
    if n < 1 or n > NMAX:
        raise ValueError("kernel supports 1 <= n <= 4")
    total = _total_codes(n, m)
    _load(d, diag, n)
    for i in range(nn):
        h[i] = 0
    out = []
    _ws_alloc(&ws, n, m)
    try:
        for code in range(total):
            res = _oracle(h, n, m, d, bound, &ws)
            if res < 0:
                raise OverflowError("oracle bound exceeded")
            if res:
                out.append(code)
            _advance(h, nn, m)
    finally:
        _ws_free(&ws)
    return out


def sweep(int n, long long m, diag, mult_gcd, long long bound):
    """Classify every matrix by the oracle, the entrywise test and the block test."""
    cdef long long h[NMAX * NMAX]
    cdef long long d[NMAX]
    cdef long long g[NMAX]
    cdef long long mg[NMAX * NMAX]
    cdef long long code, total
    cdef int nn = n * n, i, j, res
    cdef bint ok
    cdef Workspace ws
    if n < 1 or n > NMAX:
        raise ValueError("kernel supports 1 <= n <= 4")
    total = _total_codes(n, m)
    _load(d, diag, n)
    _load(mg, mult_gcd, nn)
    for i in range(n):
        g[i] = _gcd(d[i], m)
    for i in range(nn):
        h[i] = 0
    oracle, entry, struct = [], [], []
    _ws_alloc(&ws, n, m)
    try:
        for code in range(total):
            if _gcd(_det(h, n, m), m) == 1:
                ok = True
                for i in range(n):
                    for j in range(n):
                        if d[j] * h[i * n + j] % m % g[i] != 0:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    entry.append(code)
                ok = True
                for i in range(1, n):
                    for j in range(i):
                        if h[i * n + j] % mg[i * n + j] != 0:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    struct.append(code)
                res = _oracle(h, n, m, d, bound, &ws)
                if res < 0:
                    raise OverflowError("oracle bound exceeded")
                if res:
                    oracle.append(code)
            _advance(h, nn, m)
    finally:
        _ws_free(&ws)
    return oracle, entry, struct


cdef void _unpack(long long code, long long* a, int nn, long long m) noexcept nogil:
    cdef int i
    for i in range(nn):
        a[i] = code % m
        code //= m


cdef long long _pack(const long long* a, int nn, long long m) noexcept nogil:
    cdef long long code = 0
    cdef int i
    for i in range(nn - 1, -1, -1):
        code = code * m + a[i]
    return code


cdef long long _inverse(long long code, int n, long long m) noexcept nogil:
    cdef long long a[NMAX * NMAX]
    cdef long long out[NMAX * NMAX]
    cdef long long minor[NMAX * NMAX]
    cdef long long dt, dinv, cof, q, r0, r1, s0, s1, tmp
    cdef int nn = n * n, i, j, r, c, k
    _unpack(code, a, nn, m)
    dt = _det(a, n, m)
    if _gcd(dt, m) != 1:
        return -1
    # inverse of dt modulo m by extended Euclid
    r0 = dt
    r1 = m
    s0 = 1
    s1 = 0
    while r1:
        q = r0 // r1
        tmp = r0 - q * r1
        r0 = r1
        r1 = tmp
        tmp = s0 - q * s1
        s0 = s1
        s1 = tmp
    dinv = s0 % m
    if dinv < 0:
        dinv += m
    if n == 1:
        out[0] = dinv
        return _pack(out, 1, m)
    for i in range(n):
        for j in range(n):
            k = 0
            for r in range(n):
                if r == i:
                    continue
                for c in range(n):
                    if c == j:
                        continue
                    minor[k] = a[r * n + c]
                    k += 1
            cof = _det(minor, n - 1, m)
            if (i + j) % 2:
                cof = (m - cof) % m
            out[j * n + i] = cof * dinv % m
    return _pack(out, nn, m)


def inverse_codes(codes, int n, long long m):
    """Codes of the inverses; -1 marks a non-invertible input."""
    if n < 1 or n > NMAX:
        raise ValueError("kernel supports 1 <= n <= 4")
    return [_inverse(c, n, m) for c in codes]


def product_codes(a_codes, b_codes, int n, long long m):
    cdef long long a[NMAX * NMAX]
    cdef long long b[NMAX * NMAX]
    cdef long long c[NMAX * NMAX]
    cdef long long acc
    cdef int nn = n * n, i, j, k
    if n < 1 or n > NMAX:
        raise ValueError("kernel supports 1 <= n <= 4")
    out = []
    for ca, cb in zip(a_codes, b_codes):
        _unpack(ca, a, nn, m)
        _unpack(cb, b, nn, m)
        for i in range(n):
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = (acc + a[i * n + k] * b[k * n + j]) % m
                c[i * n + j] = acc
        out.append(_pack(c, nn, m))
    return out


def witness_failures(codes, int n, long long m, diag, mult, gen):
    """Codes whose transposed-cofactor witness fails ``H*Phi == Phi*S`` or ``det(S) == det(H)``.

    ``mult[i*n + j]`` is the multiplier for ``i > j`` and ``gen[(i*n + j)*m + p]``
    the cofactor ``h_ij`` for entry value ``p`` (-1 when there is none).
    """
    cdef long long h[NMAX * NMAX]
    cdef long long s[NMAX * NMAX]
    cdef long long d[NMAX]
    cdef long long mu[NMAX * NMAX]
    cdef int nn = n * n
    if n < 1 or n > NMAX:
        raise ValueError("kernel supports 1 <= n <= 4")
    _load(d, diag, n)
    _load(mu, mult, nn)
    cdef long long* table = <long long*> malloc(nn * m * sizeof(long long))
    if not table:
        raise MemoryError()
    bad = []
    try:
        _load(table, gen, nn * m)
        _witness_scan(codes, n, m, d, mu, table, h, s, bad)
    finally:
        free(table)
    return bad


cdef int _witness_scan(codes, int n, long long m, const long long* d, const long long* mu,
                        const long long* table, long long* h, long long* s, list bad) except -1:
    cdef long long code, x
    cdef int nn = n * n, i, j, pos
    cdef bint ok
    for code in codes:
        _unpack(code, h, nn, m)
        ok = True
        for pos in range(nn):
            x = table[pos * m + h[pos]]
            if x < 0:
                ok = False
                break
            s[pos] = x
        if ok:
            # s holds the cofactors; lift them above the diagonal
            for i in range(n):
                for j in range(i + 1, n):
                    s[i * n + j] = mu[j * n + i] * s[i * n + j] % m
            for i in range(n):
                for j in range(n):
                    if (h[i * n + j] * d[j] - d[i] * s[i * n + j]) % m != 0:
                        ok = False
            if ok and _det(s, n, m) != _det(h, n, m):
                ok = False
        if not ok:
            bad.append(code)
    return 0
