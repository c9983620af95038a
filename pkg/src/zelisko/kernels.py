"""Backend selection for the brute-force kernels.

The compiled extension is used when it imports; otherwise (or when
``ZELISKO_PURE_PYTHON`` is set) the pure-Python twin takes over. Results are
identical; only speed differs. Both return numpy ``int64`` code arrays.
"""

import os

import numpy as np

from . import _kernels_py as python_impl

try:
    from . import _kernels as compiled_impl
except ImportError:  # extension not built
    compiled_impl = None

if compiled_impl is not None and not os.environ.get("ZELISKO_PURE_PYTHON"):
    impl = compiled_impl
    BACKEND = "compiled"
else:
    impl = python_impl
    BACKEND = "python"

MAX_N = python_impl.MAX_N


def _codes(values):
    return np.asarray(values, dtype=np.int64)


def det_mod(flat, n, m):
    return impl.det_mod(flat, n, m)


def oracle_member(flat, n, m, diag, bound):
    return impl.oracle_member(flat, n, m, diag, bound)


def enumerate_members(n, m, diag, bound):
    return _codes(impl.enumerate_members(n, m, diag, bound))


def sweep(n, m, diag, mult_gcd, bound):
    return tuple(_codes(x) for x in impl.sweep(n, m, diag, mult_gcd, bound))


def inverse_codes(codes, n, m):
    return _codes(impl.inverse_codes([int(c) for c in codes], n, m))


def product_codes(a_codes, b_codes, n, m):
    return _codes(
        impl.product_codes([int(c) for c in a_codes], [int(c) for c in b_codes], n, m)
    )


def witness_failures(codes, n, m, diag, mult, gen):
    return _codes(impl.witness_failures([int(c) for c in codes], n, m, diag, mult, gen))
