"""Compiled vs pure-Python kernel timings.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row times the same call on both backends and checks that the outputs
agree before reporting the speedup.
"""

import argparse
import random
import time

from zelisko import _kernels_py, group
from zelisko.kernels import compiled_impl
from zelisko.matrix import build_phi
from zelisko.residue import Modulus


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    rng = random.Random(0)
    m, diag = 4, (1, 2, 0)
    z = Modulus(m)
    phi = build_phi(3, [z(x) for x in diag])
    d = [x.rep for x in phi.diag()]
    mg = group.multiplier_gcds(phi)
    mult, gen = group.witness_tables(phi)
    members = _kernels_py.enumerate_members(3, m, d, group.ORACLE_BOUND)
    flats = [[rng.randrange(97) for _ in range(16)] for _ in range(20000)]
    codes = [rng.randrange(8**9) for _ in range(20000)]

    yield "det_mod 4x4 (20k)", lambda k: [k.det_mod(f, 4, 97) for f in flats]
    yield "inverse_codes Z_8 n=3 (20k)", lambda k: k.inverse_codes(codes, 3, 8)
    yield "product_codes Z_8 n=3 (20k)", lambda k: k.product_codes(codes, codes[::-1], 3, 8)
    yield "sweep Z_4 diag(1,2,0)", lambda k: k.sweep(3, m, d, mg, group.ORACLE_BOUND)
    yield "witness_failures Z_4 diag(1,2,0)", lambda k: k.witness_failures(members, 3, m, d, mult, gen)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if compiled_impl is None:
        raise SystemExit("compiled extension not built; run `python3 setup.py build_ext --inplace`")

    print(f"{'kernel':36s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name, call in cases():
        t_py, out_py = best_of(lambda: call(_kernels_py), args.repeat)
        t_c, out_c = best_of(lambda: call(compiled_impl), args.repeat)
        if out_py != out_c:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:36s} {t_py:10.4f} {t_c:11.5f} {t_py / t_c:7.0f}x")


if __name__ == "__main__":
    main()
