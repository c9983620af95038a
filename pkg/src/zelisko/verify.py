"""Self-check suite behind ``zelisko verify``.

Each check returns ``(name, ok, detail)``. Library functions are reached
through their modules at call time so a patched build is actually exercised.
"""

import random

from . import group, kernels, linsolve, matrix, residue, symdet
from .euclid import ZZ, PolynomialsModP
from .residue import Modulus

__all__ = ["run", "GRID", "LEMMA_RINGS"]

# (modulus, diagonal) pairs covering cases (i)-(v)
GRID = [
    (4, (2, 2)),
    (4, (2, 4)),
    (4, (1, 2)),
    (4, (2, 0)),
    (4, (1, 0)),
    (8, (2, 2)),
    (8, (2, 4)),
    (8, (1, 2)),
    (8, (2, 0)),
    (8, (1, 0)),
    (4, (1, 2, 0)),
    (8, (1, 2, 4)),
]


def LEMMA_RINGS():
    f2 = PolynomialsModP(2)
    return [
        Modulus(12),
        Modulus(36),
        Modulus(144),
        Modulus(f2.poly([0, 1, 0, 0, 1]), f2),  # x^4 + x
    ]


def _reps(values):
    return sorted(x.rep for x in values)


def _example1():
    z = Modulus(36)
    a, b = z(33), z(30)
    coset = linsolve.solution_coset(a, b)
    sols = _reps(linsolve.enumerate_solutions(coset))
    ann = _reps({residue.ann_generator(a) * t for t in z.elements()})
    checks = {
        "decompose(33)": tuple(residue.unit_decompose(a)) == (3, z(11)),
        "decompose(30)": tuple(residue.unit_decompose(b)) == (6, z(5)),
        "x0 = 14": linsolve.generating_solution(a, b) == 14,
        "x0 ~ 2": residue.associates(linsolve.generating_solution(a, b), z(2)),
        "solutions": sols == [2, 14, 26],
        "Ann(33)": ann == [0, 12, 24],
        "11^-1 = 23": residue.invert_unit(z(11)) == 23,
        "2 generating": linsolve.is_generating(a, b, z(2)),
    }
    bad = [k for k, v in checks.items() if not v]
    return "example 1 (Z_36)", not bad, "failed: " + ", ".join(bad) if bad else "8 vectors"


def _example2():
    z = Modulus(144)
    c1, c2 = z(4), z(8)
    ann8 = _reps({residue.ann_generator(c2) * t for t in z.elements()})
    sols = _reps(linsolve.enumerate_solutions(linsolve.solution_coset(c1, c2)))
    s_set = _reps(x for x in z.elements() if z(18) * x == 36)
    checks = {
        "ann_generator(8) = 18": residue.ann_generator(c2) == 18,
        "Ann(8)": ann8 == [0, 18, 36, 54, 72, 90, 108, 126],
        "Ann(4) = 36 Z_144": _reps({z(36) * t for t in z.elements()})
        == _reps(x for x in z.elements() if c1 * x == 0),
        "solutions of 4x = 8": sols == [2, 38, 74, 110],
        "all generating": all(linsolve.is_generating(c1, c2, z(x)) for x in sols),
        "S = 2 + 8Z": s_set == list(range(2, 144, 8)),
        "38 * 18 != 36": z(38) * 18 != 36,
        "38 solves 126x = 36": z(126) * 38 == 36,
        "pinned transfer": linsolve.alpha_transfer_check(c1, c2),
    }
    bad = [k for k, v in checks.items() if not v]
    return "example 2 (Z_144)", not bad, "failed: " + ", ".join(bad) if bad else "9 vectors"


def _random_divisor_pair(rng, modulus):
    while True:
        c1 = modulus.random(rng)
        c2 = c1 * modulus.random(rng)
        if c1 and c2:
            return c1, c2


def _lemma1(count, seed=1):
    rng = random.Random(seed)
    done = 0
    for modulus in LEMMA_RINGS():
        elems = list(modulus.elements())
        for _ in range(count):
            c1, c2 = _random_divisor_pair(rng, modulus)
            c3 = c2 * modulus.random(rng)
            while not c3:
                c3 = c2 * modulus.random(rng)
            g = linsolve.compose_generating(
                linsolve.generating_solution(c1, c2), linsolve.generating_solution(c2, c3)
            )
            if c1 * g != c3:
                return "lemma 1 battery", False, f"{g} does not solve {c1}x={c3}"
            ideal = {g * t for t in elems}
            if any(c1 * y == c3 and y not in ideal for y in elems):
                return "lemma 1 battery", False, f"{g} not generating for {c1}x={c3}"
            done += 1
    return "lemma 1 battery", True, f"{done} chains"


def _corollary1(count, seed=2):
    rng = random.Random(seed)
    done = 0
    for modulus in LEMMA_RINGS():
        for _ in range(count):
            c1, c2 = _random_divisor_pair(rng, modulus)
            if not linsolve.alpha_transfer_check(c1, c2):
                return "corollary 1 battery", False, f"fails for ({c1}, {c2}) in {modulus}"
            done += 1
    z = Modulus(144)
    if z(38) * z(18) == z(36):
        return "corollary 1 battery", False, "negative control unexpectedly holds"
    return "corollary 1 battery", True, f"{done} pairs + negative control"


def _lemmas34(n):
    a, _ = symdet.build_lemma4_matrices(n)
    ok3, ok4 = symdet.check_lemma3(n), symdet.check_lemma4(n)
    detail = f"lemma 3 {'ok' if ok3 else 'FAILS'}, lemma 4 {'ok' if ok4 else 'FAILS'}, "
    return f"lemmas 3-4 n={n}", ok3 and ok4, detail + f"{len(symdet.sym_det(a))} det terms"


def _oracle_grid(cases):
    total = 0
    for m, diag in cases:
        mod = Modulus(m)
        phi = matrix.build_phi(len(diag), [mod(x) for x in diag])
        o, e, s = kernels.sweep(
            phi.n, m, [x.rep for x in phi.diag()], group.multiplier_gcds(phi), group.ORACLE_BOUND
        )
        if not (len(o) == len(e) == len(s) and (o == e).all() and (o == s).all()):
            return "oracle equivalence", False, f"mismatch for diag{diag} over Z_{m}"
        total += len(o)
    return "oracle equivalence", True, f"{len(cases)} diagonals, {total} members"


def _witness_examples():
    z = Modulus(8)
    phi = matrix.build_phi(2, [z(2), z(4)])
    H = matrix.MatrixRm([[1, 0], [2, 1]], z)
    sm = group.check_structure(H, phi)
    S = group.construct_witness(sm, phi)
    F = phi.as_matrix()
    ok = (
        S == matrix.MatrixRm([[1, 0], [1, 1]], z)
        and H @ F == F @ S
        and group.is_member(H, phi)
        and group.oracle_is_member(H, phi)
        and not group.is_member(matrix.MatrixRm([[1, 0], [1, 1]], z), phi)
    )
    return "witness example (Z_8)", ok, "diag(2,4)"


def _snf_battery(count, seed=3):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 4)
        a = [[rng.randint(-50, 50) for _ in range(n)] for _ in range(n)]
        u, d, v = matrix.smith_normal_form(a)
        ua = [[sum(u[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        uav = [[sum(ua[i][k] * v[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        diag = [d[i][i] for i in range(n)]
        if (
            uav != d
            or any(d[i][j] for i in range(n) for j in range(n) if i != j)
            or abs(matrix.bareiss_det(u, ZZ)) != 1
            or abs(matrix.bareiss_det(v, ZZ)) != 1
            or any(x < 0 for x in diag)
            or any(not ZZ.divides(diag[i], diag[i + 1]) for i in range(n - 1))
        ):
            return "smith normal form", False, f"bad decomposition of {a}"
    return "smith normal form", True, f"{count} matrices"


def run(level="quick"):
    """Run the suite; ``level`` is ``"quick"`` or ``"full"``."""
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    quick = level == "quick"
    checks = [
        _example1,
        _example2,
        _witness_examples,
        lambda: _lemma1(50 if quick else 1000),
        lambda: _corollary1(50 if quick else 1000),
        *[
            (lambda n=n: _lemmas34(n))
            for n in range(symdet.MIN_N, (5 if quick else symdet.MAX_N) + 1)
        ],
        lambda: _oracle_grid(GRID[:10] if quick else GRID),
        lambda: _snf_battery(100 if quick else 1000),
    ]
    results = []
    for check in checks:
        try:
            results.append(check())
        except Exception as exc:  # a crash is a failed check, not a crashed report
            results.append((getattr(check, "__name__", "check"), False, repr(exc)))
    return results
