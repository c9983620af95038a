"""Command-line front end: ``zelisko <command> ...``.

Matrix and diagonal arguments are JSON, given inline, as a file path, or as
``-`` for stdin. JSON output is sorted and compact so identical inputs give
byte-identical output.

Exit codes: 0 success, 1 negative answer or failed check, 2 malformed input,
3 resource bound exceeded.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import group, linsolve, matrix, residue, verify
from .errors import (
    MalformedChain,
    MalformedInput,
    ModulusMismatch,
    DimensionMismatch,
    NotAUnit,
    NotInvertible,
    RingTooLarge,
    SamplingExhausted,
    SizeOutOfRange,
    StructureViolation,
    Unsolvable,
    ZeliskoError,
)
from .euclid import ZZ, PolynomialsModP, is_prime
from .residue import Modulus

EXIT_OK, EXIT_NEGATIVE, EXIT_MALFORMED, EXIT_BOUND = 0, 1, 2, 3
DEFAULT_BOUND = 10**6


@dataclass
class Config:
    ring: object = ZZ
    bound: int = DEFAULT_BOUND
    seed: int = 0
    fmt: str = "human"
    mod: str = None

    def __post_init__(self):
        if self.bound < 1:
            raise MalformedInput("--bound must be at least 1")
        if self.fmt not in ("human", "json"):
            raise MalformedInput(f"unknown format {self.fmt!r}")


class Negative(Exception):
    """Carries a result payload for a negative (exit 1) answer."""

    def __init__(self, payload):
        super().__init__(payload)
        self.payload = payload


def make_config(args):
    ring = ZZ
    if args.poly_p is not None:
        if not is_prime(args.poly_p):
            raise MalformedInput(f"--poly-p {args.poly_p} is not prime")
        ring = PolynomialsModP(args.poly_p)
    return Config(ring=ring, bound=args.bound, seed=args.seed, fmt=args.format, mod=args.mod)


# -- input ---------------------------------------------------------------


def read_json(arg):
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"not JSON and not a readable file: {arg!r}") from exc


def ring_for(obj, cfg):
    """Ring named by an object's ``"p"`` field, falling back to the config."""
    if not isinstance(obj, dict) or "p" not in obj:
        return cfg.ring
    p = obj["p"]
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise MalformedInput(f"'p' must be a prime, got {p!r}")
    if cfg.ring != ZZ and cfg.ring.p != p:
        raise MalformedInput(f"input has p={p} but --poly-p is {cfg.ring.p}")
    return PolynomialsModP(p)


def with_mod(obj, cfg, what, fallback=None):
    if not isinstance(obj, dict):
        raise MalformedInput(f"{what} must be a JSON object")
    if "mod" not in obj and fallback is not None and cfg.mod is None:
        obj = dict(ring_json(fallback), **obj)
    if "mod" not in obj:
        if cfg.mod is None:
            raise MalformedInput(f"{what} has no 'mod' and --mod was not given")
        obj = dict(obj, mod=cfg.ring.to_json(modulus_of(cfg).m))
    return obj


def load_matrix(arg, cfg, fallback=None):
    """Matrix JSON; without a ``mod`` it takes ``--mod`` or else ``fallback``."""
    obj = read_json(arg)
    if isinstance(obj, list):
        obj = {"rows": obj}
    obj = with_mod(obj, cfg, "matrix", fallback)
    return matrix.MatrixRm.from_json(obj, ring_for(obj, cfg))


def load_phi(arg, cfg):
    obj = read_json(arg)
    if isinstance(obj, list):
        obj = {"diag": obj}
    obj = with_mod(obj, cfg, "diagonal")
    return matrix.DivisorChainPhi.from_json(obj, ring_for(obj, cfg))


def modulus_of(cfg):
    if cfg.mod is None:
        raise MalformedInput("--mod is required")
    return Modulus(cfg.ring.parse(cfg.mod), cfg.ring)


def element(text, modulus):
    return modulus(modulus.ring.parse(text))


def enc(x):
    return x.modulus.ring.to_json(x.rep)


def ring_json(modulus):
    out = {"mod": modulus.ring.to_json(modulus.m)}
    if modulus.ring != ZZ:
        out["p"] = modulus.ring.p
    return out


def listed(values, modulus, cfg):
    """Sorted JSON encodings, or ``None`` when ``|R_m|`` exceeds the bound."""
    if modulus.size > cfg.bound:
        return None
    order = {x: i for i, x in enumerate(modulus.elements())}
    return [enc(x) for x in sorted(values, key=order.__getitem__)]


# -- commands ------------------------------------------------------------


def cmd_solve(args, cfg):
    modulus = modulus_of(cfg)
    a, b = element(args.a, modulus), element(args.b, modulus)
    out = dict(ring_json(modulus), a=enc(a), b=enc(b))
    if not linsolve.is_solvable(a, b):
        raise Negative(dict(out, solvable=False))
    coset = linsolve.solution_coset(a, b)
    sols = None
    if modulus.size <= cfg.bound:
        sols = listed(linsolve.enumerate_solutions(coset, cfg.bound), modulus, cfg)
    return dict(out, solvable=True, x0=enc(coset.x0), ann_gen=enc(coset.ann_gen), solutions=sols)


def cmd_ann(args, cfg):
    modulus = modulus_of(cfg)
    c = element(args.c, modulus)
    gen = residue.ann_generator(c)
    elems = None
    if modulus.size <= cfg.bound:
        elems = listed({gen * t for t in modulus.elements()}, modulus, cfg)
    return dict(
        ring_json(modulus),
        c=enc(c),
        generator=enc(gen),
        alpha=enc(residue.alpha_element(c)),
        count=None if elems is None else len(elems),
        elements=elems,
    )


def cmd_decompose(args, cfg):
    modulus = modulus_of(cfg)
    c = element(args.c, modulus)
    mu, e = residue.unit_decompose(c)
    return dict(ring_json(modulus), c=enc(c), mu=modulus.ring.to_json(mu), e=enc(e))


def cmd_phi_check(args, cfg):
    phi = load_phi(args.phi, cfg)
    prof = group.block_profile(phi)
    return dict(
        phi.to_json(),
        case=prof.case,
        n=phi.n,
        t=prof.t,
        k=prof.k,
        s=prof.s,
        ones=len(prof.ones),
        chain=[enc(x) for x in phi.chain],
        zeros=len(prof.zeros),
        adj_quot=[enc(x) for x in phi.adj_quot],
        alpha=[enc(x) for x in phi.alpha_table],
    )


def cmd_member(args, cfg):
    phi = load_phi(args.phi, cfg)
    H = load_matrix(args.H, cfg, phi.modulus)
    where = group.find_violation(H, phi)
    if where is None:
        return {"member": True, "violation": None}
    if where == "det":
        raise Negative({"member": False, "violation": {"reason": "det(H) is not a unit"}})
    i, j = where
    prof = group.block_profile(phi)
    raise Negative(
        {
            "member": False,
            "violation": {
                "entry": [i, j],
                "block": prof.block_name(i, j),
                "reason": f"phi_{i} * s = phi_{j} * p_{i}{j} has no solution",
            },
        }
    )


def _witness_report(H, S, phi):
    F = phi.as_matrix()
    dh, ds = H.det(), S.det()
    return {
        "S": S.to_json(),
        "det_H": enc(dh),
        "det_S": enc(ds),
        "det_equal": dh == ds,
        "HPhi_eq_PhiS": H @ F == F @ S,
    }


def cmd_witness(args, cfg):
    phi = load_phi(args.phi, cfg)
    H = load_matrix(args.H, cfg, phi.modulus)
    try:
        sm = group.check_structure(H, phi)
    except NotInvertible as exc:
        raise Negative({"member": False, "violation": {"reason": str(exc)}}) from None
    except StructureViolation as exc:
        raise Negative(
            {
                "member": False,
                "violation": {"entry": list(exc.entry), "block": exc.block, "reason": str(exc)},
            }
        ) from None
    out = dict(_witness_report(H, group.construct_witness(sm, phi), phi), member=True)
    if not (out["det_equal"] and out["HPhi_eq_PhiS"]):
        raise Negative(out)
    return out


def cmd_sample(args, cfg):
    phi = load_phi(args.phi, cfg)
    sm = group.sample_member(phi, seed=cfg.seed)
    return dict(_witness_report(sm.H, sm.S, phi), H=sm.H.to_json(), seed=cfg.seed)


def cmd_enumerate(args, cfg, out):
    phi = load_phi(args.phi, cfg)
    total = phi.modulus.size ** (phi.n * phi.n)
    if total > cfg.bound:
        raise RingTooLarge(f"{total} candidate matrices exceed --bound {cfg.bound}")
    count = 0
    for H in group.enumerate_members(phi):
        out.write(dumps(H.to_json()) + "\n")
        count += 1
    return {"count": count}


def cmd_snf(args, cfg):
    obj = read_json(args.A)
    rows = obj.get("rows") if isinstance(obj, dict) else obj
    ring = ring_for(obj, cfg)
    if (
        not isinstance(rows, list)
        or not rows
        or not all(isinstance(r, list) and len(r) == len(rows) for r in rows)
    ):
        raise MalformedInput("snf expects a non-empty square matrix")
    a = [[ring.from_json(x) for x in r] for r in rows]
    u, d, v = matrix.smith_normal_form(a, ring)
    tj = ring.to_json
    out = {
        "U": [[tj(x) for x in r] for r in u],
        "D": [[tj(x) for x in r] for r in d],
        "V": [[tj(x) for x in r] for r in v],
        "diag": [tj(d[i][i]) for i in range(len(d))],
    }
    if ring != ZZ:
        out["p"] = ring.p
    return out


def cmd_verify(args, cfg):
    results = verify.run(args.level)
    checks = [{"name": name, "ok": bool(ok), "detail": detail} for name, ok, detail in results]
    out = {"level": args.level, "passed": all(c["ok"] for c in checks), "checks": checks}
    if not out["passed"]:
        raise Negative(out)
    return out


# -- output --------------------------------------------------------------


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def render_human(obj, out):
    if "checks" in obj:
        for c in obj["checks"]:
            out.write(f"{'PASS' if c['ok'] else 'FAIL'}  {c['name']}: {c['detail']}\n")
        out.write(f"{'all checks passed' if obj['passed'] else 'FAILED'}\n")
        return
    for key in sorted(obj):
        value = obj[key]
        if isinstance(value, (dict, list)):
            value = dumps(value)
        out.write(f"{key}: {value}\n")


def emit(obj, cfg, out):
    if cfg.fmt == "json":
        out.write(dumps(obj) + "\n")
    else:
        render_human(obj, out)


# -- parser --------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mod", help="modulus m (integer, or coefficient list with --poly-p)")
    common.add_argument("--poly-p", type=int, help="work in F_p[x] instead of Z")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    common.add_argument("--format", choices=("human", "json"), default="human")

    parser = argparse.ArgumentParser(
        prog="zelisko", description="Linear algebra over residue rings and Zelisko groups."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *positionals):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for pos in positionals:
            p.add_argument(pos)
        return p

    add("solve", "generating solution and solution coset of a*x = b", "a", "b")
    add("ann", "annihilator generator and elements", "c")
    add("decompose", "pinned decomposition c = mu * e", "c")
    add("phi-check", "validate a divisor-chain diagonal", "phi")
    add("member", "membership test with violation report", "H", "phi")
    add("witness", "structure check and witness S", "H", "phi")
    add("sample", "random member and its witness", "phi")
    add("enumerate", "all members as JSON lines, then the count", "phi")
    add("snf", "Smith normal form U*A*V = D", "A")
    v = add("verify", "run the self-check suite")
    v.add_argument("--level", choices=("quick", "full"), default="quick")
    return parser


COMMANDS = {
    "solve": cmd_solve,
    "ann": cmd_ann,
    "decompose": cmd_decompose,
    "phi-check": cmd_phi_check,
    "member": cmd_member,
    "witness": cmd_witness,
    "sample": cmd_sample,
    "snf": cmd_snf,
    "verify": cmd_verify,
}

MALFORMED = (
    MalformedInput,
    MalformedChain,
    ModulusMismatch,
    DimensionMismatch,
    NotAUnit,
    SizeOutOfRange,
)


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    try:
        cfg = make_config(args)
        if args.command == "enumerate":
            result = cmd_enumerate(args, cfg, out)
        else:
            result = COMMANDS[args.command](args, cfg)
    except Negative as neg:
        emit(neg.payload, cfg, out)
        return EXIT_NEGATIVE
    except Unsolvable as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NEGATIVE
    except MALFORMED as exc:
        err.write(f"error: {exc}\n")
        return EXIT_MALFORMED
    except (RingTooLarge, SamplingExhausted, OverflowError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_BOUND
    except ZeliskoError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_MALFORMED
    emit(result, cfg, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
