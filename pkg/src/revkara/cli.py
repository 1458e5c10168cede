"""Command line: ``revkara synth``, ``revkara verify`` and ``revkara table``.

Exit codes: 0 success, 1 verification failure, 2 bad arguments or
modulus, 3 reducible modulus (or a singular constant multiplication).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import costs, registry, synth, verify
from .circuit import export_qasm, serialize, stats
from .gf2linalg import SingularMatrixError
from .gf2poly import ModulusError, Polynomial, is_irreducible

KINDS = ("modmult", "kmult", "schoolbook", "constmult", "modshift", "add")
DEFAULT_SEED = 1
DEFAULT_TRIALS = 100


class UsageError(Exception):
    code = 2


class ReducibleError(Exception):
    code = 3


def _modulus(args, required: bool):
    if args.field is None:
        if required:
            raise UsageError(f"{args.kind} needs --field")
        return None
    try:
        m = registry.lookup(args.field)
    except (ModulusError, KeyError) as exc:
        raise UsageError(f"bad modulus {args.field!r}: {exc}") from None
    if args.check_irreducible and not is_irreducible(m):
        raise ReducibleError(f"modulus [{m}] is reducible over GF(2)")
    return m


def _poly(text: str) -> Polynomial:
    try:
        exps = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad polynomial {text!r}; expected exponents like 2,0") from None
    if len(set(exps)) != len(exps) or any(e < 0 for e in exps):
        raise UsageError(f"bad polynomial {text!r}")
    return Polynomial.from_exponents(exps)


def build_harness(args) -> verify.Harness:
    kind = args.kind
    needs_field = kind in ("modmult", "constmult", "modshift")
    m = _modulus(args, needs_field)
    n = args.n
    if kind in ("kmult", "add") or (kind == "schoolbook" and m is None):
        if n is None:
            raise UsageError(f"{kind} needs --n")
        if n < (0 if kind == "add" else 1):
            raise UsageError(f"--n out of range: {n}")
    if kind == "schoolbook" and m is not None and n is not None and n != m.n:
        raise UsageError(f"--n {n} does not match field degree {m.n}")
    f = None
    if kind == "constmult":
        if args.poly is None:
            raise UsageError("constmult needs --poly")
        f = _poly(args.poly)
        if not f or f.degree >= m.n:
            raise UsageError("--poly must be nonzero with degree below the field degree")
    if kind == "modmult" and m.n < 2:
        raise UsageError("n < 2: use a single Toffoli")
    try:
        return verify.harness(kind, m=m, n=n, f=f, cutoff=args.cutoff)
    except SingularMatrixError as exc:
        raise ReducibleError(f"constant multiplication is singular for [{m}]: {exc}") from None


def _report(args, h: verify.Harness, argv, extra: dict) -> dict:
    rep = {
        "command": " ".join(argv),
        "kind": h.kind,
        "modulus": str(h.modulus) if h.modulus is not None else None,
        "sizes": h.sizes,
        "stats": stats(h.circuit).as_dict(),
    }
    rep.update(extra)
    return rep


def cmd_synth(args, argv) -> int:
    t0 = time.perf_counter()
    h = build_harness(args)
    if args.out:
        text = serialize(h.circuit) if args.format == "netlist" else export_qasm(h.circuit)
        Path(args.out).write_text(text)
    rep = _report(args, h, argv, {"out": args.out, "format": args.format})
    if args.timing:
        rep["duration_s"] = round(time.perf_counter() - t0, 6)
    print(json.dumps(rep, sort_keys=True))
    return 0


def cmd_verify(args, argv) -> int:
    t0 = time.perf_counter()
    seed = args.seed
    if os.environ.get("QMUL_SEED"):
        try:
            seed = int(os.environ["QMUL_SEED"], 0)
        except ValueError:
            raise UsageError(f"QMUL_SEED is not an integer: {os.environ['QMUL_SEED']!r}") from None
    h = build_harness(args)
    if args.mode == "exhaustive":
        n = h.sizes.get("n", 0)
        if n > verify.EXHAUSTIVE_MAX_N:
            raise UsageError(f"exhaustive mode needs n <= {verify.EXHAUSTIVE_MAX_N}, got {n}")
        v = verify.verify_exhaustive(h, seed=seed)
    else:
        v = verify.verify_random(h, trials=args.trials, seed=seed)
    rep = _report(args, h, argv, {"verification": v.as_dict()})
    if args.timing:
        rep["duration_s"] = round(time.perf_counter() - t0, 6)
    print(json.dumps(rep, sort_keys=True))
    if not v.ok:
        print(f"FAIL: {v.failures}/{v.trials} mismatches; first counterexample: "
              f"{json.dumps(v.counterexample, sort_keys=True)}", file=sys.stderr)
        return 1
    return 0


def constmult_rows():
    for e in registry.FIELDS:
        m = e.modulus
        c = synth.synth_constmult(Polynomial.from_exponents([synth.split_point(m.n), 0]), m)
        st = stats(c)
        flags = [name for name, got, want in (("cnot", st.cnot_count, e.constmult_cnot),
                                              ("depth", st.depth_greedy, e.constmult_depth))
                 if got != want]
        yield {
            "degree": e.degree, "polynomial": f"[{m}]", "source": e.source,
            "cnot": st.cnot_count, "depth": st.depth_greedy,
            "published_cnot": e.constmult_cnot, "published_depth": e.constmult_depth,
            "differs": ",".join(flags) or "-",
        }


def modmult_rows(max_degree: int | None = None):
    for deg, (p_sb, p_tof, p_cnot, p_depth) in sorted(registry.MODMULT_PUBLISHED.items()):
        if max_degree is not None and deg > max_degree:
            continue
        m = registry.default_modulus(deg)
        st = stats(synth.synth_modmult(m, check_irreducible=False))
        sb = costs.schoolbook_tof(deg)
        flags = [name for name, got, want in (("schoolbook_tof", sb, p_sb), ("tof", st.tof_count, p_tof),
                                              ("cnot", st.cnot_count, p_cnot),
                                              ("depth", st.depth_greedy, p_depth))
                 if got != want]
        yield {
            "degree": deg, "polynomial": f"[{m}]", "schoolbook_tof": sb,
            "tof": st.tof_count, "cnot": st.cnot_count, "depth": st.depth_greedy,
            "qubits": st.qubits,
            "published_schoolbook_tof": p_sb, "published_tof": p_tof, "published_cnot": p_cnot,
            "published_depth": p_depth, "differs": ",".join(flags) or "-",
        }


def format_tsv(rows) -> str:
    rows = list(rows)
    if not rows:
        return ""
    cols = list(rows[0])
    lines = ["\t".join(cols)]
    lines += ["\t".join(str(r[c]) for c in cols) for r in rows]
    return "\n".join(lines) + "\n"


def cmd_table(args, argv) -> int:
    rows = constmult_rows() if args.which == "constmult" else modmult_rows(args.max_degree)
    text = format_tsv(rows)
    if args.out:
        Path(args.out).write_text(text)
    sys.stdout.write(text)
    return 0


def _add_circuit_args(p):
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--field", help="exponent list like 163,7,6,3,0, or a registry key like 163 or 163/banegas")
    p.add_argument("--n", type=int, help="operand size for kmult, schoolbook and add")
    p.add_argument("--poly", help="constant for constmult as an exponent list, e.g. 2,0 for 1+x^2")
    p.add_argument("--cutoff", type=int, default=0, help="schoolbook below this size inside Karatsuba (0 = off)")
    p.add_argument("--check-irreducible", action="store_true")
    p.add_argument("--timing", action="store_true", help="add wall-clock duration to the report")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revkara", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="build a circuit, write its netlist, print gate statistics")
    _add_circuit_args(p)
    p.add_argument("--out", help="netlist or QASM output path")
    p.add_argument("--format", choices=("netlist", "qasm"), default="netlist")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="simulate a circuit against the polynomial oracle")
    _add_circuit_args(p)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="random")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="regenerate a published gate-count table as TSV")
    p.add_argument("which", choices=("constmult", "modmult"))
    p.add_argument("--max-degree", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = make_parser().parse_args(argv)
    try:
        return args.func(args, argv)
    except (UsageError, ReducibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
