"""Check synthesized circuits against the polynomial-arithmetic oracle.

Inputs are packed bit-sliced (one int per wire, one bit per trial) so a
single pass over the gate list evaluates a whole batch.  Exhaustive sweeps
use numpy for packing and for the oracle; random sweeps use plain ints so
any field size works.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import synth
from .circuit import Circuit, run_columns
from .gf2poly import (
    ModulusSpec,
    Polynomial,
    clmul,
    field_mul_many,
    reduce_bits,
)

EXHAUSTIVE_MAX_N = 12
CHUNK = 1 << 18


@dataclass
class Harness:
    """A circuit plus how to feed it and what it must return.

    ``registers`` maps register names to logical wires, lowest coefficient
    first; together they cover every wire.  ``oracle`` maps a dict of input
    register values to the expected outputs, for ints or uint64 arrays.
    """

    kind: str
    circuit: Circuit
    registers: dict[str, list[int]]
    oracle: Callable[[dict], dict]
    free: tuple[str, ...]  # registers the caller chooses; others start at zero
    sizes: dict = field(default_factory=dict)
    modulus: ModulusSpec | None = None


@dataclass
class Verification:
    mode: str
    trials: int
    failures: int
    seed: int | None = None
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {
            "mode": self.mode,
            "trials": self.trials,
            "passed": self.trials - self.failures,
            "failures": self.failures,
            "seed": self.seed,
            "counterexample": self.counterexample,
        }


# ---------- oracles (work on python ints and on uint64 arrays)

def _is_array(x) -> bool:
    return isinstance(x, np.ndarray)


def _poly_mul_any(a, b, width: int):
    if not _is_array(a) and not _is_array(b):
        return clmul(a, b)
    a = np.asarray(a, dtype=np.uint64)
    b = np.asarray(b, dtype=np.uint64)
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.uint64)
    one = np.uint64(1)
    for i in range(width):
        out ^= (b << np.uint64(i)) * ((a >> np.uint64(i)) & one)
    return out


def _field_mul_any(a, b, m: ModulusSpec):
    if not _is_array(a) and not _is_array(b):
        return reduce_bits(clmul(a, b), m.bits)
    return field_mul_many(a, b, m)


# ---------- harness construction

def harness(kind: str, *, m: ModulusSpec | None = None, n: int | None = None,
            f: Polynomial | None = None, cutoff: int = 0,
            check_irreducible: bool = False) -> Harness:
    if kind == "modmult":
        c = synth.synth_modmult(m, check_irreducible=check_irreducible, cutoff=cutoff)
        lay = synth.RegisterLayout.for_modmult(m.n)
        return Harness(kind, c, {"f": lay.A, "g": lay.B, "h": lay.C},
                       lambda v: {"f": v["f"], "g": v["g"], "h": _field_mul_any(v["f"], v["g"], m)},
                       ("f", "g"), {"n": m.n, "k": lay.k}, m)
    if kind == "kmult":
        c, lay = synth.synth_kmult(n, cutoff=cutoff)
        return Harness(kind, c, {"f": lay.A, "g": lay.B, "h": lay.C},
                       lambda v: {"f": v["f"], "g": v["g"], "h": v["h"] ^ _poly_mul_any(v["f"], v["g"], n)},
                       ("f", "g", "h"), {"n": n, "k": lay.k})
    if kind == "schoolbook":
        if m is None:
            c = synth.synth_schoolbook(n)
            return Harness(kind, c, {"f": list(range(n)), "g": list(range(n, 2 * n)),
                                     "h": list(range(2 * n, 4 * n - 1))},
                           lambda v: {"f": v["f"], "g": v["g"], "h": v["h"] ^ _poly_mul_any(v["f"], v["g"], n)},
                           ("f", "g", "h"), {"n": n})
        n = m.n
        c = synth.synth_schoolbook(n, m)
        return Harness(kind, c, {"f": list(range(n)), "g": list(range(n, 2 * n)),
                                 "h": list(range(2 * n, 3 * n))},
                       lambda v: {"f": v["f"], "g": v["g"], "h": _field_mul_any(v["f"], v["g"], m)},
                       ("f", "g"), {"n": n}, m)
    if kind == "constmult":
        c = synth.synth_constmult(f, m)
        return Harness(kind, c, {"g": list(range(m.n))},
                       lambda v: {"g": _field_mul_any(f.bits, v["g"], m)},
                       ("g",), {"n": m.n, "f": f.exponents()}, m)
    if kind == "modshift":
        c = synth.synth_modshift(m)
        return Harness(kind, c, {"g": list(range(m.n))},
                       lambda v: {"g": _field_mul_any(0b10, v["g"], m)},
                       ("g",), {"n": m.n}, m)
    if kind == "add":
        c = synth.synth_add(n)
        size = n + 1
        return Harness(kind, c, {"a": list(range(size)), "b": list(range(size, 2 * size))},
                       lambda v: {"a": v["a"], "b": v["a"] ^ v["b"]},
                       ("a", "b"), {"n": n})
    raise ValueError(f"unknown circuit kind {kind!r}")


# ---------- packing

def _pack_ints(values: list[int], width: int) -> list[int]:
    cols = [0] * width
    for t, v in enumerate(values):
        while v:
            low = v & -v
            cols[low.bit_length() - 1] |= 1 << t
            v ^= low
    return cols


def _unpack_ints(cols: list[int], trials: int) -> list[int]:
    out = [0] * trials
    for i, col in enumerate(cols):
        bit = 1 << i
        while col:
            low = col & -col
            out[low.bit_length() - 1] |= bit
            col ^= low
    return out


def _pack_array(values: np.ndarray, width: int) -> list[int]:
    cols = []
    for i in range(width):
        bits = ((values >> np.uint64(i)) & np.uint64(1)).astype(np.uint8)
        cols.append(int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little"))
    return cols


def _unpack_array(cols: list[int], trials: int) -> np.ndarray:
    nbytes = (trials + 7) // 8
    out = np.zeros(trials, dtype=np.uint64)
    for i, col in enumerate(cols):
        raw = np.frombuffer(col.to_bytes(nbytes, "little"), dtype=np.uint8)
        bits = np.unpackbits(raw, bitorder="little")[:trials].astype(np.uint64)
        out |= bits << np.uint64(i)
    return out


def run_batch(h: Harness, inputs: dict) -> dict:
    """Simulate one batch; ``inputs`` maps free register names to equal-length value lists or arrays."""
    first = next(iter(inputs.values()))
    trials = len(first)
    arrays = _is_array(first)
    cols = [0] * h.circuit.qubits
    for name, wires in h.registers.items():
        if name not in inputs:
            continue
        packed = _pack_array(inputs[name], len(wires)) if arrays else _pack_ints(inputs[name], len(wires))
        for w, col in zip(wires, packed):
            cols[w] = col
    out = run_columns(h.circuit, cols)
    unpack = _unpack_array if arrays else _unpack_ints
    return {name: unpack([out[w] for w in wires], trials) for name, wires in h.registers.items()}


def _full_inputs(h: Harness, inputs: dict) -> dict:
    full = dict(inputs)
    first = next(iter(inputs.values()))
    for name in h.registers:
        if name not in full:
            full[name] = np.zeros(len(first), dtype=np.uint64) if _is_array(first) else [0] * len(first)
    return full


def _compare(h: Harness, inputs: dict) -> tuple[int, dict | None]:
    full = _full_inputs(h, inputs)
    got = run_batch(h, inputs)
    if _is_array(next(iter(inputs.values()))):
        want = h.oracle(full)
        bad = np.zeros(len(next(iter(inputs.values()))), dtype=bool)
        for name in h.registers:
            bad |= got[name] != np.asarray(want[name], dtype=np.uint64)
        failures = int(bad.sum())
        if not failures:
            return 0, None
        t = int(np.argmax(bad))
        return failures, _example(h, {k: int(v[t]) for k, v in full.items()}, {k: int(v[t]) for k, v in got.items()})
    failures, example = 0, None
    trials = len(next(iter(inputs.values())))
    for t in range(trials):
        one = {k: v[t] for k, v in full.items()}
        want = h.oracle(one)
        res = {k: v[t] for k, v in got.items()}
        if res != {k: int(want[k]) for k in h.registers}:
            failures += 1
            if example is None:
                example = _example(h, one, res)
    return failures, example


def _example(h: Harness, inp: dict, got: dict) -> dict:
    want = h.oracle(inp)
    return {
        "input": {k: format(v, "x") for k, v in inp.items()},
        "expected": {k: format(int(want[k]), "x") for k in h.registers},
        "got": {k: format(v, "x") for k, v in got.items()},
    }


def verify_exhaustive(h: Harness, seed: int = 1) -> Verification:
    """Every assignment of the free registers; accumulators wider than the budget get random fill."""
    widths = {name: len(h.registers[name]) for name in h.free}
    n = h.sizes.get("n", 0)
    if n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive mode supports n <= {EXHAUSTIVE_MAX_N}, got {n}")
    rng = np.random.default_rng(seed)
    enum = list(h.free)
    total_bits = sum(widths.values())
    randomized = []
    while total_bits > 24 and len(enum) > 1:
        name = enum.pop()
        randomized.append(name)
        total_bits -= widths[name]
    total = 1 << total_bits
    failures, example = 0, None
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(total, start + CHUNK), dtype=np.uint64)
        inputs, shift = {}, 0
        for name in enum:
            w = widths[name]
            inputs[name] = (idx >> np.uint64(shift)) & np.uint64((1 << w) - 1)
            shift += w
        for name in randomized:
            w = widths[name]
            inputs[name] = rng.integers(0, 1 << w, size=len(idx), dtype=np.uint64)
        bad, ex = _compare(h, inputs)
        failures += bad
        example = example or ex
    return Verification("exhaustive", total, failures, seed if randomized else None, example)


def verify_random(h: Harness, trials: int = 100, seed: int = 1) -> Verification:
    rng = random.Random(seed)
    inputs = {name: [rng.getrandbits(len(h.registers[name])) for _ in range(trials)]
              for name in h.free}
    failures, example = _compare(h, inputs)
    return Verification("random", trials, failures, seed, example)
