"""Reversible netlists of CNOT and Toffoli gates with free wire relabeling.

A gate is a plain tuple of physical wire indices, target last:
``(control, target)`` for CNOT and ``(control1, control2, target)`` for
Toffoli.  Swaps are never stored as gates.  Instead the circuit keeps a
``wiremap`` where ``wiremap[i]`` is the physical wire currently holding
logical qubit ``i``; builders address logical qubits and the map is applied
when a gate is appended.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Gate = tuple  # (c, t) or (c1, c2, t)


class CircuitError(ValueError):
    pass


class NetlistParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def gate_kind(g: Gate) -> str:
    return "CNOT" if len(g) == 2 else "TOF"


@dataclass(frozen=True)
class GateStats:
    cnot_count: int
    tof_count: int
    depth_greedy: int
    qubits: int
    final_perm: tuple[int, ...]

    @property
    def total(self) -> int:
        return self.cnot_count + self.tof_count

    def as_dict(self, with_perm: bool = False) -> dict:
        d = {
            "cnot": self.cnot_count,
            "tof": self.tof_count,
            "depth": self.depth_greedy,
            "qubits": self.qubits,
        }
        if with_perm:
            d["final_perm"] = list(self.final_perm)
        return d


@dataclass
class Circuit:
    qubits: int
    gates: list = field(default_factory=list)
    wiremap: list = None

    def __post_init__(self):
        if self.wiremap is None:
            self.wiremap = list(range(self.qubits))
        elif sorted(self.wiremap) != list(range(self.qubits)):
            raise CircuitError("wiremap is not a permutation")
        else:
            self.wiremap = list(self.wiremap)

    # -- construction

    def _check(self, idx: Sequence[int]) -> None:
        if len(set(idx)) != len(idx):
            raise CircuitError(f"gate indices must be distinct: {tuple(idx)}")
        for i in idx:
            if not 0 <= i < self.qubits:
                raise CircuitError(f"index {i} out of range for {self.qubits} qubits")

    def append(self, *logical: int) -> Circuit:
        """Append a CNOT (2 indices) or Toffoli (3 indices), target last, on logical wires."""
        if len(logical) not in (2, 3):
            raise CircuitError("a gate takes 2 (CNOT) or 3 (TOF) indices")
        self._check(logical)
        wm = self.wiremap
        self.gates.append(tuple(wm[i] for i in logical))
        return self

    def cnot(self, control: int, target: int) -> Circuit:
        return self.append(control, target)

    def tof(self, c1: int, c2: int, target: int) -> Circuit:
        return self.append(c1, c2, target)

    def relabel(self, perm: Sequence[int]) -> Circuit:
        """Rename wires at zero gate cost: new logical i is old logical ``perm[i]``."""
        if sorted(perm) != list(range(self.qubits)):
            raise CircuitError("relabel needs a permutation of all logical indices")
        wm = self.wiremap
        self.wiremap = [wm[p] for p in perm]
        return self

    def permute(self, wires: Sequence[int], order: Sequence[int]) -> Circuit:
        """Relabel within a register: new ``wires[i]`` is old ``wires[order[i]]``."""
        if sorted(order) != list(range(len(wires))):
            raise CircuitError("order must be a permutation of the register positions")
        wm = self.wiremap
        moved = [wm[wires[o]] for o in order]
        for w, p in zip(wires, moved):
            wm[w] = p
        return self

    def swap(self, a: int, b: int) -> Circuit:
        wm = self.wiremap
        wm[a], wm[b] = wm[b], wm[a]
        return self

    def compose(self, other: Circuit, wires: Sequence[int] | None = None) -> Circuit:
        """Append ``other`` with its qubit i attached to logical wire ``wires[i]``."""
        if wires is None:
            wires = range(self.qubits)
        wires = list(wires)
        if len(wires) != other.qubits:
            raise CircuitError(f"need {other.qubits} wires, got {len(wires)}")
        self._check(wires)
        phys = [self.wiremap[w] for w in wires]
        self.gates.extend(tuple(phys[q] for q in g) for g in other.gates)
        self.permute(wires, other.wiremap)
        return self

    def copy(self) -> Circuit:
        return Circuit(self.qubits, list(self.gates), list(self.wiremap))

    def __len__(self):
        return len(self.gates)

    def __eq__(self, other):
        if not isinstance(other, Circuit):
            return NotImplemented
        return (self.qubits, self.gates, self.wiremap) == (other.qubits, other.gates, other.wiremap)


def append_gate(c: Circuit, *logical: int) -> Circuit:
    return c.append(*logical)


def relabel(c: Circuit, perm: Sequence[int]) -> Circuit:
    return c.relabel(perm)


def invert(c: Circuit) -> Circuit:
    """Inverse circuit: gates reversed, final wiremap inverted.

    Physical wire q of ``c`` becomes physical wire ``inv[q]`` of the result,
    which puts every logical input where ``c`` left it.
    """
    inv = [0] * c.qubits
    for i, p in enumerate(c.wiremap):
        inv[p] = i
    gates = [tuple(inv[q] for q in g) for g in reversed(c.gates)]
    return Circuit(c.qubits, gates, inv)


# -- simulation

def run_columns(c: Circuit, columns: Sequence[int]) -> list[int]:
    """Bit-sliced evaluation: ``columns[i]`` packs many trials' values of logical wire i.

    Bit t of every int belongs to trial t, so one pass over the gate list
    evaluates all trials at once.  Returns the output columns in logical order.
    """
    if len(columns) != c.qubits:
        raise CircuitError(f"state has {len(columns)} wires, circuit has {c.qubits}")
    w = list(columns)
    for g in c.gates:
        if len(g) == 2:
            w[g[1]] ^= w[g[0]]
        else:
            w[g[2]] ^= w[g[0]] & w[g[1]]
    return [w[p] for p in c.wiremap]


def simulate(c: Circuit, state: Sequence[int]) -> list[int]:
    """Evaluate on one classical basis state given as a 0/1 sequence in logical order."""
    return [v & 1 for v in run_columns(c, [int(b) & 1 for b in state])]


def states_to_columns(states: Sequence[Sequence[int]], qubits: int) -> list[int]:
    cols = [0] * qubits
    for t, s in enumerate(states):
        if len(s) != qubits:
            raise CircuitError("state length mismatch")
        for i, b in enumerate(s):
            if b:
                cols[i] |= 1 << t
    return cols


def columns_to_states(cols: Sequence[int], trials: int) -> list[list[int]]:
    return [[(col >> t) & 1 for col in cols] for t in range(trials)]


def simulate_many(c: Circuit, states: Sequence[Sequence[int]]) -> list[list[int]]:
    cols = run_columns(c, states_to_columns(states, c.qubits))
    return columns_to_states(cols, len(states))


def random_states(qubits: int, count: int, rng: random.Random) -> list[list[int]]:
    return [[rng.getrandbits(1) for _ in range(qubits)] for _ in range(count)]


# -- statistics

def greedy_depth(gates: Iterable[Gate]) -> int:
    """Frontier-set depth estimate.

    A gate touching any wire already in the current frontier starts a new
    layer containing only itself; otherwise it joins the frontier.
    """
    depth = 0
    frontier: set = set()
    for g in gates:
        if depth == 0 or not frontier.isdisjoint(g):
            depth += 1
            frontier = set(g)
        else:
            frontier.update(g)
    return depth


def max_wire_incidence(c: Circuit) -> int:
    counts = [0] * c.qubits
    for g in c.gates:
        for q in g:
            counts[q] += 1
    return max(counts, default=0)


def stats(c: Circuit) -> GateStats:
    cnots = sum(1 for g in c.gates if len(g) == 2)
    return GateStats(
        cnot_count=cnots,
        tof_count=len(c.gates) - cnots,
        depth_greedy=greedy_depth(c.gates),
        qubits=c.qubits,
        final_perm=tuple(c.wiremap),
    )


# -- text formats

def serialize(c: Circuit) -> str:
    lines = [f"qubits {c.qubits}", "perm" + "".join(f" {p}" for p in c.wiremap)]
    for g in c.gates:
        lines.append(f"{gate_kind(g)} " + " ".join(map(str, g)))
    return "\n".join(lines) + "\n"


def parse_netlist(text: str) -> Circuit:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2:
        raise NetlistParseError(len(lines) + 1, "missing header")

    def ints(tokens, lineno):
        try:
            return [int(t) for t in tokens]
        except ValueError:
            raise NetlistParseError(lineno, f"non-integer token in {' '.join(tokens)!r}") from None

    head = lines[0].split(" ")
    if len(head) != 2 or head[0] != "qubits":
        raise NetlistParseError(1, "expected 'qubits N'")
    (nq,) = ints(head[1:], 1)
    if nq < 0:
        raise NetlistParseError(1, "negative qubit count")

    perm_tokens = lines[1].split(" ")
    if perm_tokens[0] != "perm":
        raise NetlistParseError(2, "expected 'perm p0 ... p{N-1}'")
    perm = ints(perm_tokens[1:], 2)
    if sorted(perm) != list(range(nq)):
        raise NetlistParseError(2, "perm is not a permutation of 0..N-1")

    gates = []
    arity = {"CNOT": 2, "TOF": 3}
    for lineno, line in enumerate(lines[2:], start=3):
        tok = line.split(" ")
        if tok[0] not in arity or len(tok) != arity[tok[0]] + 1:
            raise NetlistParseError(lineno, f"malformed gate line {line!r}")
        idx = ints(tok[1:], lineno)
        if any(not 0 <= i < nq for i in idx):
            raise NetlistParseError(lineno, f"index out of range for {nq} qubits")
        if len(set(idx)) != len(idx):
            raise NetlistParseError(lineno, "repeated index within gate")
        gates.append(tuple(idx))
    return Circuit(nq, gates, perm)


def export_qasm(c: Circuit) -> str:
    out = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{c.qubits}];"]
    for g in c.gates:
        name = "cx" if len(g) == 2 else "ccx"
        out.append(f"{name} " + ", ".join(f"q[{q}]" for q in g) + ";")
    out.append("// wiremap " + " ".join(map(str, c.wiremap)))
    return "\n".join(out) + "\n"


def random_circuit(qubits: int, size: int, rng: random.Random, tof_fraction: float = 0.3) -> Circuit:
    c = Circuit(qubits)
    for _ in range(size):
        r = rng.random()
        if qubits >= 3 and r < tof_fraction:
            c.tof(*rng.sample(range(qubits), 3))
        elif r < tof_fraction + 0.1:
            c.relabel(rng.sample(range(qubits), qubits))
        else:
            c.cnot(*rng.sample(range(qubits), 2))
    return c
