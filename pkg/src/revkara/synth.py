"""Ancilla-free circuit builders for binary polynomial and binary field multiplication.

The ``emit_*`` functions append gates to an existing :class:`Circuit`,
addressing registers as lists of logical wire indices (lowest coefficient
first).  The ``synth_*`` functions build a standalone circuit with a fixed
register layout.  Gates are emitted in the order the algorithms list them,
so counts, greedy depth and netlists are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .circuit import Circuit, invert
from .gf2linalg import constmult_matrix, lup_decompose
from .gf2poly import ModulusError, ModulusSpec, Polynomial, is_irreducible

Wires = Sequence[int]


def split_point(n: int) -> int:
    return (n + 1) // 2


@dataclass(frozen=True)
class RegisterLayout:
    """Placement of the f, g and accumulator registers on logical wires."""

    n: int
    k: int
    ell: int
    a_off: int
    b_off: int
    c_off: int
    c_size: int

    @classmethod
    def for_modmult(cls, n: int) -> RegisterLayout:
        k = split_point(n)
        return cls(n, k, max(0, 2 * n - 1 - k), 0, n, 2 * n, n)

    @classmethod
    def for_kmult(cls, n: int) -> RegisterLayout:
        k = split_point(n) if n > 1 else 0
        return cls(n, k, max(0, 2 * n - 1 - k), 0, n, 2 * n, 2 * n - 1)

    @classmethod
    def for_mult1xk(cls, k: int, n: int) -> RegisterLayout:
        return cls(n, k, max(0, 2 * n - 1 - k), 0, n, 2 * n, k + 2 * n - 1)

    @property
    def qubits(self) -> int:
        return self.c_off + self.c_size

    @property
    def A(self) -> list[int]:
        return list(range(self.a_off, self.a_off + self.n))

    @property
    def B(self) -> list[int]:
        return list(range(self.b_off, self.b_off + self.n))

    @property
    def C(self) -> list[int]:
        return list(range(self.c_off, self.c_off + self.c_size))


# ---------- addition and shifts

def emit_add(c: Circuit, src: Wires, dst: Wires) -> None:
    """dst += src, coefficient-wise."""
    for s, d in zip(src, dst, strict=True):
        c.cnot(s, d)


def synth_add(n: int) -> Circuit:
    """(a, b) -> (a, a + b) for polynomials with n + 1 coefficients."""
    size = n + 1
    c = Circuit(2 * size)
    emit_add(c, range(size), range(size, 2 * size))
    return c


def emit_modshift(c: Circuit, wires: Wires, m: ModulusSpec, inverse: bool = False) -> None:
    """wires <- x * wires mod m (or divide by x when ``inverse``)."""
    n = len(wires)
    if n != m.n:
        raise ModulusError(f"register of {n} wires does not match field degree {m.n}")
    if not inverse:
        c.permute(wires, [(j - 1) % n for j in range(n)])
        for t in m.middle:
            c.cnot(wires[0], wires[t])
    else:
        for t in reversed(m.middle):
            c.cnot(wires[0], wires[t])
        c.permute(wires, [(j + 1) % n for j in range(n)])


def synth_modshift(m: ModulusSpec, times: int = 1) -> Circuit:
    c = Circuit(m.n)
    wires = list(range(m.n))
    for _ in range(abs(times)):
        emit_modshift(c, wires, m, inverse=times < 0)
    return c


# ---------- multiplication by a constant

@lru_cache(maxsize=64)
def _constmult_cached(fbits: int, exps: tuple[int, ...]) -> Circuit:
    m = ModulusSpec(exps)
    lup = lup_decompose(constmult_matrix(Polynomial(fbits), m))
    n = m.n
    c = Circuit(n)
    U, L = lup.U.rows, lup.L.rows
    for i in range(n):
        row = U[i]
        for j in range(i + 1, n):
            if (row >> j) & 1:
                c.cnot(j, i)
    for i in range(n - 1, -1, -1):
        row = L[i]
        for j in range(i - 1, -1, -1):
            if (row >> j) & 1:
                c.cnot(j, i)
    for a, b in lup.swaps():
        c.swap(a, b)
    return c


def synth_constmult(f: Polynomial, m: ModulusSpec) -> Circuit:
    """In-place g -> f*g mod m on n wires: U rows top-down, L rows bottom-up, then relabel."""
    if not f:
        raise ValueError("cannot multiply in place by zero")
    return _constmult_cached(f.bits, m.exponents).copy()


# ---------- schoolbook

def emit_schoolbook(c: Circuit, A: Wires, B: Wires, C: Wires) -> None:
    """C += A*B in GF(2)[x]; C has 2n - 1 wires."""
    n = len(A)
    for i in range(n):
        for j in range(n):
            c.tof(A[i], B[j], C[i + j])


def synth_schoolbook(n: int, m: ModulusSpec | None = None, align: bool = False) -> Circuit:
    """Schoolbook multiplier.

    Without ``m``: 4n - 1 wires, C += f*g.  With ``m``: 3n wires and Horner
    evaluation, one modular shift of C between consecutive coefficients of f.
    That maps C to x^(n-1)*C + f*g mod m, which is f*g for a zero
    accumulator.  ``align`` prepends n - 1 inverse shifts so an arbitrary
    accumulator is preserved, at (n-1)(w-2) extra CNOTs.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if m is None:
        c = Circuit(4 * n - 1)
        emit_schoolbook(c, range(n), range(n, 2 * n), range(2 * n, 4 * n - 1))
        return c
    if m.n != n:
        raise ModulusError(f"modulus degree {m.n} does not match n={n}")
    c = Circuit(3 * n)
    A, B, C = list(range(n)), list(range(n, 2 * n)), list(range(2 * n, 3 * n))
    if align:
        for _ in range(n - 1):
            emit_modshift(c, C, m, inverse=True)
    for i in range(n - 1, -1, -1):
        if i < n - 1:
            emit_modshift(c, C, m)
        for j in range(n):
            c.tof(A[i], B[j], C[j])
    return c


# ---------- Karatsuba

def emit_mult1xk(c: Circuit, k: int, A: Wires, B: Wires, C: Wires, cutoff: int = 0) -> None:
    """C += (1 + x^k) * A * B with A, B of size n <= k and C of size k + 2n - 1."""
    n = len(A)
    if n > k:
        raise ValueError(f"MULT1x_k needs n <= k, got n={n}, k={k}")
    if len(C) != k + 2 * n - 1:
        raise ValueError(f"accumulator must have {k + 2 * n - 1} wires, got {len(C)}")
    if n > 1:
        ell = max(0, 2 * n - 1 - k)
        for i in range(ell):
            c.cnot(C[2 * k + i], C[k + i])
        for i in range(k):
            c.cnot(C[k + i], C[i])
        emit_kmult(c, A, B, C[k:2 * k + ell], cutoff)
        for i in range(k):
            c.cnot(C[k + i], C[i])
        for i in range(ell):
            c.cnot(C[2 * k + i], C[k + i])
    else:
        c.cnot(C[k], C[0])
        c.tof(A[0], B[0], C[k])
        c.cnot(C[k], C[0])


def emit_kmult(c: Circuit, A: Wires, B: Wires, C: Wires, cutoff: int = 0) -> None:
    """C += A * B in GF(2)[x]; A and B (size n) are restored, C has 2n - 1 wires.

    ``cutoff`` switches to schoolbook for n <= cutoff; 0 disables it.
    """
    n = len(A)
    if len(B) != n or len(C) != 2 * n - 1:
        raise ValueError(f"KMULT of size {n} needs |B|={n}, |C|={2 * n - 1}")
    if n == 1:
        c.tof(A[0], B[0], C[0])
        return
    if n <= cutoff:
        emit_schoolbook(c, A, B, C)
        return
    k = split_point(n)
    emit_mult1xk(c, k, A[:k], B[:k], C[:3 * k - 1], cutoff)
    emit_mult1xk(c, k, A[k:], B[k:], C[k:2 * n - 1], cutoff)
    for i in range(n - k):
        c.cnot(A[k + i], A[i])
    for i in range(n - k):
        c.cnot(B[k + i], B[i])
    emit_kmult(c, A[:k], B[:k], C[k:3 * k - 1], cutoff)
    for i in range(n - k):
        c.cnot(B[k + i], B[i])
    for i in range(n - k):
        c.cnot(A[k + i], A[i])


def synth_mult1xk(k: int, n: int, cutoff: int = 0) -> tuple[Circuit, RegisterLayout]:
    lay = RegisterLayout.for_mult1xk(k, n)
    c = Circuit(lay.qubits)
    emit_mult1xk(c, k, lay.A, lay.B, lay.C, cutoff)
    return c, lay


def synth_kmult(n: int, cutoff: int = 0) -> tuple[Circuit, RegisterLayout]:
    if n < 1:
        raise ValueError("n must be positive")
    lay = RegisterLayout.for_kmult(n)
    c = Circuit(lay.qubits)
    emit_kmult(c, lay.A, lay.B, lay.C, cutoff)
    return c, lay


def emit_modmult(c: Circuit, A: Wires, B: Wires, C: Wires, m: ModulusSpec, cutoff: int = 0) -> None:
    """C <- A * B mod m for a zero accumulator C; A and B restored."""
    n = m.n
    k = split_point(n)
    h = n - k
    A, B, C = list(A), list(B), list(C)
    mult = synth_constmult(Polynomial.from_exponents([k, 0]), m)

    for i in range(h):
        c.cnot(A[k + i], A[i])
    for i in range(h):
        c.cnot(B[k + i], B[i])
    emit_kmult(c, A[:k], B[:k], C[:2 * k - 1], cutoff)
    for i in range(h):
        c.cnot(B[k + i], B[i])
    for i in range(h):
        c.cnot(A[k + i], A[i])
    c.compose(invert(mult), C)
    emit_kmult(c, A[k:], B[k:], C[:2 * h - 1], cutoff)
    for _ in range(k):
        emit_modshift(c, C, m)
    emit_kmult(c, A[:k], B[:k], C[:2 * k - 1], cutoff)
    c.compose(mult, C)


def synth_modmult(m: ModulusSpec, check_irreducible: bool = True, cutoff: int = 0) -> Circuit:
    """3n-wire multiplier for GF(2)[x]/m: A = wires 0..n-1, B = n..2n-1, C = 2n..3n-1."""
    n = m.n
    if n < 2:
        raise ValueError("n < 2: use a single Toffoli")
    if check_irreducible and not is_irreducible(m):
        raise ModulusError(f"modulus [{m}] is reducible")
    lay = RegisterLayout.for_modmult(n)
    c = Circuit(lay.qubits)
    emit_modmult(c, lay.A, lay.B, lay.C, m, cutoff)
    return c
