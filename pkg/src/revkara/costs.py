"""Closed-form gate counts of the Karatsuba builders, computed without building circuits."""

from __future__ import annotations

from functools import lru_cache

from .gf2poly import ModulusSpec


def _half(n: int) -> int:
    return (n + 1) // 2


@lru_cache(maxsize=None)
def kmult_tof(n: int) -> int:
    """T(1) = 1, T(n) = 2 T(ceil(n/2)) + T(floor(n/2))."""
    if n == 1:
        return 1
    k = _half(n)
    return 2 * kmult_tof(k) + kmult_tof(n - k)


@lru_cache(maxsize=None)
def mult1xk_cnot(k: int, n: int) -> int:
    if n == 1:
        return 2
    ell = max(0, 2 * n - 1 - k)
    return 2 * k + 2 * ell + kmult_cnot(n)


@lru_cache(maxsize=None)
def kmult_cnot(n: int) -> int:
    if n == 1:
        return 0
    k = _half(n)
    return mult1xk_cnot(k, k) + mult1xk_cnot(k, n - k) + 4 * (n - k) + kmult_cnot(k)


def modmult_tof(n: int) -> int:
    k = _half(n)
    return 2 * kmult_tof(k) + kmult_tof(n - k)


def modmult_structure_cnot(m: ModulusSpec) -> int:
    """CNOTs of the multiplier excluding both constant-multiplication blocks."""
    n = m.n
    k = _half(n)
    return 4 * (n - k) + 2 * kmult_cnot(k) + kmult_cnot(n - k) + k * (m.weight - 2)


def schoolbook_tof(n: int) -> int:
    return n * n


def modular_schoolbook_cnot(m: ModulusSpec) -> int:
    return (m.n - 1) * (m.weight - 2)
