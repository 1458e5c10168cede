"""Polynomial arithmetic over GF(2) and in binary fields GF(2)[x]/m(x).

Polynomials are stored as nonnegative integers: bit i is the coefficient
of x^i.  Nothing in this module knows about circuits; it is the reference
against which every synthesized circuit is checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

# Degree of the zero polynomial.  Compares below every integer degree.
DEG_ZERO = float("-inf")


class ModulusError(ValueError):
    """Raised for malformed or unusable field polynomials."""


@dataclass(frozen=True)
class Polynomial:
    """Element of GF(2)[x], coefficient bits packed into an int."""

    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("coefficient bit vector must be nonnegative")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> Polynomial:
        bits = 0
        for e in exponents:
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> Polynomial:
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        return cls(bits)

    @classmethod
    def from_hex(cls, text: str) -> Polynomial:
        return cls(int(text.strip(), 16))

    @property
    def degree(self):
        return self.bits.bit_length() - 1 if self.bits else DEG_ZERO

    def coeffs(self, length: int) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(length)]

    def exponents(self) -> list[int]:
        """Exponents of the nonzero terms, descending."""
        return [i for i in range(self.bits.bit_length() - 1, -1, -1) if (self.bits >> i) & 1]

    def hex(self) -> str:
        return format(self.bits, "x")

    def __bool__(self):
        return self.bits != 0

    def __add__(self, other: Polynomial) -> Polynomial:
        return Polynomial(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: Polynomial) -> Polynomial:
        return Polynomial(clmul(self.bits, other.bits))

    def __repr__(self):
        if not self.bits:
            return "Polynomial(0)"
        terms = []
        for e in reversed(self.exponents()):
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return f"Polynomial({' + '.join(terms)})"


@dataclass(frozen=True)
class ModulusSpec:
    """Field polynomial m(x) as its descending list of nonzero exponents."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        _validate_exponents(self.exponents)

    @property
    def n(self) -> int:
        return self.exponents[0]

    @property
    def weight(self) -> int:
        return len(self.exponents)

    @property
    def middle(self) -> tuple[int, ...]:
        """Exponents strictly between n and 0; these are the reduction taps."""
        return self.exponents[1:-1]

    @property
    def bits(self) -> int:
        out = 0
        for e in self.exponents:
            out |= 1 << e
        return out

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.bits)

    def __str__(self):
        return ",".join(str(e) for e in self.exponents)


def _validate_exponents(exps: Sequence[int]) -> None:
    if len(exps) < 3:
        raise ModulusError(f"modulus weight must be at least 3, got {len(exps)}")
    if any(b >= a for a, b in zip(exps, exps[1:])):
        raise ModulusError(f"exponents must be strictly descending: {list(exps)}")
    if exps[-1] != 0:
        raise ModulusError("modulus must have a constant term (last exponent 0)")


def parse_modulus(text: str) -> ModulusSpec:
    """Parse ``"163,7,6,3,0"`` into a validated :class:`ModulusSpec`."""
    parts = [p.strip() for p in text.strip().strip("[]").split(",")]
    try:
        exps = [int(p) for p in parts if p]
    except ValueError as exc:
        raise ModulusError(f"cannot parse modulus {text!r}: {exc}") from None
    return ModulusSpec(tuple(exps))


# ---------- integer-level kernels

def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit vectors."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    out = 0
    while b:
        low = b & -b
        out ^= a << (low.bit_length() - 1)
        b ^= low
    return out


def clsquare(a: int) -> int:
    # squaring over GF(2) spreads bit i to bit 2i
    return int(format(a, "b"), 4) if a else 0


def reduce_bits(a: int, mbits: int) -> int:
    n = mbits.bit_length() - 1
    da = a.bit_length() - 1
    while da >= n:
        a ^= mbits << (da - n)
        da = a.bit_length() - 1
    return a


def _divmod_bits(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    q = 0
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        s = a.bit_length() - 1 - db
        q ^= 1 << s
        a ^= b << s
    return q, a


def _gcd_bits(a: int, b: int) -> int:
    while b:
        a, b = b, _divmod_bits(a, b)[1]
    return a


# ---------- public operations

def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return Polynomial(clmul(a.bits, b.bits))


def poly_mod(a: Polynomial, m: ModulusSpec) -> Polynomial:
    return Polynomial(reduce_bits(a.bits, m.bits))


def field_mul(a: Polynomial, b: Polynomial, m: ModulusSpec) -> Polynomial:
    if a.degree >= m.n or b.degree >= m.n:
        raise ValueError("operands must have degree below the field degree")
    return Polynomial(reduce_bits(clmul(a.bits, b.bits), m.bits))


def field_inv(a: Polynomial, m: ModulusSpec) -> Polynomial:
    """Inverse of ``a`` modulo ``m`` by the extended Euclidean algorithm."""
    if not a:
        raise ZeroDivisionError("no inverse: zero element")
    r0, r1 = m.bits, reduce_bits(a.bits, m.bits)
    s0, s1 = 0, 1
    while r1:
        q, r = _divmod_bits(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ clmul(q, s1)
    if r0 != 1:
        raise ZeroDivisionError(f"no inverse: {a} shares a factor with the modulus")
    return Polynomial(reduce_bits(s0, m.bits))


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(m: ModulusSpec | Polynomial) -> bool:
    """Rabin's test: x^(2^n) = x mod m, and gcd(x^(2^(n/p)) - x, m) = 1 for primes p | n."""
    mbits = m.bits
    n = mbits.bit_length() - 1
    if n < 1:
        return False
    if n == 1:
        return True
    checkpoints = {n // p for p in _prime_factors(n)}
    x = 0b10
    t = x
    for i in range(1, n + 1):
        t = reduce_bits(clsquare(t), mbits)
        if i in checkpoints and _gcd_bits(mbits, t ^ x) != 1:
            return False
    return t == x


def field_mul_many(f: np.ndarray, g: np.ndarray, m: ModulusSpec) -> np.ndarray:
    """Vectorized :func:`field_mul` over uint64 arrays, for n <= 32."""
    n = m.n
    if n > 32:
        raise ValueError("vectorized oracle supports n <= 32")
    f = np.asarray(f, dtype=np.uint64)
    g = np.asarray(g, dtype=np.uint64)
    prod = np.zeros(np.broadcast(f, g).shape, dtype=np.uint64)
    one = np.uint64(1)
    for i in range(n):
        bit = (f >> np.uint64(i)) & one
        prod ^= (g << np.uint64(i)) * bit
    mb = np.uint64(m.bits)
    for d in range(2 * n - 2, n - 1, -1):
        hit = (prod >> np.uint64(d)) & one
        prod ^= (mb << np.uint64(d - n)) * hit
    return prod
