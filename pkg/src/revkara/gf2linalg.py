"""Square bit matrices over GF(2) and their LUP decomposition.

Rows are ints; bit j of ``rows[i]`` is entry (i, j).
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2poly import ModulusSpec, Polynomial, reduce_bits


class SingularMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class Gf2Matrix:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        if any(r < 0 or r >= limit for r in self.rows):
            raise ValueError("row has bits outside the matrix width")

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_lists(cls, entries) -> Gf2Matrix:
        rows = []
        for row in entries:
            bits = 0
            for j, v in enumerate(row):
                if v & 1:
                    bits |= 1 << j
            rows.append(bits)
        return cls(len(rows), tuple(rows))

    @classmethod
    def from_columns(cls, n: int, columns) -> Gf2Matrix:
        rows = [0] * n
        for j, col in enumerate(columns):
            while col:
                low = col & -col
                rows[low.bit_length() - 1] |= 1 << j
                col ^= low
        return cls(n, tuple(rows))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def row_strings(self) -> list[str]:
        """Rows written left to right from column 0, e.g. ``'1010'``."""
        return ["".join(str((r >> j) & 1) for j in range(self.n)) for r in self.rows]

    def offdiag(self) -> list[tuple[int, int]]:
        return [(i, j) for i, r in enumerate(self.rows) for j in range(self.n)
                if i != j and (r >> j) & 1]

    def nnz_offdiag(self) -> int:
        return sum(bin(r & ~(1 << i)).count("1") for i, r in enumerate(self.rows))

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        out = []
        for r in self.rows:
            acc = 0
            while r:
                low = r & -r
                acc ^= other.rows[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return Gf2Matrix(self.n, tuple(out))


def permutation_matrix(perm: list[int]) -> Gf2Matrix:
    """Matrix P with (P v)[i] = v[perm[i]]."""
    return Gf2Matrix(len(perm), tuple(1 << p for p in perm))


@dataclass(frozen=True)
class LupDecomposition:
    """``P_inv @ L @ U`` equals the decomposed matrix.

    ``P_inv`` is kept as an index list: row i of the product is row
    ``P_inv[i]`` of ``L @ U``.
    """

    L: Gf2Matrix
    U: Gf2Matrix
    P_inv: tuple[int, ...]

    def recompose(self) -> Gf2Matrix:
        return permutation_matrix(list(self.P_inv)) @ (self.L @ self.U)

    def swaps(self) -> list[tuple[int, int]]:
        """Transpositions that realize ``P_inv`` when applied left to right."""
        cur = list(range(len(self.P_inv)))
        where = list(range(len(self.P_inv)))
        out = []
        for i, want in enumerate(self.P_inv):
            j = where[want]
            if j != i:
                out.append((i, j))
                a, b = cur[i], cur[j]
                cur[i], cur[j] = b, a
                where[a], where[b] = j, i
        return out


def constmult_matrix(f: Polynomial, m: ModulusSpec) -> Gf2Matrix:
    """Matrix of g -> f*g mod m; column j holds x^j * f mod m."""
    if not f:
        raise SingularMatrixError("singular map: multiplication by zero")
    if f.degree >= m.n:
        raise ValueError("constant must have degree below the field degree")
    mbits = m.bits
    cols = []
    col = f.bits
    for _ in range(m.n):
        cols.append(col)
        col = reduce_bits(col << 1, mbits)
    return Gf2Matrix.from_columns(m.n, cols)


def lup_decompose(g: Gf2Matrix) -> LupDecomposition:
    """Column-by-column elimination; the pivot is the first row at or below the diagonal."""
    n = g.n
    a = list(g.rows)
    low = [0] * n
    perm = list(range(n))
    for j in range(n):
        bit = 1 << j
        p = j
        while p < n and not a[p] & bit:
            p += 1
        if p == n:
            raise SingularMatrixError(f"singular matrix: no pivot in column {j}")
        if p != j:
            a[p], a[j] = a[j], a[p]
            low[p], low[j] = low[j], low[p]
            perm[p], perm[j] = perm[j], perm[p]
        pivot_row = a[j]
        for i in range(j + 1, n):
            if a[i] & bit:
                a[i] ^= pivot_row
                low[i] |= bit
    L = Gf2Matrix(n, tuple(low[i] | (1 << i) for i in range(n)))
    U = Gf2Matrix(n, tuple(a))
    # perm gives P g = L U with (P g)[i] = g[perm[i]]; invert it
    p_inv = [0] * n
    for i, src in enumerate(perm):
        p_inv[src] = i
    return LupDecomposition(L, U, tuple(p_inv))


def matvec(g: Gf2Matrix, v: Polynomial) -> Polynomial:
    if v.bits >> g.n:
        raise ValueError("vector longer than matrix dimension")
    out = 0
    for i, r in enumerate(g.rows):
        if bin(r & v.bits).count("1") & 1:
            out |= 1 << i
    return Polynomial(out)
