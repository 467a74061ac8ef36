"""Exact linear algebra over Z, Q, and GF(p): ranks and Smith normal form.

Arbitrary-precision Python ints are mandatory here: fraction-free pivots are
minors of the input and overflow machine words already at modest orders.
Rank over GF(p) reduces entries first and then runs on the machine-word
kernel backend.

Supported sizes (runtime honesty, not hard limits of the algorithms): rank
up to order ~2000, Smith form up to order ~200.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .circulant import build_circulant
from .ntheory import require_odd_prime

__all__ = [
    "IntMatrix",
    "read_matrix_text",
    "format_matrix_text",
    "rank_rational",
    "rank_mod_p",
    "determinant",
    "matmul",
    "InvariantFactors",
    "SmithDecomposition",
    "smith_normal_form",
    "SNF_MAX_PRIME",
    "SnfConjectureReport",
    "check_snf_conjecture",
]

SNF_MAX_PRIME = 200


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major, arbitrary-precision entries."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if self.rows * self.cols != len(self.entries):
            raise ValueError(
                f"expected {self.rows * self.cols} entries for {self.rows}x{self.cols}, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged rows")
        return cls(nr, nc, tuple(v for r in rows for v in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]


def _as_row_lists(matrix) -> list[list[int]]:
    if isinstance(matrix, IntMatrix):
        return matrix.to_rows()
    return [list(r) for r in matrix]


def read_matrix_text(text: str) -> IntMatrix:
    """Parse the plain-text format: first "rows cols", then row-major integers."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("matrix text needs a 'rows cols' header")
    nr, nc = int(tokens[0]), int(tokens[1])
    body = [int(t) for t in tokens[2:]]
    if len(body) != nr * nc:
        raise ValueError(f"expected {nr * nc} entries after the header, got {len(body)}")
    return IntMatrix(nr, nc, tuple(body))


def format_matrix_text(matrix) -> str:
    m = matrix if isinstance(matrix, IntMatrix) else IntMatrix.from_rows(matrix)
    lines = [f"{m.rows} {m.cols}"]
    lines += [" ".join(str(v) for v in row) for row in m.to_rows()]
    return "\n".join(lines) + "\n"


def _bareiss(matrix) -> tuple[int, int, int]:
    """Fraction-free elimination with full pivoting; no floating point anywhere.

    Returns (rank, sign, last_pivot): sign tracks row/col swaps, and for a
    square full-rank input sign*last_pivot is the determinant.  Pivot choice
    is the largest absolute value in the remaining submatrix, which keeps
    the exact-division intermediates (they are minors) from degenerating.
    """
    m = _as_row_lists(matrix)
    nr = len(m)
    nc = len(m[0]) if m else 0
    if nr == 0 or nc == 0:
        return 0, 1, 1
    prev = 1
    sign = 1
    rank = 0
    for t in range(min(nr, nc)):
        best = 0
        bi = bj = -1
        for i in range(t, nr):
            row = m[i]
            for j in range(t, nc):
                a = row[j]
                if a and (bi < 0 or abs(a) > best):
                    best = abs(a)
                    bi, bj = i, j
        if bi < 0:
            break
        if bi != t:
            m[t], m[bi] = m[bi], m[t]
            sign = -sign
        if bj != t:
            for row in m:
                row[t], row[bj] = row[bj], row[t]
            sign = -sign
        pivot = m[t][t]
        for i in range(t + 1, nr):
            row_i = m[i]
            head = row_i[t]
            row_t = m[t]
            for j in range(t + 1, nc):
                row_i[j] = (row_i[j] * pivot - head * row_t[j]) // prev
            row_i[t] = 0
        prev = pivot
        rank += 1
    return rank, sign, prev


def rank_rational(matrix) -> int:
    """Exact rank over the rationals (equivalently over R) of an integer matrix."""
    return _bareiss(matrix)[0]


def determinant(matrix) -> int:
    """Exact determinant of a square integer matrix."""
    m = _as_row_lists(matrix)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    rank, sign, last = _bareiss(m)
    return sign * last if rank == n else 0


def rank_mod_p(matrix, p: int) -> int:
    """Rank after reducing all entries modulo the odd prime p."""
    require_odd_prime(p)
    if p >= 2**31:
        raise ValueError("rank_mod_p supports moduli below 2**31")
    reduced = [[v % p for v in row] for row in _as_row_lists(matrix)]
    if not reduced or not reduced[0]:
        return 0
    return kernels.gf_rank(reduced, p)


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact integer matrix product."""
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    ar = a.to_rows()
    bc = b.to_rows()
    out = []
    for i in range(a.rows):
        arow = ar[i]
        orow = [0] * b.cols
        for k0, aik in enumerate(arow):
            if aik:
                brow = bc[k0]
                for j in range(b.cols):
                    orow[j] += aik * brow[j]
        out.append(orow)
    return IntMatrix.from_rows(out) if out else IntMatrix(0, b.cols, ())


@dataclass(frozen=True)
class InvariantFactors:
    """Diagonal of a Smith normal form: non-negative, divisibility chain, zeros last."""

    diagonal: tuple[int, ...]

    def __post_init__(self) -> None:
        d = self.diagonal
        if any(v < 0 for v in d):
            raise ValueError("invariant factors must be non-negative")
        for a, b in zip(d, d[1:]):
            if a == 0 and b != 0:
                raise ValueError("zero factors must trail the nonzero ones")
            if a != 0 and b != 0 and b % a != 0:
                raise ValueError(f"divisibility chain violated: {a} does not divide {b}")

    @property
    def nonzero_count(self) -> int:
        return sum(1 for v in self.diagonal if v)

    def to_json(self) -> str:
        return json.dumps(list(self.diagonal))


@dataclass(frozen=True)
class SmithDecomposition:
    """Invariant factors plus (optionally) the unimodular multipliers U, V with U*M*V diagonal."""

    factors: InvariantFactors
    u: IntMatrix | None = None
    v: IntMatrix | None = None


def smith_normal_form(matrix, multipliers: bool = False) -> SmithDecomposition:
    """Smith normal form by classical row/column gcd-pivot reduction over Z.

    Pivot strategy: smallest nonzero absolute value in the remaining
    submatrix, ties broken by lowest (row, col) — the output is
    deterministic.  Division-with-remainder shrinks the pivot until it
    divides its whole row and column; a non-dividing entry elsewhere pulls
    its row up and restarts, so the final diagonal forms the chain.
    """
    a = _as_row_lists(matrix)
    nr = len(a)
    nc = len(a[0]) if a else 0
    u = IntMatrix.identity(nr).to_rows() if multipliers else None
    v = IntMatrix.identity(nc).to_rows() if multipliers else None

    def swap_rows(x: int, y: int) -> None:
        a[x], a[y] = a[y], a[x]
        if u is not None:
            u[x], u[y] = u[y], u[x]

    def swap_cols(x: int, y: int) -> None:
        for row in a:
            row[x], row[y] = row[y], row[x]
        if v is not None:
            for row in v:
                row[x], row[y] = row[y], row[x]

    def add_row(dst: int, src: int, c: int) -> None:
        # row_dst += c * row_src
        rd, rs = a[dst], a[src]
        for j in range(nc):
            rd[j] += c * rs[j]
        if u is not None:
            ud, us = u[dst], u[src]
            for j in range(nr):
                ud[j] += c * us[j]

    def add_col(dst: int, src: int, c: int) -> None:
        # col_dst += c * col_src
        for row in a:
            row[dst] += c * row[src]
        if v is not None:
            for row in v:
                row[dst] += c * row[src]

    def negate_row(x: int) -> None:
        a[x] = [-vv for vv in a[x]]
        if u is not None:
            u[x] = [-vv for vv in u[x]]

    def smallest_nonzero(t: int) -> tuple[int, int] | None:
        best = 0
        where = None
        for i in range(t, nr):
            row = a[i]
            for j in range(t, nc):
                val = abs(row[j])
                if val and (where is None or val < best):
                    best = val
                    where = (i, j)
        return where

    limit = min(nr, nc)
    t = 0
    while t < limit:
        found = smallest_nonzero(t)
        if found is None:
            break
        pi, pj = found
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            # clear column t; a nonzero remainder becomes the (smaller) pivot
            restart = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        add_row(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        restart = True
                        break
            if restart:
                continue
            # clear row t the same way; a column swap may dirty column t again
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        add_col(j, t, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            # pivot must divide the rest of the submatrix for the chain to hold
            pivot = a[t][t]
            offender = None
            for i in range(t + 1, nr):
                row = a[i]
                for j in range(t + 1, nc):
                    if row[j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)  # column t is clear, so the pivot itself is untouched
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    diagonal = tuple(a[i][i] for i in range(limit))
    factors = InvariantFactors(diagonal)
    if not multipliers:
        return SmithDecomposition(factors)
    return SmithDecomposition(factors, IntMatrix.from_rows(u) if u else IntMatrix(0, 0, ()),
                              IntMatrix.from_rows(v) if v else IntMatrix(0, 0, ()))


@dataclass(frozen=True)
class SnfConjectureReport:
    """Computed invariant factors against the pattern (1, p x (p-1)/2, 0 x (p-3)/2)."""

    p: int
    g: int
    holds: bool
    diagonal: InvariantFactors


def check_snf_conjecture(p: int, g: int | None = None) -> SnfConjectureReport:
    """Compare the Smith diagonal of the (p, g) circulant with the conjectured pattern.

    This is evidence gathering: the verdict is reported per prime, never
    assumed.  Limited to p <= 200 because the reduction cost grows fast.
    """
    require_odd_prime(p)
    if p > SNF_MAX_PRIME:
        raise ValueError(f"Smith-form scans support p <= {SNF_MAX_PRIME}, got {p}")
    matrix = build_circulant(p, g)
    factors = smith_normal_form(matrix.rows()).factors
    expected = (1,) + (p,) * ((p - 1) // 2) + (0,) * ((p - 3) // 2)
    return SnfConjectureReport(p, matrix.g, factors.diagonal == expected, factors)
