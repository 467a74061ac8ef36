"""Circulant matrices whose first row is the power sequence of a primitive root.

The first row lists the canonical representatives of g**0, g**1, ..., g**(p-2)
mod p; row i is the i-fold right cyclic shift, i.e. entry (i, j) equals
first_row[(j - i) mod (p-1)].  Reduced mod p every row is a scalar multiple
of the first one, while over the rationals the rank is (p+1)/2 — the duality
this toolkit exists to verify.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from . import kernels
from .characters import CharIndex, first_moment, zero_tolerance
from .ntheory import find_primitive_root, require_primitive_root

__all__ = [
    "power_sequence",
    "ShiftedRow",
    "Circulant",
    "build_circulant",
    "Spectrum",
    "eigenvalues",
    "crosscheck_spectrum",
]


def power_sequence(p: int, g: int) -> list[int]:
    """Representatives in 1..p-1 of g**j mod p for j = 0..p-2 (a permutation)."""
    require_primitive_root(g, p)
    seq = []
    x = 1
    for _ in range(p - 1):
        seq.append(x)
        x = x * g % p
    return seq


class ShiftedRow(NamedTuple):
    """One row of the matrix plus the scalar with row = scalar * first_row (mod p)."""

    values: tuple[int, ...]
    scalar: int


@dataclass(frozen=True)
class Circulant:
    """Square circulant of order p-1 built from the power sequence of (p, g)."""

    p: int
    g: int
    first_row: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.first_row != tuple(power_sequence(self.p, self.g)):
            raise ValueError(f"first row is not the power sequence of g={self.g} mod {self.p}")

    @property
    def order(self) -> int:
        return self.p - 1

    def entry(self, i: int, j: int) -> int:
        return self.first_row[(j - i) % self.order]

    def row(self, i: int) -> ShiftedRow:
        """Row i and the mod-p scalar linking it to row 0.

        first_row[0] = 1, so the scalar is simply the leading entry; the
        congruence row_i = scalar * row_0 (mod p) holds entrywise.
        """
        n = self.order
        if not 0 <= i < n:
            raise IndexError(f"row index {i} out of range 0..{n - 1}")
        values = tuple(self.first_row[(j - i) % n] for j in range(n))
        return ShiftedRow(values, values[0])

    def rows(self) -> list[list[int]]:
        n = self.order
        return [[self.first_row[(j - i) % n] for j in range(n)] for i in range(n)]

    def to_text(self) -> str:
        """Rows of space-separated integers, one line per row, newline-terminated."""
        return "".join(" ".join(str(v) for v in row) + "\n" for row in self.rows())

    def to_json_dict(self) -> dict:
        return {"p": self.p, "g": self.g, "first_row": list(self.first_row), "order": self.order}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def build_circulant(p: int, g: int | None = None) -> Circulant:
    """The circulant of the power sequence; g defaults to the smallest primitive root."""
    g = find_primitive_root(p) if g is None else g
    return Circulant(p, g, tuple(power_sequence(p, g)))


@dataclass(frozen=True)
class Spectrum:
    """All p-1 eigenvalues lambda_k = sum_j first_row[j]*exp(2*pi*i*j*k/(p-1))."""

    eigenvalues: tuple[complex, ...]
    zero_tolerance: float

    @property
    def nonzero_count(self) -> int:
        return sum(1 for z in self.eigenvalues if abs(z) > self.zero_tolerance)

    def to_json_dict(self) -> dict:
        return {
            "eigenvalues": [[z.real, z.imag] for z in self.eigenvalues],
            "nonzero_count": self.nonzero_count,
            "zero_tolerance": self.zero_tolerance,
        }


def eigenvalues(matrix: Circulant, zero_tol: float | None = None) -> Spectrum:
    """Spectrum via the direct O(n^2) DFT of the first row."""
    values = kernels.dft(list(matrix.first_row))
    tol = zero_tolerance(matrix.p) if zero_tol is None else zero_tol
    return Spectrum(tuple(values), tol)


def crosscheck_spectrum(p: int, g: int | None = None) -> float:
    """max_k |lambda_k - S(chi_k)|: DFT over shift index against direct residue sums.

    The two paths sum the same products in different orders, so the deviation
    is pure rounding noise — expected below 1e-9 * p**2.
    """
    matrix = build_circulant(p, g)
    spectrum = eigenvalues(matrix)
    return max(
        abs(spectrum.eigenvalues[k] - first_moment(CharIndex(p, matrix.g, k)))
        for k in range(matrix.order)
    )
