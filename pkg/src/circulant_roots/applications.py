"""Derived objects: rank-1 codes over GF(p), block extensions, weighted graph views.

Reduced mod p the circulant has rank 1, so its row space is a 1-dimensional
code whose generator is a permutation of 1..p-1 — every nonzero codeword has
full Hamming weight.  Stacking copies block-diagonally raises the dimension
while each block keeps full weight on its own segment.  Read as a weighted
adjacency matrix, the same matrix gives a directed circulant graph on p-1
vertices whose spectrum has exactly (p+1)/2 nonzero eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .circulant import Circulant, build_circulant, eigenvalues
from .ntheory import require_odd_prime

__all__ = [
    "ENUMERATION_BOUND",
    "LinearCode",
    "generate_code",
    "block_diagonal_code",
    "min_distance",
    "GraphSpectrumSummary",
    "graph_spectrum_summary",
    "export_graph",
]

ENUMERATION_BOUND = 10**7


@dataclass(frozen=True)
class LinearCode:
    """Linear code over GF(p) given by a full-rank generator matrix."""

    p: int
    length: int
    dimension: int
    generator: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        require_odd_prime(self.p)
        if len(self.generator) != self.dimension:
            raise ValueError("generator must have one row per dimension")
        if any(len(row) != self.length for row in self.generator):
            raise ValueError("generator rows must all have the code length")
        if any(not 0 <= v < self.p for row in self.generator for v in row):
            raise ValueError("generator entries must be reduced mod p")
        rows = [list(r) for r in self.generator]
        if rows and kernels.gf_rank(rows, self.p) != self.dimension:
            raise ValueError("generator rows are not linearly independent mod p")

    def codeword(self, message: tuple[int, ...] | list[int]) -> tuple[int, ...]:
        if len(message) != self.dimension:
            raise ValueError(f"message needs {self.dimension} coordinates")
        out = [0] * self.length
        for c, row in zip(message, self.generator):
            if c % self.p:
                for j, v in enumerate(row):
                    out[j] = (out[j] + c * v) % self.p
        return tuple(out)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "length": self.length,
            "dimension": self.dimension,
            "generator": [list(row) for row in self.generator],
        }


def generate_code(p: int, g: int | None = None) -> LinearCode:
    """The 1-dimensional code generated by the first row of the (p, g) circulant."""
    matrix = build_circulant(p, g)
    return LinearCode(p, matrix.order, 1, (matrix.first_row,))


def block_diagonal_code(p: int, g: int | None = None, blocks: int = 1) -> LinearCode:
    """blocks copies of the rank-1 generator on the diagonal: dimension = blocks."""
    if blocks < 1:
        raise ValueError(f"blocks must be >= 1, got {blocks}")
    matrix = build_circulant(p, g)
    n = matrix.order
    rows = []
    for b in range(blocks):
        row = [0] * (blocks * n)
        row[b * n : (b + 1) * n] = matrix.first_row
        rows.append(tuple(row))
    return LinearCode(p, blocks * n, blocks, tuple(rows))


def min_distance(code: LinearCode) -> int:
    """Minimum Hamming weight over all nonzero codewords, by exhausting every message."""
    total = code.p**code.dimension
    if total > ENUMERATION_BOUND:
        raise ValueError(
            f"enumeration bound exceeded: p**dimension = {total} > {ENUMERATION_BOUND}"
        )
    return kernels.min_weight([list(r) for r in code.generator], code.p)


@dataclass(frozen=True)
class GraphSpectrumSummary:
    """Spectrum of the matrix read as a weighted adjacency matrix on p-1 vertices."""

    p: int
    g: int
    num_vertices: int
    nonzero_eigenvalues: int
    zero_multiplicity: int
    spectrum: tuple[complex, ...]

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "g": self.g,
            "num_vertices": self.num_vertices,
            "nonzero_eigenvalues": self.nonzero_eigenvalues,
            "zero_multiplicity": self.zero_multiplicity,
            "spectrum": [[z.real, z.imag] for z in self.spectrum],
        }


def graph_spectrum_summary(p: int, g: int | None = None) -> GraphSpectrumSummary:
    """Eigenvalue counts for the directed weighted circulant graph of (p, g)."""
    matrix = build_circulant(p, g)
    spectrum = eigenvalues(matrix)
    nonzero = spectrum.nonzero_count
    return GraphSpectrumSummary(
        matrix.p, matrix.g, matrix.order, nonzero, matrix.order - nonzero, spectrum.eigenvalues
    )


def export_graph(p: int, g: int | None = None, fmt: str = "edge_list") -> str:
    """Directed weighted graph with edge (i -> j) of weight entry(i, j).

    The matrix is exported exactly as it stands — self-loops included, no
    symmetrization — because symmetrizing would change the spectrum the
    summary reports.  edge_list lines are "i j w"; adjacency is the plain
    matrix text.
    """
    matrix = build_circulant(p, g)
    n = matrix.order
    if fmt == "edge_list":
        return "".join(
            f"{i} {j} {matrix.entry(i, j)}\n" for i in range(n) for j in range(n)
        )
    if fmt == "adjacency":
        return matrix.to_text()
    raise ValueError(f"unknown graph format: {fmt!r} (use edge_list or adjacency)")
