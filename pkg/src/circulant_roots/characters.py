"""Multiplicative and additive characters mod p, and the classical sums over them.

Fixing a primitive root g makes the character group mod an odd prime p cyclic
of order p-1: index k labels the character that sends g**j to
exp(2*pi*i*k*j/(p-1)), extended by 0 on the zero class.  Evaluation goes
through a discrete-log table per (p, g), built once and cached.

All sums are evaluated by direct O(p) summation in double-precision complex
arithmetic.  At the supported scale (p <= 10**4) the accumulated rounding is
orders of magnitude below the sqrt(p)-sized quantities of interest, so exact
cyclotomic arithmetic would buy nothing here.

Identity checks return an `IdentityAudit` carrying both sides, the residual,
and a verdict.  One check (`audit_lemma_formula`) exists precisely because
the closed form it examines does NOT survive direct computation; it always
reports and never asserts.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .ntheory import (
    find_primitive_root,
    require_odd_prime,
    require_primitive_root,
)

__all__ = [
    "MATCH",
    "MISMATCH",
    "NOT_APPLICABLE",
    "TRIVIAL_NONZERO",
    "EVEN_ZERO",
    "ODD_NONZERO",
    "InvariantViolation",
    "zero_tolerance",
    "CharIndex",
    "quadratic_index",
    "char_indices",
    "mult_char",
    "additive_char",
    "gauss_sum",
    "jacobi_sum",
    "first_moment",
    "IdentityAudit",
    "check_parity_identity",
    "check_jacobi_gauss",
    "check_gauss_magnitude",
    "audit_lemma_formula",
    "FirstMomentClass",
    "classify_first_moments",
]

MATCH = "MATCH"
MISMATCH = "MISMATCH"
NOT_APPLICABLE = "NOT_APPLICABLE"

TRIVIAL_NONZERO = "TRIVIAL_NONZERO"
EVEN_ZERO = "EVEN_ZERO"
ODD_NONZERO = "ODD_NONZERO"


class InvariantViolation(RuntimeError):
    """A computed value contradicts a proven statement: a genuine bug or counterexample."""


def zero_tolerance(p: int) -> float:
    """Threshold below which a sum of p-1 terms of size <= p counts as zero."""
    return 1e-9 * p * (p - 1)


def _audit_tolerance(lhs: complex, rhs: complex) -> float:
    return 1e-8 * max(abs(lhs), abs(rhs), 1.0)


@lru_cache(maxsize=None)
def _unit_roots(n: int) -> tuple[complex, ...]:
    """exp(2*pi*i*m/n) for m = 0..n-1."""
    return tuple(cmath.exp(2j * cmath.pi * m / n) for m in range(n))


@lru_cache(maxsize=None)
def _dlog_table(p: int, g: int) -> tuple[int, ...]:
    """table[x] = j with g**j = x (mod p) for x in 1..p-1; slot 0 is unused.

    Construction self-check: even exponents must be exactly the quadratic
    residues (Euler's criterion), i.e. the order-2 character is the Legendre
    symbol.
    """
    require_primitive_root(g, p)
    table = [0] * p
    x = 1
    for j in range(p - 1):
        table[x] = j
        x = x * g % p
    if x != 1:
        raise InvariantViolation(f"g={g} does not have order p-1 modulo {p}")
    for x in range(1, p):
        if (pow(x, (p - 1) // 2, p) == 1) != (table[x] % 2 == 0):
            raise InvariantViolation(
                f"quadratic character disagrees with Euler's criterion at x={x} (p={p}, g={g})"
            )
    return tuple(table)


@dataclass(frozen=True)
class CharIndex:
    """Index (p, g, k) of the character sending g**j to exp(2*pi*i*k*j/(p-1)).

    k = 0 is the trivial character; k odd/even decides the sign at -1,
    because -1 = g**((p-1)/2).
    """

    p: int
    g: int
    k: int

    def __post_init__(self) -> None:
        require_primitive_root(self.g, self.p)
        if not 0 <= self.k <= self.p - 2:
            raise ValueError(f"character index k must lie in 0..p-2, got {self.k}")

    @property
    def is_trivial(self) -> bool:
        return self.k == 0

    @property
    def is_even(self) -> bool:
        return self.k % 2 == 0

    @property
    def is_odd(self) -> bool:
        return self.k % 2 == 1

    def value_at_minus_one(self) -> int:
        return -1 if self.k % 2 else 1

    def times(self, other: "CharIndex") -> "CharIndex":
        _require_same_group(self, other)
        return CharIndex(self.p, self.g, (self.k + other.k) % (self.p - 1))


def _require_same_group(a: CharIndex, b: CharIndex) -> None:
    if a.p != b.p or a.g != b.g:
        raise ValueError(
            f"characters live in different groups: (p={a.p}, g={a.g}) vs (p={b.p}, g={b.g})"
        )


def quadratic_index(p: int, g: int | None = None) -> CharIndex:
    """The order-2 (Legendre) character: index (p-1)/2."""
    g = find_primitive_root(p) if g is None else g
    return CharIndex(p, g, (p - 1) // 2)


def char_indices(p: int, g: int | None = None) -> list[CharIndex]:
    """All p-1 character indices for the group fixed by (p, g)."""
    g = find_primitive_root(p) if g is None else g
    require_primitive_root(g, p)
    return [CharIndex(p, g, k) for k in range(p - 1)]


def mult_char(idx: CharIndex, x: int) -> complex:
    """chi_k(x): 0 on the zero class, exp(2*pi*i*k*dlog(x)/(p-1)) otherwise."""
    r = x % idx.p
    if r == 0:
        return 0j
    n = idx.p - 1
    return _unit_roots(n)[idx.k * _dlog_table(idx.p, idx.g)[r] % n]


def additive_char(p: int, t: int) -> complex:
    """e_p(t) = exp(2*pi*i*t/p)."""
    require_odd_prime(p)
    return _unit_roots(p)[t % p]


@lru_cache(maxsize=None)
def _gauss(p: int, g: int, k: int) -> complex:
    dlog = _dlog_table(p, g)
    wn = _unit_roots(p - 1)
    wp = _unit_roots(p)
    n = p - 1
    return sum((wn[k * dlog[x] % n] * wp[x] for x in range(1, p)), 0j)


def gauss_sum(idx: CharIndex) -> complex:
    """G(chi) = sum over x in F_p of chi(x)*e_p(x), by direct summation."""
    return _gauss(idx.p, idx.g, idx.k)


def jacobi_sum(idx1: CharIndex, idx2: CharIndex) -> complex:
    """J(chi, psi) = sum over x in F_p of chi(x)*psi(1-x), by direct summation.

    The zero-class convention kills x = 0 and x = 1, so the sum runs over the
    remaining p-2 residues.
    """
    _require_same_group(idx1, idx2)
    p, g = idx1.p, idx1.g
    n = p - 1
    dlog = _dlog_table(p, g)
    wn = _unit_roots(n)
    k1, k2 = idx1.k, idx2.k
    return sum((wn[(k1 * dlog[x] + k2 * dlog[(1 - x) % p]) % n] for x in range(2, p)), 0j)


@lru_cache(maxsize=None)
def _first_moment(p: int, g: int, k: int) -> complex:
    dlog = _dlog_table(p, g)
    wn = _unit_roots(p - 1)
    n = p - 1
    return sum((x * wn[k * dlog[x] % n] for x in range(1, p)), 0j)


def first_moment(idx: CharIndex) -> complex:
    """S(chi) = sum over x in 1..p-1 of x*chi(x), weighting by the representative."""
    return _first_moment(idx.p, idx.g, idx.k)


def _char_total(p: int, g: int, k: int) -> complex:
    """sum of chi_k over the nonzero classes: p-1 for k = 0, else 0 (orthogonality)."""
    dlog = _dlog_table(p, g)
    wn = _unit_roots(p - 1)
    n = p - 1
    return sum((wn[k * dlog[x] % n] for x in range(1, p)), 0j)


@dataclass(frozen=True)
class IdentityAudit:
    """Both sides of a checked identity, the residual, and a verdict."""

    p: int
    g: int
    k: int
    lhs: complex
    rhs: complex
    residual: float
    verdict: str
    k2: int | None = None

    def __post_init__(self) -> None:
        for z in (self.lhs, self.rhs):
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise InvariantViolation("non-finite value in an identity audit")

    def as_record(self) -> dict:
        """JSON-ready record: {"p","g","k","k2"?,"lhs":[re,im],"rhs":[re,im],"residual","verdict"}."""
        rec: dict = {"p": self.p, "g": self.g, "k": self.k}
        if self.k2 is not None:
            rec["k2"] = self.k2
        rec["lhs"] = [self.lhs.real, self.lhs.imag]
        rec["rhs"] = [self.rhs.real, self.rhs.imag]
        rec["residual"] = self.residual
        rec["verdict"] = self.verdict
        return rec


def _audited(p: int, g: int, k: int, lhs: complex, rhs: complex, k2: int | None = None) -> IdentityAudit:
    residual = abs(lhs - rhs)
    verdict = MATCH if residual <= _audit_tolerance(lhs, rhs) else MISMATCH
    return IdentityAudit(p, g, k, lhs, rhs, residual, verdict, k2)


def check_parity_identity(idx: CharIndex) -> IdentityAudit:
    """(1 + chi(-1))*S(chi) against p*chi(-1)*(sum of chi over nonzero classes).

    Holds for every k, including the trivial character; the exact sign
    (-1)**k is used for chi(-1) on both sides.
    """
    sign = idx.value_at_minus_one()
    lhs = (1 + sign) * first_moment(idx)
    rhs = idx.p * sign * _char_total(idx.p, idx.g, idx.k)
    return _audited(idx.p, idx.g, idx.k, lhs, rhs)


def check_jacobi_gauss(idx1: CharIndex, idx2: CharIndex) -> IdentityAudit:
    """J(chi, psi) against G(chi)*G(psi)/G(chi*psi).

    Applicable only when chi, psi, and chi*psi are all nontrivial; otherwise
    the hypothesis fails and the verdict is NOT_APPLICABLE.
    """
    _require_same_group(idx1, idx2)
    p, g = idx1.p, idx1.g
    k3 = (idx1.k + idx2.k) % (p - 1)
    if idx1.k == 0 or idx2.k == 0 or k3 == 0:
        return IdentityAudit(p, g, idx1.k, 0j, 0j, 0.0, NOT_APPLICABLE, idx2.k)
    lhs = jacobi_sum(idx1, idx2)
    rhs = _gauss(p, g, idx1.k) * _gauss(p, g, idx2.k) / _gauss(p, g, k3)
    return _audited(p, g, idx1.k, lhs, rhs, k2=idx2.k)


def check_gauss_magnitude(idx: CharIndex) -> IdentityAudit:
    """|G(chi)|**2 against p, for nontrivial chi (relative tolerance 1e-6)."""
    if idx.is_trivial:
        return IdentityAudit(idx.p, idx.g, idx.k, 0j, 0j, 0.0, NOT_APPLICABLE)
    lhs = complex(abs(_gauss(idx.p, idx.g, idx.k)) ** 2, 0.0)
    rhs = complex(idx.p, 0.0)
    residual = abs(lhs - rhs)
    verdict = MATCH if residual <= 1e-6 * idx.p else MISMATCH
    return IdentityAudit(idx.p, idx.g, idx.k, lhs, rhs, residual, verdict)


def audit_lemma_formula(idx: CharIndex) -> IdentityAudit:
    """First moment S(chi) for odd chi against the closed form -G(chi)G(chi*rho)/G(rho).

    This closed form is audited, never asserted: already at p=5, k=1 direct
    summation gives |S| = sqrt(10) while the quotient gives sqrt(5), so the
    two sides genuinely disagree.  Callers get both values and the verdict
    the numbers dictate.  (The vanishing/nonvanishing dichotomy that the
    closed form was meant to support is checked independently by
    `classify_first_moments` and does hold.)
    """
    if idx.is_even:
        return IdentityAudit(idx.p, idx.g, idx.k, 0j, 0j, 0.0, NOT_APPLICABLE)
    p, g, k = idx.p, idx.g, idx.k
    half = (p - 1) // 2
    lhs = first_moment(idx)
    rhs = -_gauss(p, g, k) * _gauss(p, g, (k + half) % (p - 1)) / _gauss(p, g, half)
    return _audited(p, g, k, lhs, rhs)


class FirstMomentClass(NamedTuple):
    k: int
    value: complex
    label: str


def classify_first_moments(p: int, g: int | None = None) -> list[FirstMomentClass]:
    """S(chi_k) for k = 0..p-2, each labeled by its theoretical class.

    Classes: TRIVIAL_NONZERO (k=0, value p(p-1)/2), EVEN_ZERO (k even, k!=0),
    ODD_NONZERO (k odd).  Every magnitude is cross-checked against the zero
    tolerance; a contradiction raises InvariantViolation rather than passing
    silently.  Exactly (p+1)/2 entries are non-vanishing.
    """
    g = find_primitive_root(p) if g is None else g
    require_primitive_root(g, p)
    tol = zero_tolerance(p)
    out: list[FirstMomentClass] = []
    for k in range(p - 1):
        value = _first_moment(p, g, k)
        if k == 0:
            label = TRIVIAL_NONZERO
        elif k % 2 == 0:
            label = EVEN_ZERO
        else:
            label = ODD_NONZERO
        mag = abs(value)
        if label == EVEN_ZERO and mag > tol:
            raise InvariantViolation(
                f"S(chi_{k}) should vanish (even k) but |S| = {mag:.3e} at p={p}, g={g}"
            )
        if label != EVEN_ZERO and mag <= tol:
            raise InvariantViolation(
                f"S(chi_{k}) should not vanish but |S| = {mag:.3e} at p={p}, g={g}"
            )
        out.append(FirstMomentClass(k, value, label))
    nonzero = sum(1 for row in out if row.label != EVEN_ZERO)
    if nonzero != (p + 1) // 2:
        raise InvariantViolation(f"expected (p+1)/2 = {(p + 1) // 2} nonzero moments, found {nonzero}")
    return out
