import cmath
import math

import pytest

from circulant_roots import characters as ch
from circulant_roots.ntheory import all_primitive_roots, find_primitive_root
from oracles import naive_first_moment, naive_gauss_sum, naive_jacobi_sum, primes_upto


def idx(p, k, g=None):
    return ch.CharIndex(p, find_primitive_root(p) if g is None else g, k)


def test_char_index_validation():
    with pytest.raises(ValueError):
        ch.CharIndex(5, 4, 1)  # 4 = 2**2 is not a generator mod 5
    with pytest.raises(ValueError):
        ch.CharIndex(5, 2, 4)  # k out of range
    with pytest.raises(ValueError):
        ch.CharIndex(9, 2, 1)  # not prime


def test_mult_char_definition_points():
    assert cmath.isclose(ch.mult_char(idx(5, 1), 2), 1j, abs_tol=1e-12)
    assert cmath.isclose(ch.mult_char(idx(5, 2), 4), 1 + 0j, abs_tol=1e-12)
    assert ch.mult_char(idx(5, 1), 0) == 0j
    assert ch.mult_char(idx(5, 3), 10) == 0j  # reduced mod p first


@pytest.mark.parametrize("p", primes_upto(13))
def test_mult_char_complete_multiplicativity(p):
    g = find_primitive_root(p)
    for k in range(p - 1):
        index = ch.CharIndex(p, g, k)
        for x in range(1, p):
            for y in range(1, p):
                lhs = ch.mult_char(index, x) * ch.mult_char(index, y)
                assert abs(lhs - ch.mult_char(index, x * y % p)) < 1e-12


@pytest.mark.parametrize("p", primes_upto(50))
def test_char_orthogonality_and_sign_at_minus_one(p):
    g = find_primitive_root(p)
    for k in range(p - 1):
        index = ch.CharIndex(p, g, k)
        total = sum(ch.mult_char(index, x) for x in range(1, p))
        if k == 0:
            assert abs(total - (p - 1)) < 1e-9
        else:
            assert abs(total) < 1e-9
        assert abs(ch.mult_char(index, -1) - (-1) ** k) < 1e-12


def test_additive_char_examples():
    assert cmath.isclose(ch.additive_char(5, 0), 1 + 0j, abs_tol=1e-12)
    assert cmath.isclose(ch.additive_char(5, 5), 1 + 0j, abs_tol=1e-12)
    for p in (3, 5, 7, 11, 13):
        assert abs(sum(ch.additive_char(p, t) for t in range(p))) < 1e-12


def test_gauss_sum_examples():
    # trivial character: sum of e_p over nonzero classes
    assert cmath.isclose(ch.gauss_sum(idx(5, 0)), -1 + 0j, abs_tol=1e-12)
    assert math.isclose(abs(ch.gauss_sum(idx(5, 1))), math.sqrt(5), rel_tol=1e-9)
    # quadratic character at p=5: real, positive
    assert cmath.isclose(ch.gauss_sum(idx(5, 2)), complex(math.sqrt(5), 0), abs_tol=1e-9)


@pytest.mark.parametrize("p", primes_upto(60))
def test_gauss_sum_against_naive_oracle(p):
    g = find_primitive_root(p)
    for k in range(p - 1):
        assert abs(ch.gauss_sum(ch.CharIndex(p, g, k)) - naive_gauss_sum(p, g, k)) < 1e-9


@pytest.mark.parametrize("p", primes_upto(200))
def test_gauss_magnitude_all_nontrivial(p):
    g = find_primitive_root(p)
    for k in range(1, p - 1):
        mag2 = abs(ch.gauss_sum(ch.CharIndex(p, g, k))) ** 2
        assert math.isclose(mag2, p, rel_tol=1e-6)
        assert ch.check_gauss_magnitude(ch.CharIndex(p, g, k)).verdict == ch.MATCH


def test_jacobi_sum_frozen_values():
    assert abs(ch.jacobi_sum(idx(5, 1), idx(5, 2)) - (1 + 2j)) < 1e-12
    assert abs(ch.jacobi_sum(idx(5, 0), idx(5, 0)) - 3) < 1e-12  # p - 2 surviving terms
    assert math.isclose(abs(ch.jacobi_sum(idx(7, 1), idx(7, 2))), math.sqrt(7), rel_tol=1e-9)


def test_jacobi_sum_rejects_mismatched_groups():
    with pytest.raises(ValueError):
        ch.jacobi_sum(idx(5, 1), idx(7, 1))
    with pytest.raises(ValueError):
        ch.jacobi_sum(ch.CharIndex(5, 2, 1), ch.CharIndex(5, 3, 1))


@pytest.mark.parametrize("p", primes_upto(30))
def test_jacobi_sum_against_naive_oracle(p):
    g = find_primitive_root(p)
    for k1 in range(p - 1):
        for k2 in range(p - 1):
            got = ch.jacobi_sum(ch.CharIndex(p, g, k1), ch.CharIndex(p, g, k2))
            assert abs(got - naive_jacobi_sum(p, g, k1, k2)) < 1e-9


def test_first_moment_frozen_values():
    assert cmath.isclose(ch.first_moment(idx(5, 0)), 10 + 0j, abs_tol=1e-12)
    assert abs(ch.first_moment(idx(5, 2))) < ch.zero_tolerance(5)
    assert abs(ch.first_moment(idx(5, 1)) - (-3 - 1j)) < 1e-12


@pytest.mark.parametrize("p", primes_upto(60))
def test_first_moment_against_naive_oracle(p):
    g = find_primitive_root(p)
    for k in range(p - 1):
        got = ch.first_moment(ch.CharIndex(p, g, k))
        assert abs(got - naive_first_moment(p, g, k)) < 1e-9


@pytest.mark.parametrize("p", primes_upto(100))
def test_first_moment_conjugate_symmetry(p):
    g = find_primitive_root(p)
    for k in range(1, p - 1):
        lhs = ch.first_moment(ch.CharIndex(p, g, p - 1 - k))
        rhs = ch.first_moment(ch.CharIndex(p, g, k)).conjugate()
        assert abs(lhs - rhs) < 1e-9


def test_parity_identity_examples():
    a = ch.check_parity_identity(idx(5, 0))
    assert a.verdict == ch.MATCH
    assert cmath.isclose(a.lhs, 20 + 0j, abs_tol=1e-9)
    assert cmath.isclose(a.rhs, 20 + 0j, abs_tol=1e-9)
    assert ch.check_parity_identity(idx(5, 2)).verdict == ch.MATCH
    assert ch.check_parity_identity(idx(5, 1)).verdict == ch.MATCH


@pytest.mark.parametrize("p", primes_upto(200))
def test_parity_identity_all_k(p):
    g = find_primitive_root(p)
    for k in range(p - 1):
        assert ch.check_parity_identity(ch.CharIndex(p, g, k)).verdict == ch.MATCH


def test_jacobi_gauss_examples():
    a = ch.check_jacobi_gauss(idx(5, 1), idx(5, 2))
    assert a.verdict == ch.MATCH and a.residual < 1e-9
    assert ch.check_jacobi_gauss(idx(5, 1), idx(5, 3)).verdict == ch.NOT_APPLICABLE
    assert ch.check_jacobi_gauss(idx(5, 0), idx(5, 2)).verdict == ch.NOT_APPLICABLE
    b = ch.check_jacobi_gauss(idx(7, 2), idx(7, 3))
    assert b.verdict == ch.MATCH and b.residual < 1e-9


@pytest.mark.parametrize("p", primes_upto(50))
def test_jacobi_gauss_all_applicable(p):
    g = find_primitive_root(p)
    for k1 in range(1, p - 1):
        for k2 in range(1, p - 1):
            audit = ch.check_jacobi_gauss(ch.CharIndex(p, g, k1), ch.CharIndex(p, g, k2))
            expected = ch.NOT_APPLICABLE if (k1 + k2) % (p - 1) == 0 else ch.MATCH
            assert audit.verdict == expected, (p, k1, k2)


def test_lemma_formula_audit_reports_the_discrepancy():
    audit = ch.audit_lemma_formula(idx(5, 1))
    assert audit.verdict == ch.MISMATCH
    assert math.isclose(abs(audit.lhs), math.sqrt(10), rel_tol=1e-9)
    assert math.isclose(abs(audit.rhs), math.sqrt(5), rel_tol=1e-9)
    assert ch.audit_lemma_formula(idx(5, 2)).verdict == ch.NOT_APPLICABLE
    conj = ch.audit_lemma_formula(idx(5, 3))
    assert abs(conj.lhs - (-3 + 1j)) < 1e-12  # conjugate of S(chi_1)
    assert conj.verdict == ch.MISMATCH


def test_classify_first_moments_small_cases():
    labels5 = [row.label for row in ch.classify_first_moments(5)]
    assert labels5 == [ch.TRIVIAL_NONZERO, ch.ODD_NONZERO, ch.EVEN_ZERO, ch.ODD_NONZERO]
    labels3 = [row.label for row in ch.classify_first_moments(3)]
    assert labels3 == [ch.TRIVIAL_NONZERO, ch.ODD_NONZERO]
    nonzero7 = sum(1 for row in ch.classify_first_moments(7) if row.label != ch.EVEN_ZERO)
    assert nonzero7 == 4


@pytest.mark.parametrize("p", primes_upto(200))
def test_classification_and_separation_gap(p):
    rows = ch.classify_first_moments(p)
    tol = ch.zero_tolerance(p)
    assert sum(1 for r in rows if r.label != ch.EVEN_ZERO) == (p + 1) // 2
    odd_min = min(abs(r.value) for r in rows if r.label == ch.ODD_NONZERO)
    assert odd_min > 10 * tol


def test_classification_is_root_independent_for_small_p():
    for p in (5, 7, 11, 13):
        for g in all_primitive_roots(p):
            rows = ch.classify_first_moments(p, g)
            assert sum(1 for r in rows if r.label != ch.EVEN_ZERO) == (p + 1) // 2


def test_audit_record_shape():
    rec = ch.check_jacobi_gauss(idx(5, 1), idx(5, 2)).as_record()
    assert list(rec) == ["p", "g", "k", "k2", "lhs", "rhs", "residual", "verdict"]
    assert rec["lhs"] == [pytest.approx(1.0), pytest.approx(2.0)]
    rec2 = ch.check_parity_identity(idx(5, 1)).as_record()
    assert "k2" not in rec2
