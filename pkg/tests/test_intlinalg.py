import pytest
from hypothesis import given, settings, strategies as st

from circulant_roots import intlinalg as la
from circulant_roots.circulant import build_circulant
from circulant_roots.ntheory import all_primitive_roots
from oracles import fraction_determinant, fraction_rank, minors_gcd, primes_upto


def tp_rows(p, g=None):
    return build_circulant(p, g).rows()


small_matrices = st.integers(min_value=1, max_value=6).flatmap(
    lambda nr: st.integers(min_value=1, max_value=6).flatmap(
        lambda nc: st.lists(
            st.lists(st.integers(min_value=-30, max_value=30), min_size=nc, max_size=nc),
            min_size=nr,
            max_size=nr,
        )
    )
)


# ---------------------------------------------------------------- rank


def test_rank_rational_paper_points():
    assert la.rank_rational(tp_rows(5, 2)) == 3
    assert la.rank_rational(tp_rows(7, 3)) == 4
    assert la.rank_rational([[1, 0], [0, 1]]) == 2


def test_rank_mod_p_paper_points():
    assert la.rank_mod_p(tp_rows(5, 2), 5) == 1
    assert la.rank_mod_p(tp_rows(11, 2), 11) == 1
    assert la.rank_mod_p([[1, 0], [0, 1]], 5) == 2


def test_rank_mod_p_validates_modulus():
    with pytest.raises(ValueError):
        la.rank_mod_p([[1]], 4)
    with pytest.raises(ValueError):
        la.rank_mod_p([[1]], 2)


@pytest.mark.parametrize("p", primes_upto(100))
def test_rank_duality_up_to_100(p):
    rows = tp_rows(p)
    assert la.rank_rational(rows) == (p + 1) // 2
    assert la.rank_mod_p(rows, p) == 1


@pytest.mark.parametrize("p", primes_upto(31))
def test_rank_is_primitive_root_independent(p):
    expected = (p + 1) // 2
    for g in all_primitive_roots(p):
        assert la.rank_rational(tp_rows(p, g)) == expected


@pytest.mark.parametrize("p", primes_upto(31))
def test_rank_mod_other_primes_sees_full_rank(p):
    rows = tp_rows(p)
    expected = (p + 1) // 2
    for q in (3, 5, 7, 11, 13):
        if q != p:
            assert la.rank_mod_p(rows, q) == expected, (p, q)


@given(small_matrices)
def test_rank_rational_matches_fraction_oracle(rows):
    assert la.rank_rational(rows) == fraction_rank(rows)


square_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-20, max_value=20), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


@given(square_matrices)
def test_determinant_matches_fraction_oracle(rows):
    det = fraction_determinant(rows)
    assert det.denominator == 1
    assert la.determinant(rows) == int(det)


# ---------------------------------------------------------------- smith form


def test_smith_form_paper_table():
    assert la.smith_normal_form(tp_rows(5, 2)).factors.diagonal == (1, 5, 5, 0)
    assert la.smith_normal_form(tp_rows(7, 3)).factors.diagonal == (1, 7, 7, 7, 0, 0)
    assert la.smith_normal_form(tp_rows(11, 2)).factors.diagonal == (
        1, 11, 11, 11, 11, 11, 0, 0, 0, 0,
    )


def _assert_valid_decomposition(rows, dec):
    m = la.IntMatrix.from_rows(rows)
    d = la.matmul(la.matmul(dec.u, m), dec.v)
    diag = dec.factors.diagonal
    for i in range(d.rows):
        for j in range(d.cols):
            assert d.at(i, j) == (diag[i] if i == j else 0)
    assert abs(la.determinant(dec.u)) == 1
    assert abs(la.determinant(dec.v)) == 1


@pytest.mark.parametrize("p", (3, 5, 7, 11, 13))
def test_smith_multipliers_verify_exactly(p):
    rows = tp_rows(p)
    dec = la.smith_normal_form(rows, multipliers=True)
    _assert_valid_decomposition(rows, dec)


@given(small_matrices)
@settings(max_examples=60)
def test_smith_form_properties_random(rows):
    dec = la.smith_normal_form(rows, multipliers=True)
    # chain and sign constraints are enforced by the InvariantFactors constructor
    assert dec.factors.nonzero_count == fraction_rank(rows)
    _assert_valid_decomposition(rows, dec)


@given(
    st.lists(
        st.lists(st.integers(min_value=-12, max_value=12), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
@settings(max_examples=40)
def test_smith_diagonal_matches_minor_gcds(rows):
    diag = la.smith_normal_form(rows).factors.diagonal
    prod = 1
    for k in range(1, 4):
        prod_k = minors_gcd(rows, k)
        expected = prod * diag[k - 1]
        assert prod_k == expected  # d_1*...*d_k = gcd of k x k minors
        if expected == 0:
            break
        prod = prod_k


def test_invariant_factors_validation():
    with pytest.raises(ValueError):
        la.InvariantFactors((2, 3))  # 2 does not divide 3
    with pytest.raises(ValueError):
        la.InvariantFactors((0, 1))  # zero before nonzero
    with pytest.raises(ValueError):
        la.InvariantFactors((-1, 2))
    assert la.InvariantFactors((1, 5, 5, 0)).nonzero_count == 3
    assert la.InvariantFactors((1, 5, 5, 0)).to_json() == "[1, 5, 5, 0]"


def test_snf_conjecture_reports():
    r5 = la.check_snf_conjecture(5, 2)
    assert r5.holds and r5.diagonal.diagonal == (1, 5, 5, 0)
    assert la.check_snf_conjecture(7, 3).holds
    r13 = la.check_snf_conjecture(13)
    assert r13.holds and r13.diagonal.diagonal == (1,) + (13,) * 6 + (0,) * 5
    with pytest.raises(ValueError):
        la.check_snf_conjecture(211)


@pytest.mark.parametrize("p", primes_upto(31))
def test_smith_diagonal_is_primitive_root_independent(p):
    reference = la.smith_normal_form(tp_rows(p)).factors.diagonal
    for g in all_primitive_roots(p):
        assert la.smith_normal_form(tp_rows(p, g)).factors.diagonal == reference


# ---------------------------------------------------------------- plumbing


def test_matrix_text_roundtrip():
    m = la.IntMatrix.from_rows([[1, -2, 3], [4, 5, -6]])
    text = la.format_matrix_text(m)
    assert text == "2 3\n1 -2 3\n4 5 -6\n"
    assert la.read_matrix_text(text) == m
    with pytest.raises(ValueError):
        la.read_matrix_text("2 3\n1 2 3\n")


def test_int_matrix_validation():
    with pytest.raises(ValueError):
        la.IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(ValueError):
        la.IntMatrix.from_rows([[1, 2], [3]])


def test_matmul_identity():
    m = la.IntMatrix.from_rows([[1, 2], [3, 4]])
    eye = la.IntMatrix.identity(2)
    assert la.matmul(m, eye) == m
    assert la.matmul(eye, m) == m
