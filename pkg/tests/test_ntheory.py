import pytest
from hypothesis import given, strategies as st

from circulant_roots import ntheory
from oracles import brute_primitive_roots, multiplicative_order, primes_upto


def test_is_prime_examples():
    assert ntheory.is_prime(5)
    assert not ntheory.is_prime(1)
    assert not ntheory.is_prime(91)  # 7 * 13


def test_is_prime_exhaustive_small():
    for n in range(2000):
        brute = n >= 2 and all(n % d for d in range(2, n))
        assert ntheory.is_prime(n) == brute, n


def test_factorize_examples():
    assert ntheory.factorize(10) == [2, 5]
    assert ntheory.factorize(4) == [2, 2]
    assert ntheory.factorize(12) == [2, 2, 3]


def test_factorize_rejects_small():
    for n in (-3, 0, 1):
        with pytest.raises(ValueError):
            ntheory.factorize(n)


@given(st.integers(min_value=2, max_value=10**6))
def test_factorize_product_and_order(n):
    factors = ntheory.factorize(n)
    prod = 1
    for q in factors:
        assert ntheory.is_prime(q)
        prod *= q
    assert prod == n
    assert factors == sorted(factors)


def test_pow_mod_examples():
    assert ntheory.pow_mod(2, 3, 5) == 3
    assert ntheory.pow_mod(2, 0, 5) == 1
    assert ntheory.pow_mod(3, 6, 7) == 1  # g**(p-1) = 1


def test_pow_mod_rejects():
    with pytest.raises(ValueError):
        ntheory.pow_mod(2, 3, 1)
    with pytest.raises(ValueError):
        ntheory.pow_mod(2, -1, 5)


def test_find_primitive_root_paper_points():
    assert ntheory.find_primitive_root(5) == 2
    assert ntheory.find_primitive_root(7) == 3
    assert ntheory.find_primitive_root(11) == 2


def test_all_primitive_roots_frozen():
    assert ntheory.all_primitive_roots(5) == [2, 3]
    assert ntheory.all_primitive_roots(3) == [2]
    assert ntheory.all_primitive_roots(7) == [3, 5]


@pytest.mark.parametrize("p", primes_upto(150))
def test_primitive_roots_against_order_oracle(p):
    roots = ntheory.all_primitive_roots(p)
    assert roots == brute_primitive_roots(p)
    assert len(roots) == ntheory.euler_phi(p - 1)
    assert ntheory.find_primitive_root(p) == min(roots)


@pytest.mark.parametrize("p", primes_upto(100))
def test_primitive_root_powers_are_a_permutation(p):
    g = ntheory.find_primitive_root(p)
    powers = set()
    x = 1
    for _ in range(p - 1):
        powers.add(x)
        x = x * g % p
    assert powers == set(range(1, p))
    assert multiplicative_order(g, p) == p - 1


def test_is_primitive_root_rejects_bad_p():
    with pytest.raises(ValueError):
        ntheory.is_primitive_root(2, 9)
    with pytest.raises(ValueError):
        ntheory.is_primitive_root(1, 2)


def test_canonical_rep_examples():
    assert ntheory.canonical_rep(-1, 5) == 4
    assert ntheory.canonical_rep(8, 5) == 3
    with pytest.raises(ValueError):
        ntheory.canonical_rep(0, 5)


@given(st.sampled_from(primes_upto(300)), st.integers(min_value=-10**9, max_value=10**9))
def test_canonical_rep_reflection(p, x):
    if x % p == 0:
        with pytest.raises(ValueError):
            ntheory.canonical_rep(x, p)
    else:
        r = ntheory.canonical_rep(x, p)
        assert 1 <= r <= p - 1
        assert ntheory.canonical_rep(-x, p) == p - r


def test_odd_primes_upto_matches_oracle():
    assert ntheory.odd_primes_upto(200) == primes_upto(200)
    assert ntheory.odd_primes_upto(2) == []


def test_euler_phi_small():
    assert [ntheory.euler_phi(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]
