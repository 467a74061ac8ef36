"""Integer arithmetic substrate: primality, factorization, primitive roots.

Everything works on plain Python ints.  The toolkit's prime range is small
(desk scale, p up to about 10**4), so deterministic trial division is used
throughout; there is no probabilistic machinery here.
"""

from __future__ import annotations

__all__ = [
    "is_prime",
    "is_odd_prime",
    "require_odd_prime",
    "odd_primes_upto",
    "factorize",
    "euler_phi",
    "pow_mod",
    "is_primitive_root",
    "require_primitive_root",
    "find_primitive_root",
    "all_primitive_roots",
    "canonical_rep",
]


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division; adequate for n <= 10**6."""
    if n < 2:
        return False
    if n in (2, 3):
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_odd_prime(n: int) -> bool:
    return n >= 3 and is_prime(n)


def require_odd_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if p == 2:
        raise ValueError("p=2 is not odd; an odd prime is required")
    return p


def odd_primes_upto(n: int) -> list[int]:
    """All odd primes p with 3 <= p <= n, ascending."""
    if n < 3:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(3, n + 1) if sieve[i]]


def factorize(n: int) -> list[int]:
    """Prime factors of n in ascending order, with multiplicity (trial division)."""
    if n < 2:
        raise ValueError(f"factorize requires n >= 2, got {n}")
    out: list[int] = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def euler_phi(n: int) -> int:
    """Count of integers in 1..n coprime to n."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1, got {n}")
    phi = n
    if n > 1:
        for q in set(factorize(n)):
            phi = phi // q * (q - 1)
    return phi


def pow_mod(base: int, exp: int, m: int) -> int:
    """base**exp mod m by binary square-and-multiply (the builtin three-arg pow)."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if exp < 0:
        raise ValueError(f"exponent must be non-negative, got {exp}")
    return pow(base, exp, m)


def is_primitive_root(g: int, p: int) -> bool:
    """True iff g generates the multiplicative group mod the odd prime p."""
    require_odd_prime(p)
    if not 2 <= g <= p - 1:
        return False
    return all(pow(g, (p - 1) // q, p) != 1 for q in set(factorize(p - 1)))


def require_primitive_root(g: int, p: int) -> int:
    if not is_primitive_root(g, p):
        raise ValueError(f"g={g} is not a primitive root modulo {p}")
    return g


def find_primitive_root(p: int) -> int:
    """Smallest primitive root modulo the odd prime p."""
    require_odd_prime(p)
    qs = set(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def all_primitive_roots(p: int) -> list[int]:
    """Every primitive root modulo p, ascending (there are euler_phi(p-1) of them)."""
    require_odd_prime(p)
    qs = set(factorize(p - 1))
    return [g for g in range(2, p) if all(pow(g, (p - 1) // q, p) != 1 for q in qs)]


def canonical_rep(x: int, p: int) -> int:
    """The representative in {1, ..., p-1} of the residue class of x mod p.

    The zero class has no representative here and is rejected.
    """
    r = x % p
    if r == 0:
        raise ValueError(f"{x} is divisible by {p}; the zero class has no nonzero representative")
    return r
