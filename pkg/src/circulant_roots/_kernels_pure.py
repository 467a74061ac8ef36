"""Pure-Python (numpy) fallback for the hot-loop kernels.

Same contracts as the compiled `_kernels_cy` module; `circulant_roots.kernels`
picks one of the two at import time.  These versions favor clarity and
vectorize with numpy where it is natural; they stay correct at any supported
size, just slower than the compiled twins on the large end.
"""

from __future__ import annotations

import numpy as np


def dft(seq) -> list[complex]:
    """out[k] = sum_j seq[j] * exp(2*pi*i*j*k/n), for k = 0..n-1.

    Direct O(n^2) evaluation; the angle index j*k is reduced mod n before
    the exponential so the argument never grows.
    """
    n = len(seq)
    if n == 0:
        return []
    a = np.asarray(seq, dtype=np.float64)
    j = np.arange(n, dtype=np.int64)
    tau = 2.0 * np.pi / n
    out = []
    for k in range(n):
        ang = tau * ((j * k) % n)
        out.append(complex(np.dot(a, np.cos(ang)), np.dot(a, np.sin(ang))))
    return out


def gf_rank(rows, p: int) -> int:
    """Rank over GF(p) by Gaussian elimination; entries must already lie in [0, p)."""
    m = np.asarray(rows, dtype=np.int64)
    if m.size == 0:
        return 0
    nr, nc = m.shape
    r = 0
    for c in range(nc):
        if r == nr:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r, c:] = m[r, c:] * inv % p
        factors = m[r + 1 :, c]
        if factors.any():
            m[r + 1 :, c:] = (m[r + 1 :, c:] - factors[:, None] * m[r, c:][None, :]) % p
        r += 1
    return r


def min_weight(gen, p: int) -> int:
    """Minimum Hamming weight over the nonzero codewords spanned by `gen` mod p.

    Walks all p**k message vectors (k = number of rows) in chunks; entries of
    `gen` must already lie in [0, p).  Messages mapping to the zero codeword
    (possible only for dependent rows) are not counted.
    """
    G = np.asarray(gen, dtype=np.int64)
    k, n = G.shape
    total = p**k
    powers = (p ** np.arange(k)).astype(np.int64)
    best = n
    chunk = 1 << 14
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % p
        weights = np.count_nonzero(digits @ G % p, axis=1)
        nonzero = weights[weights > 0]
        if nonzero.size:
            best = min(best, int(nonzero.min()))
    return best
