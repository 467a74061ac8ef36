# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot-loop kernels: dense DFT, GF(p) elimination, codeword weight scan.

Same contracts as `_kernels_pure`; `circulant_roots.kernels` picks one of the
two at import time.  Inputs arrive as plain Python sequences and are copied
into C buffers, so callers never depend on the extension being present.
"""

from libc.math cimport cos, sin
from libc.stdlib cimport calloc, free

cdef double TWO_PI = 6.283185307179586476925287


def dft(seq):
    """out[k] = sum_j seq[j] * exp(2*pi*i*j*k/n), for k = 0..n-1."""
    cdef Py_ssize_t n = len(seq)
    if n == 0:
        return []
    cdef double* a = <double*> calloc(n, sizeof(double))
    cdef double* wre = <double*> calloc(n, sizeof(double))
    cdef double* wim = <double*> calloc(n, sizeof(double))
    if a == NULL or wre == NULL or wim == NULL:
        free(a); free(wre); free(wim)
        raise MemoryError()
    cdef Py_ssize_t j, k, m
    cdef double sre, sim, av
    out = []
    try:
        for j in range(n):
            a[j] = <double> seq[j]
        for m in range(n):
            wre[m] = cos(TWO_PI * m / n)
            wim[m] = sin(TWO_PI * m / n)
        for k in range(n):
            sre = 0.0
            sim = 0.0
            m = 0
            for j in range(n):
                av = a[j]
                sre += av * wre[m]
                sim += av * wim[m]
                m += k          # angle index j*k mod n, kept reduced
                if m >= n:
                    m -= n
            out.append(complex(sre, sim))
    finally:
        free(a); free(wre); free(wim)
    return out


cdef long long _modinv(long long x, long long p):
    # Fermat inverse x**(p-2); p is prime and < 2**31, so products fit in 64 bits
    cdef long long result = 1
    cdef long long base = x % p
    cdef long long e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def gf_rank(rows, long long p):
    """Rank over GF(p) by Gaussian elimination; entries must already lie in [0, p)."""
    cdef Py_ssize_t nr = len(rows)
    if nr == 0:
        return 0
    cdef Py_ssize_t nc = len(rows[0])
    if nc == 0:
        return 0
    cdef long long* m = <long long*> calloc(nr * nc, sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, c, r, piv
    cdef long long inv, factor, tmp
    try:
        for i in range(nr):
            row = rows[i]
            for j in range(nc):
                m[i * nc + j] = <long long> row[j]
        r = 0
        for c in range(nc):
            if r == nr:
                break
            piv = -1
            for i in range(r, nr):
                if m[i * nc + c] != 0:
                    piv = i
                    break
            if piv == -1:
                continue
            if piv != r:
                for j in range(c, nc):
                    tmp = m[r * nc + j]
                    m[r * nc + j] = m[piv * nc + j]
                    m[piv * nc + j] = tmp
            inv = _modinv(m[r * nc + c], p)
            for j in range(c, nc):
                m[r * nc + j] = m[r * nc + j] * inv % p
            for i in range(r + 1, nr):
                factor = m[i * nc + c]
                if factor:
                    for j in range(c, nc):
                        tmp = (m[i * nc + j] - factor * m[r * nc + j]) % p
                        if tmp < 0:
                            tmp += p
                        m[i * nc + j] = tmp
            r += 1
        return r
    finally:
        free(m)


def min_weight(gen, long long p):
    """Minimum Hamming weight over the nonzero codewords spanned by `gen` mod p.

    Walks all p**k message vectors with an odometer, updating the running
    codeword incrementally (bumping digit i adds row i mod p, including on
    wrap-around, since p copies of a row vanish mod p).  Entries of `gen`
    must already lie in [0, p); zero codewords are not counted.
    """
    cdef Py_ssize_t k = len(gen)
    cdef Py_ssize_t n = len(gen[0])
    cdef long long* G = <long long*> calloc(k * n, sizeof(long long))
    cdef long long* digits = <long long*> calloc(k, sizeof(long long))
    cdef long long* cw = <long long*> calloc(n, sizeof(long long))
    if G == NULL or digits == NULL or cw == NULL:
        free(G); free(digits); free(cw)
        raise MemoryError()
    cdef Py_ssize_t i, j, d, w, best
    cdef unsigned long long step, total
    try:
        for i in range(k):
            row = gen[i]
            for j in range(n):
                G[i * n + j] = <long long> row[j]
        total = 1
        for i in range(k):
            total *= <unsigned long long> p
        best = n
        for step in range(total - 1):
            d = 0
            while True:
                digits[d] += 1
                for j in range(n):
                    cw[j] += G[d * n + j]
                    if cw[j] >= p:
                        cw[j] -= p
                if digits[d] == p:
                    digits[d] = 0
                    d += 1
                else:
                    break
            w = 0
            for j in range(n):
                if cw[j] != 0:
                    w += 1
            if w != 0 and w < best:
                best = w
                if best == 1:
                    break
        return best
    finally:
        free(G); free(digits); free(cw)
