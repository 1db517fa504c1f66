"""Pure-numpy versions of the kernels in ``_kernels_numba``; same signatures.

These also accept object arrays (mpmath numbers) and keep their dtype, which
is how the extended-precision paths run.
"""
import numpy as np


def cauchy(a, b, n):
    if a.dtype != object:
        return np.convolve(a[:n], b[:n])[:n].copy()
    # skip the discarded upper half, which costs real time for mpmath numbers
    c = np.zeros(n, dtype=object)
    for k in range(n):
        c[k] = np.dot(a[:k + 1], b[k::-1])
    return c


def reciprocal(a, n):
    g = np.zeros(n, dtype=a.dtype)
    g[0] = 1.0 / a[0]
    for k in range(1, n):
        # a[1..k] against g[k-1..0]
        g[k] = -np.dot(a[1:k + 1], g[k - 1::-1]) / a[0]
    return g


def exp_series(h, n):
    e = np.zeros(n, dtype=h.dtype)
    e[0] = 1.0
    jh = np.arange(n) * h[:n]
    for k in range(1, n):
        e[k] = np.dot(jh[1:k + 1], e[k - 1::-1]) / k
    return e


def frobenius(p, q, alpha, s, n):
    c = np.zeros(n, dtype=np.result_type(p, q))
    c[0] = 1.0
    a2 = alpha * alpha
    shifts = np.arange(n) + s
    for k in range(1, n):
        t = k + s
        denom = a2 * t * (t - 1.0) + alpha * t * p[0] + q[0]
        if abs(denom) < 1e-12 * a2 * k * k:
            return c, k
        # I_{k-j}(j+s) for j = 0..k-1
        shifted = p[k:0:-1] * alpha * shifts[:k] + q[k:0:-1]
        c[k] = -np.dot(c[:k], shifted) / denom
    return c, -1


def majorant_scaled(seed, m_const, alpha, s1abs, gap, shift, n):
    d = np.zeros(n, dtype=seed.dtype)
    nseed = seed.shape[0]
    a2 = alpha * alpha
    weight = alpha * (np.arange(n) + s1abs) + shift
    running = 0.0
    for k in range(n):
        d[k] = seed[k] if k < nseed else m_const * running / (a2 * k * (k - gap))
        running += weight[k] * d[k]
    return d


def horner(c, u):
    return np.polynomial.polynomial.polyval(u, c)
