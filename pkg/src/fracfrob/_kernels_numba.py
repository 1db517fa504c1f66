"""Loop kernels compiled with numba (nopython)."""
import numpy as np

from ._accel import njit


@njit(cache=True)
def cauchy(a, b, n):
    out = np.zeros(n)
    for k in range(n):
        acc = 0.0
        for j in range(k + 1):
            acc += a[j] * b[k - j]
        out[k] = acc
    return out


@njit(cache=True)
def reciprocal(a, n):
    g = np.zeros(n)
    g[0] = 1.0 / a[0]
    for k in range(1, n):
        acc = 0.0
        for j in range(1, k + 1):
            acc += a[j] * g[k - j]
        g[k] = -acc / a[0]
    return g


@njit(cache=True)
def exp_series(h, n):
    e = np.zeros(n)
    e[0] = 1.0
    for k in range(1, n):
        acc = 0.0
        for j in range(1, k + 1):
            acc += j * h[j] * e[k - j]
        e[k] = acc / k
    return e


@njit(cache=True)
def frobenius(p, q, alpha, s, n):
    c = np.zeros(n)
    c[0] = 1.0
    a2 = alpha * alpha
    for k in range(1, n):
        t = k + s
        denom = a2 * t * (t - 1.0) + alpha * t * p[0] + q[0]
        if abs(denom) < 1e-12 * a2 * k * k:
            return c, k
        acc = 0.0
        for j in range(k):
            acc += c[j] * (p[k - j] * alpha * (j + s) + q[k - j])
        c[k] = -acc / denom
    return c, -1


@njit(cache=True)
def majorant_scaled(seed, m_const, alpha, s1abs, gap, shift, n):
    d = np.zeros(n)
    nseed = seed.shape[0]
    a2 = alpha * alpha
    running = 0.0
    for k in range(n):
        if k < nseed:
            d[k] = seed[k]
        else:
            d[k] = m_const * running / (a2 * k * (k - gap))
        running += (alpha * (k + s1abs) + shift) * d[k]
    return d


@njit(cache=True)
def horner(c, u):
    acc = 0.0
    for k in range(c.shape[0] - 1, -1, -1):
        acc = acc * u + c[k]
    return acc
