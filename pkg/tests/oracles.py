"""Independent reference computations used by the tests.

Everything here is exact rational arithmetic on the classical (alpha = 1)
equation x^2 y'' + x p(x) y' + q(x) y = 0 and shares no code with fracfrob.
"""
from fractions import Fraction as F


def _get(seq, i):
    return seq[i] if 0 <= i < len(seq) else F(0)


def _I0(s, p, q):
    return s * (s - 1) + _get(p, 0) * s + _get(q, 0)


def _Im(m, s, p, q):
    return _get(p, m) * s + _get(q, m)


def classical_series(p, q, s, n, c0=F(1)):
    p = [F(v) for v in p]
    q = [F(v) for v in q]
    c = [F(c0)]
    for k in range(1, n):
        num = sum(c[j] * _Im(k - j, j + s, p, q) for j in range(k))
        c.append(-num / _I0(k + s, p, q))
    return c


def log_ansatz(p, q, s1, s2, n, b0, bN=None):
    """Coefficient matching for y2 = C ln(x) y1 + sum_k b_k x^{k+s2}.

    y1 has c_0 = 1. With s1 == s2 the power part is taken to start at s1 + 1
    (b_0 = 0, C = 1). Returns (C, b) with b indexed from s2.
    """
    p = [F(v) for v in p]
    q = [F(v) for v in q]
    s1, s2 = F(s1), F(s2)
    N = int(s1 - s2)
    a = classical_series(p, q, s1, n + N + 2)
    # L[C ln y1] = C ln L[y1] + C h,  h = 2 x y1' + (p - 1) y1
    h = [(2 * (m + s1) - 1) * a[m] + sum(_get(p, m - j) * a[j] for j in range(m + 1))
         for m in range(len(a))]
    if N == 0:
        C, b = F(1), [F(0)]
    else:
        C, b = None, [F(b0)]
    for k in range(1, n):
        known = sum(b[j] * _Im(k - j, j + s2, p, q) for j in range(k))
        if k == N:
            C = -known / h[0]
            b.append(F(bN) if bN is not None else F(0))
            continue
        rhs = -(C if k > N else 0) * _get(h, k - N) - known
        b.append(rhs / _I0(k + s2, p, q))
    return C, b
