"""Kernel dispatch.

Every hot inner loop in the package goes through this module. The numba
versions are used when available unless ``FRACFROB_DISABLE_NUMBA`` is set;
both implementations stay importable for benchmarks and cross-checks.
Object arrays (extended precision) always take the numpy path.
"""
import numpy as np

from . import _kernels_numpy as numpy_impl
from ._accel import USE_NUMBA

if USE_NUMBA:
    from . import _kernels_numba as numba_impl
    _active = numba_impl
else:
    numba_impl = None
    _active = numpy_impl

BACKEND = "numba" if USE_NUMBA else "numpy"


def _is_object(*arrays):
    return any(getattr(a, "dtype", None) == object for a in arrays)


def _arr(x, n=None):
    if getattr(x, "dtype", None) == object:
        a = np.asarray(x)
    else:
        a = np.ascontiguousarray(x, dtype=np.float64)
    if n is not None and a.shape[0] < n:
        a = np.concatenate([a, np.zeros(n - a.shape[0], dtype=a.dtype)])
    return a


def cauchy(a, b, n):
    """First ``n`` coefficients of the product of two coefficient arrays."""
    impl = numpy_impl if _is_object(a, b) else _active
    return impl.cauchy(_arr(a, n), _arr(b, n), int(n))


def reciprocal(a, n):
    impl = numpy_impl if _is_object(a) else _active
    return impl.reciprocal(_arr(a, n), int(n))


def exp_series(h, n):
    """Coefficients of exp(h) for h with h[0] == 0, via k E_k = sum_j j h_j E_{k-j}."""
    impl = numpy_impl if _is_object(h) else _active
    return impl.exp_series(_arr(h, n), int(n))


def frobenius(p, q, alpha, s, n):
    """Recurrence coefficients c_0..c_{n-1} (c_0 = 1) and the first resonant k, or -1."""
    if _is_object(p, q):
        c, bad = numpy_impl.frobenius(_arr(p, n), _arr(q, n), alpha, s, int(n))
    else:
        c, bad = _active.frobenius(_arr(p, n), _arr(q, n), float(alpha), float(s), int(n))
    return c, int(bad)


def majorant_scaled(seed, m_const, alpha, s1abs, gap, shift, n):
    """Scaled majorant D_k = C_k r^{k alpha}; ``seed`` holds the first N values."""
    return _active.majorant_scaled(_arr(seed), float(m_const), float(alpha),
                                   float(s1abs), float(gap), float(shift), int(n))


def horner(c, u):
    if _is_object(c):
        return numpy_impl.horner(_arr(c), u)
    return float(_active.horner(_arr(c), float(u)))
