"""Numba switch.

Set ``FRACFROB_DISABLE_NUMBA=1`` to force the pure-numpy kernels. When numba is
missing the numpy path is used regardless.
"""
import os

_DISABLED = os.environ.get("FRACFROB_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def decorator(func):
            return func
        return decorator

USE_NUMBA = HAVE_NUMBA and not _DISABLED
