"""Selects between numba-compiled kernels and their plain Python/numpy bodies.

Set ``GROUPSHIFT_DISABLE_NUMBA=1`` to run every kernel uncompiled. When numba
is active the uncompiled body stays reachable through ``kernel.py_func``.
"""
import os

_FLAG = os.environ.get("GROUPSHIFT_DISABLE_NUMBA", "").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and _FLAG not in ("1", "true", "yes", "on")


def jit(fn):
    if USE_NUMBA:
        return numba.njit(cache=True)(fn)
    fn.py_func = fn
    return fn
