"""Numba switch.

Hot kernels are compiled with numba unless ``PERGOLAY_NO_NUMBA`` is set to a
truthy value (or numba is not importable), in which case the vectorized numpy
implementations in :mod:`pergolay.kernels` are used instead.
"""

import os

_FALSY = {"", "0", "false", "no", "off"}


def _env_disabled() -> bool:
    return os.environ.get("PERGOLAY_NO_NUMBA", "").strip().lower() not in _FALSY


try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and not _env_disabled()


def njit(fn):
    """``numba.njit(cache=True, nogil=True)`` when numba is importable.

    The loop versions are always compiled when possible so tests and the
    benchmark can compare both paths regardless of ``USE_NUMBA``.
    """
    if not HAS_NUMBA:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)
