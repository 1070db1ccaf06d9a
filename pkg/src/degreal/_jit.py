"""Numba shim.

Set ``DEGREAL_NO_NUMBA=1`` to make the numpy kernels the default backend.
When numba is missing the loop kernels still import, as plain Python.
"""

import os

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

NUMBA_DISABLED = os.environ.get("DEGREAL_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}


def njit(fn):
    if not HAVE_NUMBA:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)
