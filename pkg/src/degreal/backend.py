"""Kernel backend selection.

Two interchangeable kernel sets exist: numba-compiled loops (``"numba"``)
and vectorized numpy (``"numpy"``). The default is numba unless numba is
unavailable or ``DEGREAL_NO_NUMBA`` is set.
"""

from contextlib import contextmanager

from . import _loops, _vectorized
from ._jit import HAVE_NUMBA, NUMBA_DISABLED

_KERNELS = {"numba": _loops, "numpy": _vectorized}
_active = "numba" if HAVE_NUMBA and not NUMBA_DISABLED else "numpy"


def kernels():
    return _KERNELS[_active]


def name():
    return _active


def set_backend(backend):
    global _active
    if backend not in _KERNELS:
        raise ValueError(f"unknown backend {backend!r}; choose from {sorted(_KERNELS)}")
    _active = backend


@contextmanager
def use(backend):
    """Temporarily switch backend (not thread-safe)."""
    previous = _active
    set_backend(backend)
    try:
        yield
    finally:
        set_backend(previous)
