"""Kernel backend selection.

Hot numeric loops (Sturm bisection, tridiagonal solves, three-term
recurrences) run through numba's nopython JIT by default.  Setting
``INTERTWINE_BACKEND=numpy`` selects the pure-numpy/python fallback, which
needs no compiler and produces identical results; ``INTERTWINE_BACKEND=numba``
forces the JIT path (ImportError if numba is missing).
"""

import os


def _select():
    choice = os.environ.get("INTERTWINE_BACKEND", "auto").strip().lower()
    if choice in ("numpy", "python"):
        return False
    if choice == "numba":
        import numba  # noqa: F401  (fail loudly if forced but unavailable)
        return True
    if choice not in ("", "auto"):
        raise ValueError(f"INTERTWINE_BACKEND must be auto|numba|numpy, got {choice!r}")
    try:
        import numba  # noqa: F401
        return True
    except ImportError:
        return False


USE_NUMBA = _select()
BACKEND = "numba" if USE_NUMBA else "numpy"
