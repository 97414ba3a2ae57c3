"""Kernel backend selection.

The hot per-edge kernels exist twice: a numba @njit version (default when
numba imports cleanly) and a pure-numpy version.  Set CURVFLOW_BACKEND to
"numpy" or "numba" to force one; anything else (or unset) means auto.
Both paths produce identical results; `benchmarks/bench_kernels.py`
compares their throughput.
"""

from __future__ import annotations

import os

_ENV_VAR = "CURVFLOW_BACKEND"


def _resolve() -> str:
    choice = os.environ.get(_ENV_VAR, "auto").strip().lower() or "auto"
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"{_ENV_VAR} must be 'numba', 'numpy' or 'auto', got {choice!r}")
    if choice == "numpy":
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        if choice == "numba":
            raise
        return "numpy"
    return "numba"


_ACTIVE = _resolve()


def active_backend() -> str:
    """Name of the kernel backend selected at import time."""
    return _ACTIVE


def get_kernels(name: str | None = None):
    """Return the kernel module for `name` (default: the active backend)."""
    name = name or _ACTIVE
    if name == "numba":
        from . import _kernels_numba as mod
    elif name == "numpy":
        from . import _kernels_numpy as mod
    else:
        raise ValueError(f"unknown backend {name!r}")
    return mod
