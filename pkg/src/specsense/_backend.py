"""Backend selection for the hot Monte-Carlo kernels.

Two implementations of the cumulative-detector batch engine exist: a numba
@njit kernel (fast, parallel over trials) and a pure-numpy fallback.  The
active backend is chosen from the SPECSENSE_BACKEND environment variable at
import time ("numba", "numpy", or unset/"auto" meaning numba when available)
and can be switched at runtime with set_backend().

SPECSENSE_THREADS (0 or unset = auto) caps the numba thread count.
"""

from __future__ import annotations

import os

try:
    import numba  # noqa: F401
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

_VALID = ("numba", "numpy")


def _from_env() -> str:
    raw = os.environ.get("SPECSENSE_BACKEND", "auto").strip().lower()
    if raw in ("", "auto"):
        return "numba" if HAS_NUMBA else "numpy"
    if raw not in _VALID:
        raise ValueError(f"SPECSENSE_BACKEND must be one of {_VALID} or 'auto', got {raw!r}")
    if raw == "numba" and not HAS_NUMBA:
        raise ImportError("SPECSENSE_BACKEND=numba but numba is not importable")
    return raw


_backend = _from_env()


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> str:
    """Switch the engine backend at runtime; returns the previous name."""
    global _backend
    if name not in _VALID:
        raise ValueError(f"backend must be one of {_VALID}, got {name!r}")
    if name == "numba" and not HAS_NUMBA:
        raise ImportError("numba backend requested but numba is not importable")
    prev = _backend
    _backend = name
    return prev


def configure_threads() -> int:
    """Apply SPECSENSE_THREADS to numba's thread pool; returns the count in use."""
    if not HAS_NUMBA:
        return 1
    import numba

    raw = os.environ.get("SPECSENSE_THREADS", "0").strip()
    try:
        n = int(raw) if raw else 0
    except ValueError:
        raise ValueError(f"SPECSENSE_THREADS must be an integer, got {raw!r}")
    if n < 0:
        raise ValueError("SPECSENSE_THREADS must be >= 0")
    if n > 0:
        numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))
    return numba.get_num_threads()
