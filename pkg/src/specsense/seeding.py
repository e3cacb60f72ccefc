"""Deterministic 64-bit seed derivation.

Every stochastic routine takes an explicit seed; nested seeds are derived by
hashing the parent seed together with string/integer labels, so adding a
detector or a grid point never perturbs the random streams of other cells.
Uses blake2b, which is stable across platforms and Python versions (unlike
the builtin hash).
"""

from __future__ import annotations

import hashlib


def derive_seed(*parts: int | str | float) -> int:
    """Hash the given label parts into a 64-bit seed."""
    h = hashlib.blake2b(digest_size=8)
    for p in parts:
        if isinstance(p, float):
            p = repr(p)
        h.update(str(p).encode())
        h.update(b"\x00")
    return int.from_bytes(h.digest(), "little")
