"""Kernels for the longest-convex-subsequence suffix DP table.

The table is g[a][t] = length of the longest convex subsequence that starts
with elements at positions a < t, filled from the back:

    g[a][t] = 2                      if no u > t has B[u] - B[t] > B[t] - B[a]
    g[a][t] = 1 + max g[t][u]        over those u (first such u found by
                                     binary search; the max over a suffix is
                                     read from a running suffix-maximum row)

Three interchangeable implementations, selected by the CONVEXDIFF_KERNEL
environment variable ("auto", "numba", "numpy", "python"):

  * numba  - @njit-compiled scalar loops over int64 arrays (fastest)
  * numpy  - vectorized per-row searchsorted/gather over int64 arrays
  * python - pure-Python lists; arbitrary-precision ints, no size limit on
             values

Inputs whose values exceed the int64 safety bound always take the python
tier regardless of the flag, since the fast tiers would overflow; exactness
wins over the selector.
"""

from __future__ import annotations

import os
from bisect import bisect_right

import numpy as np

from .errors import InvalidInput, TooLarge

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is an install-time choice
    HAVE_NUMBA = False

KERNEL_ENV = "CONVEXDIFF_KERNEL"
KERNEL_CHOICES = ("auto", "numba", "numpy", "python")

# Two dense (m x m) int32 tables; 4096 keeps them near 134 MB total.
MAX_TABLE = 4096

# Threshold arithmetic computes 2*b[t] - b[a]; 3x headroom below 2^63.
INT64_SAFE = (2**63 - 1) // 4


def _fill_scalar(b, g, sm):
    # Shared source for the numba tier; plain-ndarray semantics only.
    m = b.shape[0]
    for a in range(m - 2, -1, -1):
        for t in range(m - 1, a, -1):
            th = 2 * b[t] - b[a]
            lo = t + 1
            hi = m
            while lo < hi:
                mid = (lo + hi) // 2
                if b[mid] > th:
                    hi = mid
                else:
                    lo = mid + 1
            ext = sm[t, lo]
            if ext >= 2:
                g[a, t] = ext + 1
            else:
                g[a, t] = 2
        best = 0
        for t in range(m - 1, a, -1):
            if g[a, t] > best:
                best = g[a, t]
            sm[a, t] = best


if HAVE_NUMBA:
    _fill_numba = njit(cache=True)(_fill_scalar)


def _table_fast(values: list[int], use_numba: bool) -> np.ndarray:
    b = np.asarray(values, dtype=np.int64)
    m = b.shape[0]
    g = np.zeros((m, m), dtype=np.int32)
    sm = np.zeros((m, m + 1), dtype=np.int32)
    if use_numba:
        _fill_numba(b, g, sm)
        return g
    for a in range(m - 2, -1, -1):
        tail = b[a + 1 :]
        th = 2 * tail - b[a]
        lo = np.searchsorted(b, th, side="right")
        ext = sm[np.arange(a + 1, m), lo]
        row = np.where(ext >= 2, ext + 1, 2).astype(np.int32)
        g[a, a + 1 :] = row
        sm[a, a + 1 : m] = np.maximum.accumulate(row[::-1])[::-1]
    return g


def _table_python(values: list[int]) -> list[list[int]]:
    m = len(values)
    g = [[0] * m for _ in range(m)]
    sm = [[0] * (m + 1) for _ in range(m)]
    for a in range(m - 2, -1, -1):
        row = g[a]
        va = values[a]
        for t in range(m - 1, a, -1):
            lo = bisect_right(values, 2 * values[t] - va, t + 1)
            ext = sm[t][lo]
            row[t] = ext + 1 if ext >= 2 else 2
        srow = sm[a]
        best = 0
        for t in range(m - 1, a, -1):
            if row[t] > best:
                best = row[t]
            srow[t] = best
    return g


def resolve_kernel(int64_safe: bool, force: str | None = None) -> str:
    """Resolve the tier from an explicit override or the environment flag."""
    choice = (force or os.environ.get(KERNEL_ENV, "") or "auto").strip().lower()
    if choice not in KERNEL_CHOICES:
        raise InvalidInput(
            f"unknown kernel {choice!r}; expected one of {', '.join(KERNEL_CHOICES)}"
        )
    if not int64_safe:
        return "python"
    if choice == "numba" and not HAVE_NUMBA:
        raise InvalidInput("kernel 'numba' requested but numba is not installed")
    if choice == "auto":
        return "numba" if HAVE_NUMBA else "numpy"
    return choice


def compute_table(values: list[int], force: str | None = None):
    """Build the suffix DP table for a strictly increasing list of ints.

    Returns (table, tier). The table is an int32 ndarray for the fast tiers
    and a list of lists for the python tier; both index as table[a][t].
    """
    m = len(values)
    if m < 2:
        raise InvalidInput("table needs at least 2 elements")
    if m > MAX_TABLE:
        raise TooLarge(f"{m} elements exceeds the table cap {MAX_TABLE}")
    safe = max(abs(values[0]), abs(values[-1])) <= INT64_SAFE
    tier = resolve_kernel(safe, force)
    if tier == "python":
        return _table_python(values), tier
    return _table_fast(values, use_numba=(tier == "numba")), tier


def available_tiers() -> tuple[str, ...]:
    """Tiers that can actually run in this installation."""
    tiers = ["numpy", "python"]
    if HAVE_NUMBA:
        tiers.insert(0, "numba")
    return tuple(tiers)
