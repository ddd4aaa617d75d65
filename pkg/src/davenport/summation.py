"""Deterministic summation kernels.

Every sum in the package goes through here so results never depend on the
number of worker threads: work is cut into chunks of a fixed size, each chunk
is summed with :func:`math.fsum` (exactly rounded), and chunk totals are
combined with another ``fsum`` in chunk order.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

CHUNK = 1 << 16


def _chunks(terms: np.ndarray, size: int):
    return [terms[i : i + size] for i in range(0, len(terms), size)]


def stable_sum(terms, workers: int = 1) -> float:
    """Sum ``terms`` with a fixed-shape reduction tree.

    The chunk shape is fixed by ``CHUNK``, so ``workers`` changes only the
    wall-clock time, never the bits of the result.
    """
    terms = np.asarray(terms, dtype=float).ravel()
    if len(terms) <= CHUNK:
        return math.fsum(terms)
    pieces = _chunks(terms, CHUNK)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            totals = list(pool.map(math.fsum, pieces))
    else:
        totals = [math.fsum(p) for p in pieces]
    return math.fsum(totals)


def partial_sums(terms, block: int = 1024) -> np.ndarray:
    """Running sums ``S_1..S_n`` of ``terms``.

    Block offsets are exact (``fsum``); inside a block plain ``cumsum`` is
    used, so the error in any ``S_m`` is at most ``block`` roundings of the
    local magnitude.
    """
    terms = np.asarray(terms, dtype=float).ravel()
    out = np.empty_like(terms)
    hi, lo = 0.0, 0.0  # double-double running offset
    for i in range(0, len(terms), block):
        chunk = terms[i : i + block]
        out[i : i + block] = hi + (lo + np.cumsum(chunk))
        s = math.fsum(chunk)
        t = hi + s
        lo += (hi - t) + s if abs(hi) >= abs(s) else (s - t) + hi
        hi = t
    return out


def tail_spread(terms, fraction: float = 0.1) -> float:
    """Spread (max - min) of the partial sums over the last decade of terms."""
    terms = np.asarray(terms, dtype=float).ravel()
    n = len(terms)
    if n == 0:
        return 0.0
    sums = partial_sums(terms)
    start = max(0, int(math.floor(n * (1.0 - fraction))) - 1)
    window = sums[start:]
    return float(window.max() - window.min())


def kahan_add(acc: np.ndarray, comp: np.ndarray, term: np.ndarray) -> None:
    """In-place elementwise Kahan update ``acc += term`` (views allowed)."""
    y = term - comp
    t = acc + y
    comp[...] = (t - acc) - y
    acc[...] = t
