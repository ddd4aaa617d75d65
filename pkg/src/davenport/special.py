"""Exact Bernoulli numbers and zeta values, numeric zeta for real s > 1."""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .summation import stable_sum

# Euler-Mascheroni constant, 30 significant digits
EULER_GAMMA_STR = "0.577215664901532860606512090082"
EULER_GAMMA = float(EULER_GAMMA_STR)

ZETA_CUTOFF = 10**4
EM_TERMS = 4

_bernoulli = [Fraction(1)]
_lock = threading.Lock()


def bernoulli(m: int) -> Fraction:
    """Exact ``B_m`` with the ``B_1 = -1/2`` convention.

    Built from ``sum_{j=0}^{m} C(m+1, j) B_j = 0``; the table is extended
    under a lock and only ever appended to, so concurrent reads are safe.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m >= len(_bernoulli):
        with _lock:
            for j in range(len(_bernoulli), m + 1):
                acc = sum(comb(j + 1, i) * _bernoulli[i] for i in range(j))
                _bernoulli.append(-acc / (j + 1))
    return _bernoulli[m]


def zeta_nonpositive(k: int) -> Fraction:
    """``zeta(-k) = (-1)**k B_{k+1} / (k+1)`` as an exact rational."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return (-1) ** k * bernoulli(k + 1) / (k + 1)


def pn_constant(N: int) -> Fraction:
    """Constant ``C_N = N! sum_{k<N} (-1)^k zeta(-k) / ((N-k)! k!)``.

    It always reduces to ``-1/(N+1)``, minus the mean of ``{x}**N``.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    total = sum(Fraction((-1) ** k, factorial(N - k) * factorial(k)) * zeta_nonpositive(k)
                for k in range(N))
    return factorial(N) * total


def zeta_real(s: float) -> float:
    """Riemann zeta for real ``s > 1`` by Euler-Maclaurin.

    Direct sum to ``ZETA_CUTOFF - 1``, then the integral, half-term and
    ``EM_TERMS`` Bernoulli corrections at the cutoff.
    """
    s = float(s)
    if not s > 1.0:
        raise ValueError(f"zeta_real requires s > 1, got {s}")
    N = ZETA_CUTOFF
    n = np.arange(1, N, dtype=float)
    direct = stable_sum(n ** (-s))
    Nf = float(N)
    tail = [Nf ** (1.0 - s) / (s - 1.0), 0.5 * Nf ** (-s)]
    rising = s  # s (s+1) ... (s+2j-2)
    for j in range(1, EM_TERMS + 1):
        if j > 1:
            rising *= (s + 2 * j - 3) * (s + 2 * j - 2)
        coef = float(bernoulli(2 * j)) / math.factorial(2 * j)
        tail.append(coef * rising * Nf ** (-s - 2 * j + 1))
    return math.fsum([direct, *tail])


def harmonic_number(n: int) -> float:
    """``H_n`` by chunked exactly-rounded summation."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    step = 1 << 22
    parts = []
    for lo in range(1, n + 1, step):
        hi = min(n, lo + step - 1)
        parts.append(math.fsum(1.0 / np.arange(lo, hi + 1, dtype=float)))
    return math.fsum(parts)


def harmonic_estimate(n: int) -> dict:
    """``H_n`` next to its estimate ``log n + gamma + 1/(2n)``."""
    H = harmonic_number(n)
    return {"H_n": H, "estimate": math.log(n) + EULER_GAMMA + 0.5 / n}


def format_rational(q: Fraction) -> str:
    """``"p/q"`` in lowest terms, or the bare integer when ``q`` is one."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
