"""Ramanujan sums and the identities built on them."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .arith import MOBIUS, divisors, sigma, tabulate
from .special import zeta_real
from .summation import stable_sum

_TRACE = (10**2, 10**3, 10**4, 10**5)


def _mobius_small(n: int) -> int:
    m, count, p = n, 0, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            count += 1
        p += 1
    if m > 1:
        count += 1
    return -1 if count % 2 else 1


def ramanujan_c(q: int, n: int) -> int:
    """``c_q(n) = sum_{d | gcd(q, n)} d mu(q/d)``, exact."""
    if q < 1 or n < 1:
        raise ValueError("q and n must be >= 1")
    g = math.gcd(q, n)
    return sum(d * _mobius_small(q // d) for d in divisors(g))


@dataclass(frozen=True, eq=False)
class RamanujanTable:
    """``entries[q-1, n-1] = c_q(n)`` as int64."""

    q_max: int
    n_max: int
    entries: np.ndarray = field(repr=False)

    def __call__(self, q: int, n: int) -> int:
        return int(self.entries[q - 1, n - 1])


def _row(q: int, n_max: int) -> np.ndarray:
    # c_q(n) depends on n only through gcd(q, n)
    lut = np.zeros(q + 1, dtype=np.int64)
    for g in divisors(q):
        lut[g] = ramanujan_c(q, g)
    return lut[np.gcd(np.arange(1, n_max + 1), q)]


def ramanujan_table(q_max: int, n_max: int, *, workers: int = 1) -> RamanujanTable:
    if q_max < 1 or n_max < 1:
        raise ValueError("table limits must be >= 1")
    qs = range(1, q_max + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda q: _row(q, n_max), qs))
    else:
        rows = [_row(q, n_max) for q in qs]
    return RamanujanTable(q_max, n_max, np.vstack(rows))


def c_over_n(q: int, M: int) -> np.ndarray:
    """``c_q(n)`` for ``n = 1..M`` at fixed ``q``."""
    return _row(q, M).astype(float)


def c_over_q(n: int, M: int, mu=None) -> np.ndarray:
    """``c_m(n)`` for ``m = 1..M`` at fixed ``n`` (index 0 holds ``m = 1``)."""
    mu = tabulate(MOBIUS, M).values if mu is None else mu
    out = np.zeros(M + 1)
    for d in divisors(n):
        if d > M:
            break
        out[d::d] += d * mu[1 : M // d + 1]
    return out[1:]


def verify_dirichlet_series_identity(k: int, s: float, M: int) -> dict:
    """``(1/zeta(s)) sum_{n<=M} c_k(n) n^-s`` against ``sum_{d|k} mu(k/d) d^(1-s)``.

    ``tail_bound = 2 sigma_1(k) M^(1-s) / (s-1)`` bounds the truncation error
    (the 1/zeta(s) factor is below one).
    """
    if not s > 1:
        raise ValueError(f"s must be > 1, got {s}")
    n = np.arange(1, M + 1, dtype=float)
    lhs = stable_sum(c_over_n(k, M) * n ** (-s)) / zeta_real(s)
    rhs = math.fsum(_mobius_small(k // d) * float(d) ** (1.0 - s) for d in divisors(k))
    bound = 2.0 * sigma(1, k) * float(M) ** (1.0 - s) / (s - 1.0)
    return {"lhs": lhs, "rhs": rhs, "residual": abs(lhs - rhs), "tail_bound": bound}


def verify_divisor_sigma_identity(n: int, r: float, M: int, mu=None) -> dict:
    """``sum_{m<=M} c_m(n)/m^r`` against ``sigma_{r-1}(n) / (n^(r-1) zeta(r))``."""
    if not r > 1:
        raise ValueError(f"r must be > 1, got {r}")
    m = np.arange(1, M + 1, dtype=float)
    lhs = stable_sum(c_over_q(n, M, mu) * m ** (-r))
    rhs = sigma(r - 1, n) / (float(n) ** (r - 1) * zeta_real(r))
    bound = 2.0 * sigma(1, n) / ((r - 1.0) * float(M) ** (r - 1.0))
    return {"lhs": lhs, "rhs": rhs, "residual": abs(lhs - rhs), "tail_bound": bound}


def verify_vanishing_sum(n: int, M: int, mu=None) -> dict:
    """Partial sums of ``sum_m c_m(n)/m``, whose limit is 0.

    Convergence is conditional, so the report gives the partial sum at ``M``
    and a trace at the decade cutoffs up to ``M``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    terms = c_over_q(n, M, mu) / np.arange(1, M + 1, dtype=float)
    trace = {cut: stable_sum(terms[:cut]) for cut in _TRACE if cut <= M}
    return {"partial": stable_sum(terms), "trend": [[c, v] for c, v in trace.items()]}


def check_bound(q_max: int, n_max: int, *, workers: int = 1) -> bool:
    """True iff ``|c_q(n)| <= sigma_1(n)`` everywhere on the table."""
    tab = ramanujan_table(q_max, n_max, workers=workers)
    s1 = np.array([sigma(1, n) for n in range(1, n_max + 1)])
    return bool(np.all(np.abs(tab.entries) <= s1[None, :]))
