"""Both sides of the generalized Davenport expansion.

The fractional-part side is

    P_N(x) = sum_n a(n)/n * ({n x}**N + C_N),

and the trigonometric side is ``sum_n a_n sin(2 pi n x) + b_n cos(2 pi n x)``
with coefficients built from the kernels ``F_k``.  Expanding ``{y}**N`` in its
Fourier series gives

    a_n = -(N!/(pi n)) sum_{k<N} F_k(n) cos(pi k/2) w_k / (N-k)!
    b_n =  (N!/(pi n)) sum_{k<N} F_k(n) sin(pi k/2) w_k / (N-k)!

with ``w_k = (2 pi)**-k``.  ``weight="alternating"`` substitutes ``w_k = (-1)**k``;
that variant is kept for comparison and matches the fractional-part side only
for N = 1.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass, field
from math import factorial
from typing import Optional

import numpy as np

from .arith import ArithmeticFunctionId, FkTable, as_id, compute_Fk, tabulate
from .special import pn_constant
from .summation import stable_sum, tail_spread

WEIGHTS = ("two_pi", "alternating")
DISCONTINUITY_TOL = 1e-12

# cos(pi k/2), sin(pi k/2) for k mod 4
COS4 = (1, 0, -1, 0)
SIN4 = (0, 1, 0, -1)


class DiscontinuityWarning(UserWarning):
    """Some sampled ``n x`` fell on (or within tolerance of) an integer."""


def kernel_weight(k: int, weight: str = "two_pi") -> float:
    if weight == "two_pi":
        return (2.0 * math.pi) ** (-k)
    if weight == "alternating":
        return float((-1) ** k)
    raise ValueError(f"unknown weight {weight!r}; expected one of {WEIGHTS}")


@dataclass(frozen=True)
class ExpansionParams:
    id: ArithmeticFunctionId
    N: int
    x: float
    M_lhs: int = 10**5
    M_rhs: int = 10**5
    cesaro: bool = False

    def __post_init__(self):
        object.__setattr__(self, "id", as_id(self.id))
        if self.N < 1:
            raise ValueError(f"N must be >= 1, got {self.N}")
        if not self.x > 0:
            raise ValueError(f"x must be > 0, got {self.x}")
        if self.M_lhs < 1 or self.M_rhs < 1:
            raise ValueError("truncations must be >= 1")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["id"] = self.id.label
        return d


@dataclass(frozen=True, eq=False)
class FourierCoefficients:
    """Sine (``a``) and cosine (``b``) coefficients, 1-indexed with ``a[0] = b[0] = 0``."""

    id: Optional[ArithmeticFunctionId]
    N: int
    a: np.ndarray = field(repr=False)
    b: np.ndarray = field(repr=False)
    weight: str = "two_pi"

    @property
    def limit(self) -> int:
        return len(self.a) - 1

    @classmethod
    def from_arrays(cls, a, b=None, N: int = 1) -> "FourierCoefficients":
        """Wrap plain coefficient lists ``a_1, a_2, ...`` (no padding slot)."""
        a = np.concatenate([[0.0], np.asarray(a, dtype=float)])
        b = np.zeros_like(a) if b is None else np.concatenate([[0.0], np.asarray(b, dtype=float)])
        if len(a) != len(b):
            raise ValueError("sine and cosine arrays differ in length")
        return cls(None, N, a, b, weight="synthetic")


def frac(y):
    return y - np.floor(y)


def _reduce(x: float) -> float:
    return float(x - math.floor(x))


def _lhs_terms(params: ExpansionParams, sieve=None, table=None):
    M = params.M_lhs
    n = np.arange(1, M + 1, dtype=float)
    if table is None or table.limit < M or table.id != params.id:
        table = tabulate(params.id, M, sieve)
    a = table.values[1 : M + 1]
    fr = frac(n * _reduce(params.x))
    hits = int(np.count_nonzero(np.minimum(fr, 1.0 - fr) <= DISCONTINUITY_TOL))
    C = float(pn_constant(params.N))
    return a / n * (fr ** params.N + C), hits


def lhs_partial(params: ExpansionParams, *, sieve=None, table=None, workers: int = 1,
                warn: bool = True) -> float:
    """Truncated fractional-part side ``sum_{n <= M_lhs} a(n)/n ({nx}^N + C_N)``.

    ``table`` may supply precomputed values of ``a``.  Warns with
    :class:`DiscontinuityWarning` when some ``n x`` is integral.
    """
    terms, hits = _lhs_terms(params, sieve, table)
    if hits and warn:
        warnings.warn(f"{hits} sampled n*x within {DISCONTINUITY_TOL:g} of an integer",
                      DiscontinuityWarning, stacklevel=2)
    return stable_sum(terms, workers)


def fourier_coefficients(a, N: int, M_rhs: int, *, weight: str = "two_pi",
                         table: Optional[FkTable] = None, sieve=None,
                         workers: int = 1) -> FourierCoefficients:
    """Coefficient arrays of the trigonometric side up to ``M_rhs``."""
    a = as_id(a)
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if table is None or table.N < N or table.limit < M_rhs or table.id != a:
        table = compute_Fk(a, N, M_rhs, sieve=sieve, workers=workers)
    n = np.arange(M_rhs + 1, dtype=float)
    n[0] = 1.0
    sin_part = np.zeros(M_rhs + 1)
    cos_part = np.zeros(M_rhs + 1)
    # k ascending, fixed order
    for k in range(N):
        c = factorial(N) * kernel_weight(k, weight) / factorial(N - k)
        row = table.row(k)[: M_rhs + 1]
        if COS4[k % 4]:
            sin_part += (COS4[k % 4] * c) * row
        if SIN4[k % 4]:
            cos_part += (SIN4[k % 4] * c) * row
    A = -sin_part / (math.pi * n)
    B = cos_part / (math.pi * n)
    A[0] = B[0] = 0.0
    return FourierCoefficients(a, N, A, B, weight)


def _rhs_terms(coeffs: FourierCoefficients, x: float) -> np.ndarray:
    M = coeffs.limit
    n = np.arange(1, M + 1, dtype=float)
    phase = 2.0 * math.pi * frac(n * _reduce(x))
    return coeffs.a[1:] * np.sin(phase) + coeffs.b[1:] * np.cos(phase)


def rhs_partial(coeffs: FourierCoefficients, x: float, cesaro: bool = False,
                *, workers: int = 1) -> float:
    """Trigonometric partial sum; with ``cesaro`` the (C,1) mean of partial sums."""
    if coeffs.limit < 1:
        raise ValueError("empty coefficient set")
    terms = _rhs_terms(coeffs, x)
    if cesaro:
        M = len(terms)
        terms = terms * (M - np.arange(M, dtype=float)) / M
    return stable_sum(terms, workers)


@dataclass(frozen=True)
class EvalReport:
    lhs: float
    rhs: float
    residual: float
    lhs_tail_spread: float
    rhs_tail_spread: float
    discontinuity_hits: int
    params: dict

    def to_dict(self) -> dict:
        return asdict(self)


def verify_identity(params: ExpansionParams, *, weight: str = "two_pi", sieve=None,
                    table: Optional[FkTable] = None, workers: int = 1) -> EvalReport:
    """Evaluate both truncated sides and their residual."""
    lterms, hits = _lhs_terms(params, sieve)
    lhs = stable_sum(lterms, workers)
    coeffs = fourier_coefficients(params.id, params.N, params.M_rhs, weight=weight,
                                  table=table, sieve=sieve, workers=workers)
    rterms = _rhs_terms(coeffs, params.x)
    rhs = rhs_partial(coeffs, params.x, params.cesaro, workers=workers)
    info = params.to_dict()
    info["weight"] = weight
    return EvalReport(lhs, rhs, abs(lhs - rhs), tail_spread(lterms), tail_spread(rterms),
                      hits, info)


def classic_davenport(a, x: float, M: int, *, sieve=None, workers: int = 1) -> dict:
    """The N = 1 pair: ``(1/pi) sum A(n)/n sin(2 pi n x)`` and ``-sum a(n)/n ({nx} - 1/2)``."""
    a = as_id(a)
    if not x > 0:
        raise ValueError(f"x must be > 0, got {x}")
    n = np.arange(1, M + 1, dtype=float)
    xr = _reduce(x)
    A = compute_Fk(a, 1, M, sieve=sieve).row(0)[1:]
    av = tabulate(a, M, sieve).values[1:]
    lhs = stable_sum(A / n * np.sin(2.0 * math.pi * frac(n * xr)), workers) / math.pi
    rhs = -stable_sum(av / n * (frac(n * xr) - 0.5), workers)
    return {"lhs": lhs, "rhs": rhs}
