"""Empirical coefficient-growth and increment probes for moduli of continuity.

Nothing here proves class membership.  Reports carry ratios of the growth
sums to the candidate modulus and a decade-stability verdict.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .arith import ArithmeticFunctionId, as_id, tabulate
from .series import ExpansionParams, FourierCoefficients, lhs_partial, rhs_partial
from .summation import stable_sum

MODULUS_KINDS = ("log_m", "power_alpha", "increasing_weight")
STABILITY = 1.25
PROBE_TERMS = 10**5
GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class ModulusSpec:
    """Candidate modulus ``v``, given through ``v(1/m)``.

    ``log_m``: ``v(1/m) = log m``.  ``power_alpha``: ``v(h) = h**alpha``.
    ``increasing_weight``: ``v(1/m) = m a(m)`` for a catalog ``a``; this
    weight decreases in ``h`` for increasing ``a``, which is unusual for a
    modulus and is kept as given.
    """

    kind: str
    alpha: float = 1.0
    a: Optional[ArithmeticFunctionId] = None

    def __post_init__(self):
        if self.kind not in MODULUS_KINDS:
            raise ValueError(f"unknown modulus {self.kind!r}; expected one of {MODULUS_KINDS}")
        if self.kind == "power_alpha" and not self.alpha > 0:
            raise ValueError("alpha must be > 0")
        if self.kind == "increasing_weight":
            if self.a is None:
                raise ValueError("increasing_weight needs an arithmetic function")
            object.__setattr__(self, "a", as_id(self.a))

    def at_inverse(self, m):
        """``v(1/m)`` for integer ``m >= 2`` (array-friendly)."""
        m = np.asarray(m, dtype=float)
        if self.kind == "log_m":
            return np.log(m)
        if self.kind == "power_alpha":
            return m ** (-self.alpha)
        return m * _catalog_value(self.a, m)

    def at(self, h):
        """``v(h)`` for ``0 < h < 1``, through ``m = 1/h``."""
        return self.at_inverse(1.0 / np.abs(np.asarray(h, dtype=float)))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["a"] = self.a.label if self.a else None
        return d


def _catalog_value(a: ArithmeticFunctionId, m: np.ndarray) -> np.ndarray:
    if a.kind == "log":
        return np.log(m)
    if a.kind == "power":
        return m ** a.r
    if a.kind == "one":
        return np.ones_like(m)
    raise ValueError(f"increasing_weight needs a monotone catalog entry, not {a.label}")


@dataclass(frozen=True)
class GrowthReport:
    m_grid: list
    S1: list
    S2: list
    ratio1: list
    ratio2: list
    J: int
    verdict1: str
    verdict2: str
    tail_grid: list
    tail_sums: list
    tail_verdict: str
    part: str
    spec: dict = field(default_factory=dict)

    @property
    def verdict(self) -> dict:
        """Combined reading of the two criteria.

        The tail criterion needs the truncated tail to settle as ``J`` grows
        and its ratio to be stable in ``m``.
        """
        tail_ok = self.verdict2 == "bounded" and self.tail_verdict == "convergent"
        return {"partial_sum": self.verdict1, "tail": "bounded" if tail_ok else "unbounded"}

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict
        return d

    def rows(self):
        return list(zip(self.m_grid, self.S1, self.S2, self.ratio1, self.ratio2))


def decade_verdict(m_grid: Sequence[int], ratios: Sequence[float],
                   threshold: float = STABILITY) -> str:
    """'bounded' iff the max ratio over the top two decades stays below
    ``threshold`` times the max over the earlier decades."""
    dec = np.floor(np.log10(np.asarray(m_grid, dtype=float))).astype(int)
    levels = sorted(set(dec))
    if len(levels) < 3:
        raise ValueError("need m values spanning at least three decades")
    r = np.asarray(ratios, dtype=float)
    top = r[dec >= levels[-2]].max()
    early = r[dec < levels[-2]].max()
    return "bounded" if top < threshold * early else "unbounded"


def tail_convergence(c: np.ndarray, m0: int, threshold: float = 0.75):
    """Tail sums ``sum_{j=m0}^{J'} c_j`` at decade cutoffs ``J'``.

    'convergent' iff the increment over the last decade is below
    ``threshold`` times the increment over the decade before it.
    """
    J = len(c) - 1
    grid = []
    cut = m0 * 10
    while cut <= J:
        grid.append(cut)
        cut *= 10
    if not grid or grid[-1] != J:
        grid.append(J)
    sums = [stable_sum(c[m0 : g + 1]) for g in grid]
    if len(sums) < 3:
        return grid, sums, "undetermined"
    last = sums[-1] - sums[-2]
    prev = sums[-2] - sums[-3]
    # the final window may be short; scale its increment to a full decade
    span_last = math.log10(grid[-1] / grid[-2])
    if span_last > 0:
        last /= span_last
    return grid, sums, "convergent" if last < threshold * prev else "divergent"


def _abs_coefficients(coeffs: FourierCoefficients, part: str) -> np.ndarray:
    if part == "sine":
        return np.abs(coeffs.a)
    if part == "cosine":
        return np.abs(coeffs.b)
    if part == "both":
        return np.abs(coeffs.a) + np.abs(coeffs.b)
    raise ValueError(f"part must be 'sine', 'cosine' or 'both', got {part!r}")


def default_m_grid(lo: int = 10**2, hi: int = 10**5, per_decade: int = 4) -> list[int]:
    k = int(round(math.log10(hi / lo) * per_decade))
    return sorted(set(int(round(v)) for v in np.logspace(math.log10(lo), math.log10(hi), k + 1)))


def coefficient_growth(coeffs: FourierCoefficients, m_grid: Sequence[int], spec: ModulusSpec,
                       *, part: str = "both") -> GrowthReport:
    """Growth sums ``S1(m) = sum_{j<=m} j|c_j|`` and ``S2(m) = sum_{j=m}^{J} |c_j|``.

    ``part`` selects sine, cosine or summed absolute coefficients.
    """
    m_grid = [int(m) for m in m_grid]
    if not m_grid:
        raise ValueError("empty m grid")
    J = coeffs.limit
    if min(m_grid) < 2 or max(m_grid) > J:
        raise ValueError(f"m grid must lie in [2, {J}]")
    c = _abs_coefficients(coeffs, part)
    j = np.arange(J + 1, dtype=float)
    S1 = [stable_sum(j[1 : m + 1] * c[1 : m + 1]) for m in m_grid]
    S2 = [stable_sum(c[m:]) for m in m_grid]
    v = spec.at_inverse(m_grid)
    r1 = [s / (m * vm) for s, m, vm in zip(S1, m_grid, v)]
    r2 = [s / vm for s, vm in zip(S2, v)]
    tg, ts, tv = tail_convergence(c, min(m_grid))
    return GrowthReport(m_grid, S1, S2, r1, r2, J, decade_verdict(m_grid, r1),
                        decade_verdict(m_grid, r2), tg, ts, tv, part, spec.to_dict())


@dataclass(frozen=True)
class IncrementSample:
    x: float
    h: float
    delta: float
    bound: float

    @property
    def ratio(self) -> float:
        return self.delta / self.bound if self.bound else math.inf


def sample_points(samples: int, scheme: str = "sqrt2", seed: int = 0) -> list[float]:
    """``frac(k * c)`` for ``k = seed+1 .. seed+samples``, ``c`` = sqrt 2 or golden ratio."""
    c = {"sqrt2": math.sqrt(2.0), "golden": GOLDEN}[scheme]
    return [math.fmod((seed + k) * c, 1.0) for k in range(1, samples + 1)]


def dyadic_steps(j_lo: int = 4, j_hi: int = 16) -> list[float]:
    return [math.sqrt(2.0) * 2.0 ** (-j) for j in range(j_lo, j_hi + 1)]


def increment_samples(f: Callable[[float], float], spec: ModulusSpec,
                      xs: Sequence[float], hs: Sequence[float], *,
                      workers: int = 1) -> list[IncrementSample]:
    """Increments ``|f(x+h) - f(x)|`` against ``v(|h|)``, in ``(x, h)`` input order."""
    pairs = [(x, h) for x in xs for h in hs]

    def one(p):
        x, h = p
        if h == 0:
            return IncrementSample(x, h, 0.0, 0.0)
        return IncrementSample(x, h, abs(f(x + h) - f(x)), float(spec.at(h)))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, pairs))
    return [one(p) for p in pairs]


def increment_probe(params: ExpansionParams, spec: ModulusSpec, samples: int, *,
                    hs: Optional[Sequence[float]] = None, scheme: str = "sqrt2",
                    seed: int = 0, terms: int = PROBE_TERMS, sieve=None,
                    workers: int = 1) -> list[IncrementSample]:
    """Increment samples of the truncated fractional-part series ``P_N``."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    hs = dyadic_steps() if hs is None else list(hs)
    table = tabulate(params.id, terms, sieve)

    def f(x):
        p = ExpansionParams(params.id, params.N, x if x > 0 else x + 1.0, M_lhs=terms)
        return lhs_partial(p, table=table, warn=False)

    return increment_samples(f, spec, sample_points(samples, scheme, seed), hs, workers=workers)


def fourier_function(coeffs: FourierCoefficients) -> Callable[[float], float]:
    """``x -> sum a_n sin(2 pi n x) + b_n cos(2 pi n x)`` for a fixed coefficient set."""
    return lambda x: rhs_partial(coeffs, x)


def ratio_by_step(samples: Sequence[IncrementSample]) -> dict[float, float]:
    """Max ``delta/bound`` for each step ``h``, in order of first appearance."""
    out: dict[float, float] = {}
    for s in samples:
        if s.bound:
            out[s.h] = max(out.get(s.h, 0.0), s.ratio)
    return out


def increment_verdict(samples: Sequence[IncrementSample], factor: float = 4.0) -> str:
    """'bounded' iff the max ratio over the finer half of the steps stays
    within ``factor`` of the max over the coarser half."""
    by_h = ratio_by_step(samples)
    hs = sorted(by_h, reverse=True)
    if len(hs) < 2:
        raise ValueError("need at least two distinct steps")
    half = len(hs) // 2
    coarse = max(by_h[h] for h in hs[:half])
    fine = max(by_h[h] for h in hs[half:])
    return "bounded" if fine <= factor * coarse else "unbounded"


def lipschitz_exponent_fit(samples: Sequence[IncrementSample]) -> float:
    """Least-squares slope of ``log delta`` against ``log |h|``.

    Samples with ``delta == 0`` are dropped; if none is left the result is
    ``math.inf``.
    """
    if len(samples) < 8:
        raise ValueError("need at least 8 samples")
    h = np.array([abs(s.h) for s in samples])
    if h.min() <= 0 or math.log2(h.max() / h.min()) < 3:
        raise ValueError("steps must span at least three dyadic decades")
    d = np.array([s.delta for s in samples])
    keep = d > 0
    if not keep.any():
        return math.inf
    lh, ld = np.log(h[keep]), np.log(d[keep])
    if np.ptp(lh) == 0:
        return math.inf
    slope, _ = np.polyfit(lh, ld, 1)
    return float(slope)
