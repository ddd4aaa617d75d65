"""Arithmetic functions, sieves, Dirichlet convolution and the F_k kernels.

Tables are 1-indexed numpy arrays of length ``M + 1``; slot 0 is padding and
always holds 0.0 so that ``values[n]`` is ``a(n)``.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from math import isqrt
from typing import Optional, TextIO

import numpy as np

from .summation import kahan_add, stable_sum

KINDS = ("mobius", "liouville", "von_mangoldt", "log", "power", "unit", "one")

DEFAULT_LIMIT = 10**5
MAX_LIMIT = 10**7


@dataclass(frozen=True)
class ArithmeticFunctionId:
    """Catalog entry naming an arithmetic function ``a(n)``.

    ``power`` carries the exponent ``r`` and means ``a(n) = n**r``.
    """

    kind: str
    r: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown arithmetic function {self.kind!r}; expected one of {KINDS}")
        if self.kind != "power" and self.r != 0.0:
            raise ValueError("only 'power' takes an exponent")

    @classmethod
    def parse(cls, text: str) -> "ArithmeticFunctionId":
        """Parse ``'mobius'``, ``'power:-2'`` or ``'power(-2)'``."""
        text = text.strip().lower()
        if text.startswith("power"):
            rest = text[len("power"):].strip(":()= ")
            if not rest:
                raise ValueError("power needs an exponent, e.g. power:-2")
            return cls("power", float(rest))
        aliases = {"mu": "mobius", "moebius": "mobius", "lambda": "liouville",
                   "vonmangoldt": "von_mangoldt", "mangoldt": "von_mangoldt"}
        return cls(aliases.get(text, text))

    @property
    def label(self) -> str:
        if self.kind == "power":
            return f"power:{self.r:g}"
        return self.kind

    @property
    def abscissa(self) -> float:
        """Real ``s`` beyond which the catalog Dirichlet series is known to converge."""
        if self.kind == "unit":
            return -math.inf
        if self.kind == "power":
            return 1.0 + self.r
        return 1.0

    def __str__(self):
        return self.label


MOBIUS = ArithmeticFunctionId("mobius")
LIOUVILLE = ArithmeticFunctionId("liouville")
VON_MANGOLDT = ArithmeticFunctionId("von_mangoldt")
LOG = ArithmeticFunctionId("log")
UNIT = ArithmeticFunctionId("unit")
ONE = ArithmeticFunctionId("one")


def power(r: float) -> ArithmeticFunctionId:
    return ArithmeticFunctionId("power", float(r))


def as_id(a) -> ArithmeticFunctionId:
    if isinstance(a, ArithmeticFunctionId):
        return a
    return ArithmeticFunctionId.parse(str(a))


@dataclass(frozen=True, eq=False)
class FactorSieve:
    """Smallest-prime-factor table for ``2..limit`` (``spf[0]`` = ``spf[1]`` = 0)."""

    limit: int
    spf: np.ndarray = field(repr=False)

    def is_prime(self, n: int) -> bool:
        self._check(n)
        return n >= 2 and int(self.spf[n]) == n

    def factorize(self, n: int) -> list[tuple[int, int]]:
        """Prime factorization of ``n`` as ``[(p, e), ...]`` with ``p`` ascending."""
        self._check(n)
        out: list[tuple[int, int]] = []
        while n > 1:
            p = int(self.spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out

    def _check(self, n: int) -> None:
        if not 1 <= n <= self.limit:
            raise ValueError(f"n={n} outside sieve range [1, {self.limit}]")

    @cached_property
    def _stats(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        # Omega (with multiplicity), omega (distinct), squarefree flag for 0..limit
        M = self.limit
        m = np.arange(M + 1, dtype=np.int64)
        big = np.zeros(M + 1, dtype=np.int32)
        small = np.zeros(M + 1, dtype=np.int32)
        sqfree = np.ones(M + 1, dtype=bool)
        last = np.zeros(M + 1, dtype=np.int64)
        active = np.nonzero(m > 1)[0]
        while active.size:
            p = self.spf[m[active]].astype(np.int64)
            repeat = p == last[active]
            big[active] += 1
            small[active] += ~repeat
            sqfree[active[repeat]] = False
            last[active] = p
            m[active] //= p
            active = active[m[active] > 1]
        return big, small, sqfree


def build_sieve(M: int) -> FactorSieve:
    """Smallest-prime-factor sieve up to ``M``."""
    M = int(M)
    if M < 1:
        raise ValueError(f"sieve limit must be >= 1, got {M}")
    spf = np.zeros(M + 1, dtype=np.int32 if M < 2**31 else np.int64)
    for p in range(2, isqrt(M) + 1):
        if spf[p] == 0:
            view = spf[p * p :: p]
            view[view == 0] = p
    idx = np.arange(M + 1)
    unset = spf == 0
    unset[:2] = False
    spf[unset] = idx[unset]
    return FactorSieve(M, spf)


def evaluate(a, n: int, sieve: FactorSieve) -> float:
    """Single value ``a(n)`` from the catalog."""
    a = as_id(a)
    sieve._check(n)
    if a.kind == "unit":
        return 1.0 if n == 1 else 0.0
    if a.kind == "one":
        return 1.0
    if a.kind == "log":
        return math.log(n)
    if a.kind == "power":
        return float(n) ** a.r
    fac = sieve.factorize(n)
    if a.kind == "mobius":
        if any(e > 1 for _, e in fac):
            return 0.0
        return -1.0 if len(fac) % 2 else 1.0
    if a.kind == "liouville":
        return -1.0 if sum(e for _, e in fac) % 2 else 1.0
    # von Mangoldt
    return math.log(fac[0][0]) if len(fac) == 1 else 0.0


@dataclass(frozen=True, eq=False)
class SequenceTable:
    """Values ``a(1..limit)`` stored as ``values[n]`` (``values[0] == 0``)."""

    id: Optional[ArithmeticFunctionId]
    limit: int
    values: np.ndarray = field(repr=False)
    name: str = ""

    def __post_init__(self):
        if len(self.values) != self.limit + 1:
            raise ValueError("values must have length limit + 1")
        self.values.setflags(write=False)

    def __getitem__(self, n):
        return self.values[n]

    @property
    def label(self) -> str:
        return self.name or (self.id.label if self.id else "sequence")

    def to_csv(self, fh: TextIO) -> None:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "value"])
        for n in range(1, self.limit + 1):
            w.writerow([n, repr(float(self.values[n]))])


def tabulate(a, M: int, sieve: Optional[FactorSieve] = None) -> SequenceTable:
    """Vectorized catalog table ``a(1..M)``."""
    a = as_id(a)
    M = int(M)
    if M < 1:
        raise ValueError(f"table limit must be >= 1, got {M}")
    n = np.arange(M + 1, dtype=float)
    vals = np.zeros(M + 1)
    if a.kind == "unit":
        vals[1] = 1.0
    elif a.kind == "one":
        vals[1:] = 1.0
    elif a.kind == "log":
        vals[1:] = np.log(n[1:])
    elif a.kind == "power":
        vals[1:] = np.power(n[1:], a.r)
    else:
        if sieve is None or sieve.limit < M:
            sieve = build_sieve(M)
        big, small, sqfree = (s[: M + 1] for s in sieve._stats)
        if a.kind == "mobius":
            vals = np.where(sqfree, np.where(small % 2 == 1, -1.0, 1.0), 0.0)
        elif a.kind == "liouville":
            vals = np.where(big % 2 == 1, -1.0, 1.0)
        else:
            spf = sieve.spf[: M + 1].astype(float)
            vals = np.where(small == 1, np.log(np.maximum(spf, 1.0)), 0.0)
        vals = vals.astype(float)
        vals[1] = 1.0 if a.kind != "von_mangoldt" else 0.0
        vals[0] = 0.0
    return SequenceTable(a, M, vals)


def dirichlet_convolve(f: SequenceTable, g: SequenceTable) -> SequenceTable:
    """``(f * g)(n) = sum_{d | n} f(d) g(n/d)`` for ``n <= M``.

    Each divisor pair ``{d, n/d}`` is visited once, in ascending order of the
    smaller member, and its two products are added before the Kahan update.
    Swapping ``f`` and ``g`` therefore reproduces the result bit for bit.
    """
    if f.limit != g.limit:
        raise ValueError(f"mismatched table limits {f.limit} and {g.limit}")
    M = f.limit
    fv, gv = f.values, g.values
    acc = np.zeros(M + 1)
    comp = np.zeros(M + 1)
    for t in range(1, isqrt(M) + 1):
        top = M // t
        term = fv[t] * gv[t : top + 1] + gv[t] * fv[t : top + 1]
        term[0] = fv[t] * gv[t]
        sl = slice(t * t, t * top + 1, t)
        kahan_add(acc[sl], comp[sl], term)
    acc[0] = 0.0
    return SequenceTable(None, M, acc, name=f"({f.label})*({g.label})")


@dataclass(frozen=True, eq=False)
class FkTable:
    """``entries[k, n] = F_k(n) = sum_{d | n} d**-k a(n/d)`` for ``k < N``."""

    id: ArithmeticFunctionId
    N: int
    limit: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.entries.setflags(write=False)

    def row(self, k: int) -> np.ndarray:
        return self.entries[k]

    def to_csv(self, fh: TextIO) -> None:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "k", "value"])
        for n in range(1, self.limit + 1):
            for k in range(self.N):
                w.writerow([n, k, repr(float(self.entries[k, n]))])


def compute_Fk(a, N: int, M: int, *, sieve: Optional[FactorSieve] = None,
               workers: int = 1) -> FkTable:
    """Kernel table ``F_k(n)`` for ``0 <= k < N`` and ``1 <= n <= M``.

    Rows are independent and may be built on ``workers`` threads; each entry's
    summation order is fixed, so the table does not depend on ``workers``.
    """
    a = as_id(a)
    N, M = int(N), int(M)
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    base = tabulate(a, M, sieve)

    def row(k):
        return dirichlet_convolve(tabulate(power(-k), M), base).values

    if workers > 1 and N > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, range(N)))
    else:
        rows = [row(k) for k in range(N)]
    return FkTable(a, N, M, np.vstack(rows))


def divisors(n: int) -> list[int]:
    """Divisors of ``n`` in ascending order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    low, high = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            low.append(d)
            if d != n // d:
                high.append(n // d)
    return low + high[::-1]


def sigma(r: float, n: int) -> float:
    """Divisor power sum ``sigma_r(n)``."""
    if float(r).is_integer() and r >= 0:
        return float(sum(d ** int(r) for d in divisors(n)))
    return math.fsum(float(d) ** r for d in divisors(n))


def dirichlet_series_partial(a, s: float, M: int, *, sieve: Optional[FactorSieve] = None) -> float:
    """Truncated Dirichlet series ``sum_{n <= M} a(n) n**-s``."""
    a = as_id(a)
    if a.kind == "unit":
        return 1.0
    if s <= a.abscissa:
        raise ValueError(f"s must exceed {a.abscissa:g} for {a.label}, got {s}")
    tab = tabulate(a, M, sieve)
    n = np.arange(1, M + 1, dtype=float)
    return stable_sum(tab.values[1:] * n ** (-s))


def segal_limit(a, k: int, M: int, *, sieve: Optional[FactorSieve] = None) -> dict:
    """Truncated Segal convolution sum with ``b(n) = n**-k``.

    Returns ``partial_sum = sum_{n<=M} F_k(n)/n``, the truncated absolute sum
    ``S = sum_{n<=M} |F_0(n)/n|`` and ``L = lim b(n)``.
    """
    a = as_id(a)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    base = tabulate(a, M, sieve)
    n = np.arange(1, M + 1, dtype=float)
    Fk = dirichlet_convolve(tabulate(power(-k), M), base).values[1:]
    F0 = Fk if k == 0 else dirichlet_convolve(tabulate(ONE, M), base).values[1:]
    return {
        "partial_sum": stable_sum(Fk / n),
        "S": stable_sum(np.abs(F0) / n),
        "L": 1.0 if k == 0 else 0.0,
    }
