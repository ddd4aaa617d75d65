"""Brute-force reference computations, deliberately independent of the package."""

import cmath
import math
from fractions import Fraction


def factor(n):
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def naive_value(kind, n, r=0.0):
    f = factor(n)
    if kind == "unit":
        return 1.0 if n == 1 else 0.0
    if kind == "one":
        return 1.0
    if kind == "log":
        return math.log(n)
    if kind == "power":
        return float(n) ** r
    if kind == "mobius":
        return 0.0 if any(e > 1 for e in f.values()) else (-1.0) ** len(f)
    if kind == "liouville":
        return (-1.0) ** sum(f.values())
    if kind == "von_mangoldt":
        return math.log(next(iter(f))) if len(f) == 1 else 0.0
    raise ValueError(kind)


def naive_Fk(kind, k, n, r=0.0):
    """Direct divisor scan: try every d in 1..n and keep the exact divisors."""
    total = 0.0
    for d in range(1, n + 1):
        if n % d == 0:
            total += d ** (-k) * naive_value(kind, n // d, r)
    return total


def divisor_sum(f, n):
    return math.fsum(f(d) for d in range(1, n + 1) if n % d == 0)


def exp_sum_ramanujan(q, n):
    """sum_{1<=a<=q, gcd(a,q)=1} exp(2 pi i a n / q)."""
    return sum(cmath.exp(2j * math.pi * a * n / q) for a in range(1, q + 1) if math.gcd(a, q) == 1)


def bernoulli_akiyama_tanigawa(m):
    """B_m by the Akiyama-Tanigawa algorithm (gives B_1 = +1/2; flipped here)."""
    a = [Fraction(0)] * (m + 1)
    for i in range(m + 1):
        a[i] = Fraction(1, i + 1)
        for j in range(i, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return -a[0] if m == 1 else a[0]


def zeta_direct_bracket(s, M):
    """Lower/upper bracket for zeta(s) from the direct sum plus integral tail bounds."""
    import numpy as np
    n = np.arange(1, M + 1, dtype=float)
    head = math.fsum(n ** (-s))
    lo = head + (M + 1.0) ** (1 - s) / (s - 1)
    hi = head + float(M) ** (1 - s) / (s - 1)
    return lo, hi
