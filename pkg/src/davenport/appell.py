"""Appell-type polynomials from the generating function G(t, x).

``G(t, x) = sum_k g_k(x) t**k`` with

    g_k(x) = s_k [cos(pi k/2)/pi sum_n F_k(n) sin(2 pi n x)/n
                  - sin(pi k/2)/pi sum_n F_k(n) cos(2 pi n x)/n].

With ``weight="alternating"`` the scale is ``s_k = (-1)**k``.  The default
``weight="two_pi"`` uses ``s_k = -(2 pi)**-k``, which makes
``Pbar_N(x) = N! sum_{k<N} g_k/(N-k)!`` coincide with the trigonometric side of
the expansion in :mod:`davenport.series`.

The spectral identity checked here holds exactly for any finite array
``g_0..g_{K-1}``, so verifying it does not depend on series convergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import factorial
from typing import Optional, Sequence

import numpy as np

from .arith import ArithmeticFunctionId, FkTable, as_id, compute_Fk
from .series import COS4, SIN4, frac
from .summation import stable_sum

SIMPSON_PANELS = 2**14


@dataclass(frozen=True, eq=False)
class GSeries:
    id: Optional[ArithmeticFunctionId]
    x: float
    K: int
    M: int
    g: np.ndarray = field(repr=False)
    weight: str = "two_pi"

    @classmethod
    def from_values(cls, g: Sequence[float], x: float = 0.0) -> "GSeries":
        g = np.asarray(g, dtype=float)
        return cls(None, x, len(g), 0, g, weight="synthetic")

    def scaled(self, c: float) -> "GSeries":
        return GSeries(self.id, self.x, self.K, self.M, c * self.g, self.weight)


def _scale(k: int, weight: str) -> float:
    if weight == "two_pi":
        return -((2.0 * math.pi) ** (-k))
    if weight == "alternating":
        return float((-1) ** k)
    raise ValueError(f"unknown weight {weight!r}")


def g_coefficients(a, x: float, K: int = 8, M: int = 10**5, *, weight: str = "two_pi",
                   table: Optional[FkTable] = None, sieve=None) -> GSeries:
    """Coefficients ``g_0..g_{K-1}`` with inner series cut at ``M``."""
    a = as_id(a)
    if K < 1 or M < 1:
        raise ValueError("K and M must be >= 1")
    if table is None or table.N < K or table.limit < M or table.id != a:
        table = compute_Fk(a, K, M, sieve=sieve)
    n = np.arange(1, M + 1, dtype=float)
    phase = 2.0 * math.pi * frac(n * (x - math.floor(x)))
    sin_n, cos_n = np.sin(phase) / n, np.cos(phase) / n
    g = np.zeros(K)
    for k in range(K):
        F = table.row(k)[1 : M + 1]
        # exactly one of the two parts is present for each k
        if COS4[k % 4]:
            val = COS4[k % 4] * stable_sum(F * sin_n)
        else:
            val = -SIN4[k % 4] * stable_sum(F * cos_n)
        g[k] = _scale(k, weight) * val / math.pi
    return GSeries(a, x, K, M, g, weight)


@dataclass(frozen=True, eq=False)
class AppellPolynomial:
    """``Pbar_n(x)`` and the coefficients of ``Pbar_n(x, z)`` in ascending powers of ``z``."""

    n: int
    pbar_scalar: float
    z_coeffs: np.ndarray = field(repr=False)

    def __call__(self, z):
        return np.polynomial.polynomial.polyval(z, self.z_coeffs)

    @property
    def mean(self) -> float:
        """Integral of ``Pbar_n(x, z)`` over ``z`` in [0, 1]."""
        return math.fsum(c / (j + 1) for j, c in enumerate(self.z_coeffs))


def _g_array(g) -> np.ndarray:
    return g.g if isinstance(g, GSeries) else np.asarray(g, dtype=float)


def appell_from_g(g, n: int) -> AppellPolynomial:
    """Coefficient extraction from ``G(t)(e^t - 1)`` and ``G(t) e^(zt)``."""
    gv = _g_array(g)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= len(gv):
        raise ValueError(f"degree {n} needs {n + 1} g coefficients, have {len(gv)}")
    nf = factorial(n)
    scalar = math.fsum(nf * gv[j] / factorial(n - j) for j in range(n))
    z = np.array([nf * gv[n - i] / factorial(i) for i in range(n + 1)])
    return AppellPolynomial(n, scalar, z)


def appell_family(g, n_max: int) -> list[AppellPolynomial]:
    return [appell_from_g(g, j) for j in range(n_max + 1)]


@dataclass(frozen=True)
class SpectralCoefficients:
    k: int
    n: int
    s_kn: complex
    d_kn: complex


def spectral_coefficients(polys: Sequence[AppellPolynomial], k: int, n: int) -> SpectralCoefficients:
    """``s_{k,n} = sum_{j<=n} (2 pi i k)^(j-n-1) Pbar_j / j!`` and ``d_{k,n} = -n! s_{k,n}``."""
    if k == 0:
        raise ValueError("k must be nonzero")
    byn = {p.n: p for p in polys}
    missing = [j for j in range(n + 1) if j not in byn]
    if missing:
        raise ValueError(f"missing polynomials of degree {missing}")
    w = 2j * math.pi * k
    terms = [w ** (j - n - 1) * byn[j].pbar_scalar / factorial(j) for j in range(n + 1)]
    s = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    return SpectralCoefficients(k, n, s, -factorial(n) * s)


def fourier_moment(mdeg: int, k: int) -> complex:
    """``int_0^1 z^m exp(-2 pi i k z) dz`` by the exact integration-by-parts recurrence."""
    if k == 0:
        raise ValueError("k must be nonzero")
    if mdeg < 0:
        raise ValueError("mdeg must be >= 0")
    a = -2j * math.pi * k
    M = 0j
    for m in range(1, mdeg + 1):
        M = (1.0 - m * M) / a
    return M


def simpson(f_vals: np.ndarray, h: float) -> float:
    w = np.ones(len(f_vals))
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return math.fsum(w * f_vals) * h / 3.0


def fourier_coefficient_quadrature(poly: AppellPolynomial, k: int,
                                   panels: int = SIMPSON_PANELS) -> complex:
    """Composite Simpson estimate of ``int_0^1 exp(-2 pi i k z) Pbar_n(x, z) dz``."""
    if panels % 2:
        raise ValueError("Simpson needs an even panel count")
    z = np.linspace(0.0, 1.0, panels + 1)
    p = poly(z)
    ang = 2.0 * math.pi * k * z
    h = 1.0 / panels
    return complex(simpson(p * np.cos(ang), h), -simpson(p * np.sin(ang), h))


def verify_spectral_identity(g, n: int, k: int, *, panels: int = SIMPSON_PANELS) -> dict:
    """Three routes to the ``k``-th Fourier coefficient of ``Pbar_n(x, z)``."""
    if k == 0:
        raise ValueError("k must be nonzero")
    polys = appell_family(g, n)
    d_formula = spectral_coefficients(polys, k, n).d_kn
    zc = polys[n].z_coeffs
    moments = [fourier_moment(j, k) for j in range(n + 1)]
    parts = [c * mj for c, mj in zip(zc, moments)]
    d_moment = complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))
    d_quad = fourier_coefficient_quadrature(polys[n], k, panels)
    return {
        "d_formula": d_formula,
        "d_moment": d_moment,
        "d_quadrature": d_quad,
        "residuals": {
            "formula_moment": abs(d_formula - d_moment),
            "moment_quadrature": abs(d_moment - d_quad),
        },
    }


def synthesize(g, n: int, K_modes: int, z_grid) -> dict:
    """Symmetric Fourier partial sum of ``Pbar_n(x, z)`` with the mean added back.

    ``reconstruction(z) = mean + sum_{0<|k|<=K_modes} d_{k,n} e^{2 pi i k z}``;
    the ``k = 0`` term is not part of the spectral coefficient family.
    """
    z = np.asarray(z_grid, dtype=float)
    if np.any((z <= 0.0) | (z >= 1.0)):
        raise ValueError("z grid must lie strictly inside (0, 1)")
    polys = appell_family(g, n)
    poly = polys[n]
    ks = np.arange(1, K_modes + 1)
    d_pos = np.array([spectral_coefficients(polys, int(k), n).d_kn for k in ks])
    d_neg = np.array([spectral_coefficients(polys, -int(k), n).d_kn for k in ks])
    ang = 2.0 * math.pi * np.outer(ks, z)
    e = np.exp(1j * ang)
    series = (d_pos[:, None] * e + d_neg[:, None] * np.conj(e)).real
    recon = poly.mean + np.sum(series, axis=0) if K_modes else np.full_like(z, poly.mean)
    ref = poly(z)
    return {
        "reconstruction": recon,
        "reference": ref,
        "interior_sup_error": float(np.max(np.abs(recon - ref))) if len(z) else 0.0,
    }
