import math

import numpy as np
import pytest
from scipy.integrate import quad

from davenport.appell import (GSeries, appell_family, appell_from_g, fourier_moment,
                              g_coefficients, spectral_coefficients, synthesize,
                              verify_spectral_identity)
from davenport.arith import LIOUVILLE, MOBIUS, compute_Fk
from davenport.series import fourier_coefficients, rhs_partial

SQRT2M1 = math.sqrt(2) - 1
G = GSeries.from_values([0.3, -0.7, 1.1, 0.25, -0.4, 0.9, -1.3, 0.05, 0.6])


def test_mobius_g0():
    gs = g_coefficients(MOBIUS, 0.25, K=4, M=1000)
    assert gs.g[0] == pytest.approx(-1 / math.pi, abs=1e-15)
    x = 0.3
    assert g_coefficients(MOBIUS, x, K=1, M=500).g[0] == pytest.approx(
        -math.sin(2 * math.pi * x) / math.pi, abs=1e-15)


def test_parity_pattern():
    M = 2000
    x = SQRT2M1
    F = compute_Fk(LIOUVILLE, 6, M)
    n = np.arange(1, M + 1)
    s = np.sin(2 * np.pi * n * x) / n
    c = np.cos(2 * np.pi * n * x) / n
    gs = g_coefficients(LIOUVILLE, x, K=6, M=M, table=F)
    for k in range(6):
        Fk = F.row(k)[1:]
        part = math.fsum(Fk * s) if k % 2 == 0 else math.fsum(Fk * c)
        sign = math.cos(math.pi * k / 2) if k % 2 == 0 else -math.sin(math.pi * k / 2)
        expected = -((2 * math.pi) ** -k) * sign * part / math.pi
        assert gs.g[k] == pytest.approx(expected, abs=1e-13)
    alt = g_coefficients(LIOUVILLE, x, K=6, M=M, table=F, weight="alternating")
    for k in range(6):
        assert alt.g[k] == pytest.approx((-1) ** k * -gs.g[k] * (2 * math.pi) ** k, abs=1e-12)


def test_liouville_g_bounded():
    M = 10**4
    F = compute_Fk(LIOUVILLE, 8, M)
    n = np.arange(1, M + 1)
    gs = g_coefficients(LIOUVILLE, SQRT2M1, K=8, M=M, table=F, weight="alternating")
    for k in range(8):
        bound = math.fsum(np.abs(F.row(k)[1:]) / n) / math.pi
        assert math.isfinite(gs.g[k]) and abs(gs.g[k]) <= bound


def test_pbar_matches_trig_side():
    M = 5000
    x = SQRT2M1
    for N in (1, 2, 3, 4):
        gs = g_coefficients(LIOUVILLE, x, K=N + 1, M=M)
        rhs = rhs_partial(fourier_coefficients(LIOUVILLE, N, M), x)
        assert appell_from_g(gs, N).pbar_scalar == pytest.approx(rhs, abs=1e-12)


def test_low_degree_examples():
    g = G.g
    p0 = appell_from_g(G, 0)
    assert p0.pbar_scalar == 0.0
    assert list(p0.z_coeffs) == [g[0]]
    p1 = appell_from_g(G, 1)
    assert p1.pbar_scalar == g[0]
    assert list(p1.z_coeffs) == [g[1], g[0]]
    with pytest.raises(ValueError):
        appell_from_g(G, 9)


@pytest.mark.parametrize("n", range(0, 9))
def test_pbar_is_difference_of_endpoints(n):
    p = appell_from_g(G, n)
    assert abs(p(1.0) - p(0.0) - p.pbar_scalar) <= 1e-12


def test_z_polynomial_is_appell():
    # derivative in z lowers the degree: d/dz Pbar_n(x, z) = n Pbar_{n-1}(x, z)
    polys = appell_family(G, 8)
    for n in range(1, 9):
        der = np.polynomial.polynomial.polyder(polys[n].z_coeffs)
        assert np.allclose(der, n * polys[n - 1].z_coeffs, atol=1e-12, rtol=0)


def test_spectral_examples():
    polys = appell_family(G, 3)
    for k in (1, -2, 5):
        assert spectral_coefficients(polys, k, 0).s_kn == 0
        d1 = spectral_coefficients(polys, k, 1).d_kn
        assert d1 == pytest.approx(-G.g[0] / (2j * math.pi * k), abs=1e-15)
    with pytest.raises(ValueError):
        spectral_coefficients(polys, 0, 1)
    with pytest.raises(ValueError):
        spectral_coefficients(polys, 1, 4)


def test_conjugate_symmetry():
    polys = appell_family(G, 8)
    for n in range(9):
        for k in range(1, 9):
            a = spectral_coefficients(polys, k, n).d_kn
            b = spectral_coefficients(polys, -k, n).d_kn
            assert a == b.conjugate()


def test_linearity():
    c = 2.0
    P, Q = appell_family(G, 8), appell_family(G.scaled(c), 8)
    for n in range(9):
        assert abs(Q[n].pbar_scalar - c * P[n].pbar_scalar) <= 1e-12
        for k in (1, -3, 7):
            dP = spectral_coefficients(P, k, n)
            dQ = spectral_coefficients(Q, k, n)
            assert abs(dQ.s_kn - c * dP.s_kn) <= 1e-12
            assert abs(dQ.d_kn - c * dP.d_kn) <= 1e-12


def test_moment_examples():
    assert fourier_moment(0, 3) == 0
    assert fourier_moment(1, 3) == pytest.approx(-1 / (2j * math.pi * 3), abs=1e-16)
    a = -2j * math.pi * 3
    assert fourier_moment(2, 3) == pytest.approx((1 - 2 * fourier_moment(1, 3)) / a, abs=1e-16)
    for bad in ((1, 0), (-1, 2)):
        with pytest.raises(ValueError):
            fourier_moment(*bad)


@pytest.mark.parametrize("k", [1, -1, 2, 5, -7, 16, -16])
def test_moment_vs_adaptive_quadrature(k):
    w = 2 * math.pi * k
    for m in range(13):
        f = lambda z: z**m
        re = quad(f, 0, 1, weight="cos", wvar=w, epsabs=1e-14)[0]
        im = -quad(f, 0, 1, weight="sin", wvar=w, epsabs=1e-14)[0]
        assert abs(fourier_moment(m, k) - complex(re, im)) <= 1e-12


def test_three_routes_synthetic():
    for n in range(7):
        for k in (1, -1, 4, -8):
            r = verify_spectral_identity(G, n, k)
            assert r["residuals"]["formula_moment"] <= 1e-10
            assert r["residuals"]["moment_quadrature"] <= 1e-8
    r = verify_spectral_identity(G, 1, 3)
    assert r["d_formula"] == pytest.approx(-G.g[0] / (2j * math.pi * 3), abs=1e-16)
    assert r["d_moment"] == pytest.approx(r["d_formula"], abs=1e-16)


def test_synthesis_degree_zero_is_constant():
    z = np.linspace(0.1, 0.9, 17)
    for K in (0, 1, 64):
        out = synthesize(G, 0, K, z)
        assert np.all(out["reconstruction"] == G.g[0])
        assert out["interior_sup_error"] == 0.0


def test_synthesis_error_shrinks():
    z = np.linspace(0.1, 0.9, 161)
    errs = [synthesize(G, 1, K, z)["interior_sup_error"] for K in (32, 64, 128, 256)]
    assert all(b < a for a, b in zip(errs, errs[1:]))


def test_synthesis_rejects_endpoints():
    with pytest.raises(ValueError):
        synthesize(G, 1, 8, [0.0, 0.5])
    with pytest.raises(ValueError):
        synthesize(G, 1, 8, [0.5, 1.0])


def test_mean_added_back():
    # without the mean the n = 1 series sums to g0 z - g0/2, not g0 z + g1
    z = np.array([0.5])
    p1 = appell_from_g(G, 1)
    assert p1.mean == pytest.approx(G.g[0] / 2 + G.g[1], abs=1e-15)
    out = synthesize(G, 1, 256, z)
    assert out["reconstruction"][0] == pytest.approx(p1(0.5), abs=1e-12)
