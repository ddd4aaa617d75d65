"""Appell-type polynomials and their spectral coefficients.

The Fourier coefficients of Pbar_n(x, z) in z are computed three ways: the
closed formula, exact moments of z^m, and Simpson quadrature.  Summing the
Fourier series with its mean restored recovers the polynomial inside (0, 1).
"""

import math

import numpy as np

from davenport import LIOUVILLE
from davenport.appell import appell_family, g_coefficients, synthesize, verify_spectral_identity

x = math.sqrt(2) - 1
g = g_coefficients(LIOUVILLE, x, K=8, M=10**5)
print("g_k:", " ".join(f"{v:+.4e}" for v in g.g))
for p in appell_family(g, 4):
    print(f"n={p.n}: Pbar={p.pbar_scalar:+.6f}  z-coefficients={np.array2string(p.z_coeffs, precision=4)}")

r = verify_spectral_identity(g, 4, 3)
print("\nd_{3,4}:", r["d_formula"], "\nresiduals:", r["residuals"])

z = np.linspace(0.1, 0.9, 401)
for K in (64, 128, 256, 512):
    print(f"modes={K:4d}: interior sup error {synthesize(g, 3, K, z)['interior_sup_error']:.3e}")
