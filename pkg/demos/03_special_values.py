"""Exact Bernoulli numbers, zeta at non-positive integers, and the constants C_N."""

from davenport.special import (bernoulli, format_rational, harmonic_estimate, pn_constant,
                               zeta_nonpositive, zeta_real)

print("B_m:", ", ".join(format_rational(bernoulli(m)) for m in range(0, 13)))
print("zeta(-k):", ", ".join(f"k={k}: {format_rational(zeta_nonpositive(k))}" for k in range(8)))
print("C_N:", ", ".join(f"N={N}: {format_rational(pn_constant(N))}" for N in range(1, 6)))
print(f"zeta(2) = {zeta_real(2):.15f}, zeta(3) = {zeta_real(3):.15f}")
h = harmonic_estimate(10**6)
print(f"H_1e6 = {h['H_n']:.12f}, log n + gamma + 1/2n = {h['estimate']:.12f}")
