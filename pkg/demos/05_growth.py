"""Coefficient growth against a modulus of continuity.

For Mobius at N = 2 the two ratios stay level across decades of m.  For
a = log with the increasing-weight modulus the coefficient tail keeps growing.
"""

from davenport import LOG, MOBIUS, LIOUVILLE, ExpansionParams
from davenport.continuity import (ModulusSpec, coefficient_growth, default_m_grid,
                                  increment_probe, increment_verdict, ratio_by_step)
from davenport.series import fourier_coefficients

rep = coefficient_growth(fourier_coefficients(MOBIUS, 2, 10**6), default_m_grid(), ModulusSpec("log_m"))
print("Mobius N=2, v(1/m) = log m")
for m, s1, s2, r1, r2 in rep.rows()[::3]:
    print(f"  m={m:>7}  ratio1={r1:.4f}  ratio2={r2:.4f}")
print("  verdicts:", rep.verdict1, rep.verdict2, rep.verdict)

rep = coefficient_growth(fourier_coefficients(LOG, 1, 10**6), default_m_grid(),
                         ModulusSpec("increasing_weight", a=LOG))
print("\nlog, increasing weight: tail sums", [f"{t:.3f}" for t in rep.tail_sums])
print("  verdict:", rep.verdict)

samples = increment_probe(ExpansionParams(LIOUVILLE, 2, 0.5), ModulusSpec("log_m"), 6)
print("\nLiouville N=2 increment ratio |f(x+h)-f(x)|/log(1/h) by step")
for h, r in list(ratio_by_step(samples).items())[::3]:
    print(f"  h={h:.2e}: {r:.3e}")
print("  verdict:", increment_verdict(samples))
