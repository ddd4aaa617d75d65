"""Both sides of the fractional-part expansion.

The left side sums a(n)/n ({nx}^N - 1/(N+1)); the right side is the
trigonometric series whose coefficients come from the kernels F_0..F_{N-1}.
For Mobius at N = 1 the right side is the single term -sin(2 pi x)/pi.
"""

import math

from davenport import LIOUVILLE, MOBIUS, ExpansionParams, classic_davenport, verify_identity

x = math.sqrt(2) / 2
rep = verify_identity(ExpansionParams(MOBIUS, 1, x, M_lhs=10**6, M_rhs=10))
print(f"Mobius, N=1, x={x:.6f}: lhs={rep.lhs:.6f} rhs={rep.rhs:.6f} "
      f"(-sin(2 pi x)/pi = {-math.sin(2 * math.pi * x) / math.pi:.6f})")

x = math.sqrt(2) - 1
print("\nLiouville at x = sqrt(2) - 1: residual against truncation")
for N in (1, 2, 3):
    cells = []
    for M in (10**4, 10**5, 10**6):
        r = verify_identity(ExpansionParams(LIOUVILLE, N, x, M, M))
        cells.append(f"M=1e{round(math.log10(M))}: {r.residual:.2e}")
    print(f"  N={N}  " + "   ".join(cells))

out = classic_davenport(MOBIUS, 0.25, 10**6)
print(f"\nclassic pair at x=1/4: {out['lhs']:.6f} vs {out['rhs']:.6f}")
