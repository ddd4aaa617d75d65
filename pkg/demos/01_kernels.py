"""Arithmetic functions and the divisor kernel F_k.

F_k(n) = sum over d | n of d^-k a(n/d).  At k = 0 this is a * 1, so the
Mobius kernel collapses to the unit function and the Liouville kernel marks
the perfect squares.
"""

from davenport import LIOUVILLE, MOBIUS, VON_MANGOLDT, compute_Fk, tabulate

M = 30
for a in (MOBIUS, LIOUVILLE, VON_MANGOLDT):
    print(f"{a.label:>13}:", " ".join(f"{v:g}" for v in tabulate(a, M).values[1:13]))

F = compute_Fk(LIOUVILLE, 3, M)
print("\nLiouville kernel rows for n = 1..16")
for k in range(3):
    print(f"  k={k}:", " ".join(f"{v:.3f}" for v in F.row(k)[1:17]))

print("\nk = 0 is nonzero exactly at squares:",
      [n for n in range(1, M + 1) if F.row(0)[n] != 0])
