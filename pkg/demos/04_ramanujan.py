"""Ramanujan sums c_q(n) and three series identities built from them."""

from davenport.ramanujan import (check_bound, ramanujan_table, verify_dirichlet_series_identity,
                                 verify_divisor_sigma_identity, verify_vanishing_sum)

tab = ramanujan_table(8, 12)
print("c_q(n) for q = 1..8 (rows), n = 1..12 (columns)")
for q in range(1, 9):
    print(f"  q={q}:", " ".join(f"{tab(q, n):3d}" for n in range(1, 13)))

for k in (1, 2, 6):
    r = verify_dirichlet_series_identity(k, 2.0, 10**5)
    print(f"series in n, k={k}: residual {r['residual']:.2e} (tail bound {r['tail_bound']:.2e})")
for n in (1, 6, 12):
    r = verify_divisor_sigma_identity(n, 2.0, 10**5)
    print(f"series in q, n={n}: residual {r['residual']:.2e} (tail bound {r['tail_bound']:.2e})")
print("sum c_m(1)/m partial sums:", verify_vanishing_sum(1, 10**5)["trend"])
print("|c_q(n)| <= sigma_1(n) for q, n <= 300:", check_bound(300, 300))
