"""Product throttling on cycles.

Walks through the search for th_times(C_n): for each k the best k-set and its
propagation time, then the closed form, including the n = 3 (mod 12) branch
where three vertices beat two.
"""

from __future__ import annotations

from psdthrottle import generate, propagate, pt_k, th_times, th_times_cycle
from psdthrottle.families import cycle_k_product

for n in (10, 14, 15):
    C = generate("cycle", [n])
    print(f"C_{n}")
    for k in range(2, 6):
        p, S = pt_k(C, k)
        print(f"  k={k}: pt {p} with {sorted(S)} -> product {k * (1 + p)} (formula {cycle_k_product(n, k)})")
    w = th_times(C)
    print(f"  searched th_times = {w.value}, closed form = {th_times_cycle(n)}, witness {sorted(w.witness_set)}")

# the round-by-round picture for the C_15 witness
C15 = generate("cycle", [15])
print(propagate(C15, th_times(C15).witness_set).to_text())
