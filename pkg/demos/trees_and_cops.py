"""Trees: propagation from one vertex is the cops and robbers capture time.

On a tree a single blue vertex v forces everything in ecc(v) rounds, so
th_times is 1 + rad.  One cop placed on v needs the same number of rounds.
"""

from __future__ import annotations

from psdthrottle import capture_time, generate, metrics, prop_time, th_times, th_times_cops

for seed in range(4):
    T = generate("random_tree", [10], seed=seed)
    m = metrics(T)
    center = min(range(T.n), key=lambda v: m.ecc[v])
    print(f"seed {seed}: rad {m.radius}, th_times {th_times(T).value}, th_c_times {th_times_cops(T).times}")
    print(f"  from centre {center}: pt {prop_time(T, {center})}, capt {capture_time(T, {center})}")

# cycles behave the same once two cops are placed
C = generate("cycle", [9])
for S in ({0, 4}, {0, 3}, {0, 1}):
    print(f"C_9 {sorted(S)}: pt {prop_time(C, S)}, capt {capture_time(C, S)}")
