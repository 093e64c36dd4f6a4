"""Exhaustive minimum saturated sizes on tiny instances.

The search walks isomorphism classes of graphs edge by edge and tries every
coloring up to a permutation of the palette. Every answer below is exact.
"""
import time

from rslab import min_saturated_size, write_ecg

for n, ell, t in [(3, 3, 2), (4, 4, 2), (5, 4, 8), (6, 4, 8), (5, 5, 5), (6, 5, 5)]:
    start = time.perf_counter()
    out = min_saturated_size(n, ell, t)
    print(f"n={n} l={ell} t={t}: minimum {out.minimum} "
          f"({out.nodes} colorings, {time.perf_counter() - start:.2f}s)")

out = min_saturated_size(6, 5, 5)
print("\na smallest witness for n=6, l=5, t=5:")
print(write_ecg(out.witness))
