"""Walk through the block H(l) for a few path orders.

We print the edge list of H(5) in the exchange format, then check the three
facts every block must satisfy before it is useful: the edge count, a proper
coloring, and the absence of a rainbow path on l vertices.
"""
from math import comb

from rslab import build_H, contains_rainbow_path, find_rainbow_path, is_proper_coloring, write_ecg

print("H(5) in ECG form:")
print(write_ecg(build_H(5), comment="H(5): clique v0..v2 plus v3 and x"))

print(f"{'l':>3} {'vertices':>9} {'edges':>6} {'C(l-2,2)+4':>11} {'t':>3} {'proper':>7} {'rainbow P_l':>12}")
for ell in range(5, 11):
    h = build_H(ell)
    print(f"{ell:>3} {h.n:>9} {h.m:>6} {comb(ell - 2, 2) + 4:>11} {h.t:>3} "
          f"{str(is_proper_coloring(h)):>7} {str(contains_rainbow_path(h, ell)):>12}")

# One vertex short of l, rainbow paths do exist; here is the first one.
w = find_rainbow_path(build_H(6), 5)
print("\nfirst rainbow path on 5 vertices in H(6):", w.vertices, "colors", w.colors)
