"""Blocked pendant colors: which colors can never start a long rainbow path.

For every vertex v of H*(l) we intersect the color sets of all rainbow paths on
l-1 vertices starting at v. A pendant edge at v in one of those colors cannot
be extended into a rainbow P_l. The pattern is two singletons for l >= 7.
"""
from rslab import build_H, build_H_star, blocked_table, enumerate_rainbow_paths_from
from rslab.saturation import format_blocked

for name, g, order in [("H*(5)", build_H_star(5), 4), ("H(5)", build_H(5), 4),
                       ("H*(6)", build_H_star(6), 5), ("H(6)", build_H(6), 5)]:
    cells = ", ".join(f"v{v}:{format_blocked(b)}" for v, b in blocked_table(g, order).items())
    print(f"{name:<6} order {order}: {cells}")

print("\nrainbow 4-vertex paths from v1 in H*(5):")
for w in enumerate_rainbow_paths_from(build_H_star(5), 1, 4):
    print("  ", w.vertices, "colors", w.colors)

print("\nnonempty entries of the H*(l) table:")
for ell in range(7, 12):
    table = blocked_table(build_H_star(ell), ell - 1)
    nonempty = {f"v{v}": sorted(b) for v, b in table.items() if b}
    print(f"  l={ell:<2} t={2 * ell - 5:<2} {nonempty}")
