"""Saturation of disjoint copies, and what goes wrong in the residue cases.

Two copies of H(l) are saturated for the palettes 2l-5. Appending the extra
components prescribed for each residue of n mod l mostly keeps saturation,
with a handful of exceptions that we print with their first defect.
"""
from rslab import assemble_theorem_graph, build_G_star, saturation_defects

for ell in (5, 6, 7):
    g = build_G_star(2, ell)
    d = saturation_defects(g, ell, 2 * ell - 5)
    print(f"2H({ell}): {g.m} edges, {len(d)} defects")

print("\nresidue assemblies, n = 2l + r:")
for ell in (5, 6, 7):
    for r in range(ell):
        asm = assemble_theorem_graph(2 * ell + r, ell)
        extras = " + ".join(c.label() for c in asm.recipe.extras) or "-"
        if not asm.feasible:
            print(f"  l={ell} r={r} [{extras}] INFEASIBLE: {asm.infeasible}")
            continue
        d = saturation_defects(asm.graph, ell, asm.t)
        status = "saturated" if not d else f"{len(d)} defects, first {d[0]}"
        print(f"  l={ell} r={r} [{extras}] t={asm.t} edges={asm.graph.m}: {status}")

# With one extra color the rainbow K4 fits, and the l=5, r=4 graph is saturated.
asm = assemble_theorem_graph(14, 5, t=6)
print("\nl=5 r=4 rebuilt at t=6:", len(saturation_defects(asm.graph, 5, 6)), "defects")
