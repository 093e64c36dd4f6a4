"""Generators for the saturated families and the residue-class assemblies.

Vertex ids inside one block H(l): ``v_i`` is id ``i`` for ``0 <= i <= l-2`` and
the extra vertex ``x`` is id ``l-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .graphcore import EdgeColoredGraph, disjoint_union, empty_graph, from_edge_list


class InfeasibleRecipe(ValueError):
    """A component needs more colors than the palette provides."""

    def __init__(self, message: str, needed: int, t: int):
        super().__init__(message)
        self.needed = needed
        self.t = t


def _check_ell(ell: int) -> None:
    if ell < 5:
        raise ValueError(f"construction needs l >= 5, got {ell}")


def block_edges(ell: int) -> int:
    """Edge count of one block H(l)."""
    return comb(ell - 2, 2) + 4


def palette_for(ell: int) -> int:
    return 2 * ell - 5


def x_vertex(ell: int) -> int:
    return ell - 1


def build_H(ell: int) -> EdgeColoredGraph:
    _check_ell(ell)
    t = palette_for(ell)
    edges = [(i, j, i + j) for i in range(ell - 2) for j in range(i + 1, ell - 2)]
    top, x = ell - 2, ell - 1
    edges += [
        (ell - 3, top, 2 * ell - 5),
        (ell - 4, x, 2 * ell - 5),
        (ell - 4, top, 2 * ell - 6),
        (ell - 3, x, 2 * ell - 6),
    ]
    return from_edge_list(ell, t, edges)


def build_H_star(ell: int) -> EdgeColoredGraph:
    return build_H(ell).without_vertex(x_vertex(ell))


def build_G_star(k: int, ell: int) -> EdgeColoredGraph:
    _check_ell(ell)
    if k < 1:
        raise ValueError(f"need at least one copy, got k={k}")
    return disjoint_union([build_H(ell)] * k)


def build_rainbow_K(a: int, t: int) -> EdgeColoredGraph:
    if a < 1:
        raise ValueError(f"clique order must be positive, got {a}")
    needed = comb(a, 2)
    if needed > t:
        raise InfeasibleRecipe(
            f"rainbow K{a} needs {needed} colors, t={t}", needed=needed, t=t
        )
    pairs = [(i, j) for i in range(a) for j in range(i + 1, a)]
    return from_edge_list(a, t, [(i, j, c) for c, (i, j) in enumerate(pairs, start=1)])


# -- residue-class assemblies -------------------------------------------------


@dataclass(frozen=True)
class Component:
    kind: str  # "H", "K" (rainbow clique) or "edge"
    order: int
    color: int | None = None  # only for "edge"

    def label(self) -> str:
        if self.kind == "H":
            return "H"
        if self.kind == "edge":
            return f"edge(c={self.color})"
        return f"K{self.order}"


@dataclass(frozen=True)
class Recipe:
    """Component list prescribed for one residue class ``n mod l``."""

    ell: int
    residue: int
    extras: tuple[Component, ...]
    t: int
    closed_form: Fraction | None = None
    notes: tuple[str, ...] = ()

    @property
    def extra_vertices(self) -> int:
        return sum(c.order for c in self.extras)

    @property
    def extra_edges(self) -> int:
        return sum(1 if c.kind == "edge" else comb(c.order, 2) for c in self.extras)


@dataclass
class Assembly:
    n: int
    ell: int
    t: int
    recipe: Recipe
    copies: int
    graph: EdgeColoredGraph | None
    expected_edges: int
    infeasible: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.graph is not None


def closed_form_edges(n: int, ell: int) -> Fraction:
    """Edge count stated for the residue class of ``n`` as an exact fraction."""
    r = n % ell
    if ell == 5:
        shift = {0: 0, 1: Fraction(-12, 5), 2: Fraction(-9, 5), 3: Fraction(-6, 5), 4: Fraction(2, 5)}
        return Fraction(7 * n, 5) + shift[r]
    if ell == 6:
        shift = {
            0: 0,
            1: Fraction(-8, 3),
            2: Fraction(-7, 3),
            3: Fraction(-2),
            4: Fraction(-2, 3),
            5: Fraction(-10, 3),
        }
        return Fraction(5 * n, 3) + shift[r]
    return Fraction(n - r, ell) * block_edges(ell) + comb(r, 2)


def residue_recipe(ell: int, r: int) -> Recipe:
    _check_ell(ell)
    if not 0 <= r < ell:
        raise ValueError(f"residue {r} outside 0..{ell - 1}")
    t = palette_for(ell)
    tri, k4 = Component("K", 3), Component("K", 4)
    if ell == 5:
        table = {
            0: (),
            1: (tri, tri),
            2: (Component("edge", 2, color=3),),
            3: (tri,),
            4: (k4,),
        }
        notes = ()
        if r == 1:
            # stated with t=6 although the block palette is 2l-5=5
            t = 6
            notes = ("sub-case stated with t=6 instead of 2l-5=5",)
        return Recipe(ell, r, table[r], t, notes=notes)
    if ell == 6:
        table = {
            0: (),
            1: (tri, k4),
            2: (Component("edge", 2, color=4),),
            3: (tri,),
            4: (k4,),
            5: (k4, k4, tri),
        }
        return Recipe(ell, r, table[r], t)
    if r == 0:
        return Recipe(ell, r, (), t)
    if r == 2:
        # any color of [t] is allowed; 1 is the fixed choice
        return Recipe(ell, r, (Component("edge", 2, color=1),), t, notes=("K2 edge colored 1",))
    return Recipe(ell, r, (Component("K", r),), t)


def assemble_theorem_graph(n: int, ell: int, t: int | None = None) -> Assembly:
    """Build the residue-class graph for ``n`` vertices.

    ``t`` overrides the palette the recipe prescribes. An infeasible recipe comes
    back with ``graph=None`` and an ``infeasible`` explanation instead of raising.
    """
    _check_ell(ell)
    if n < ell:
        raise ValueError(f"need n >= l, got n={n}, l={ell}")
    recipe = residue_recipe(ell, n % ell)
    palette = recipe.t if t is None else t
    rest = n - recipe.extra_vertices
    if rest < 0 or rest % ell:
        raise ValueError(f"n={n} too small for the residue-{recipe.residue} recipe of l={ell}")
    copies = rest // ell
    expected = copies * block_edges(ell) + recipe.extra_edges
    notes = list(recipe.notes)
    if palette < palette_for(ell):
        raise ValueError(f"palette {palette} below the block palette {palette_for(ell)}")
    if palette != palette_for(ell):
        notes.append(f"built with t={palette}, block palette is {palette_for(ell)}")

    parts: list[EdgeColoredGraph] = [_repalette(build_H(ell), palette)] * copies
    for comp in recipe.extras:
        if comp.kind == "edge":
            if comp.color > palette:
                return Assembly(n, ell, palette, recipe, copies, None, expected,
                                infeasible=f"edge color {comp.color} exceeds t={palette}", notes=notes)
            parts.append(from_edge_list(2, palette, [(0, 1, comp.color)]))
        elif comp.order == 1:
            parts.append(empty_graph(1, palette))
        else:
            try:
                parts.append(build_rainbow_K(comp.order, palette))
            except InfeasibleRecipe as exc:
                return Assembly(n, ell, palette, recipe, copies, None, expected,
                                infeasible=str(exc), notes=notes)
    return Assembly(n, ell, palette, recipe, copies, disjoint_union(parts), expected, notes=notes)


def _repalette(g: EdgeColoredGraph, t: int) -> EdgeColoredGraph:
    return g if g.t == t else from_edge_list(g.n, t, g.edge_list())
