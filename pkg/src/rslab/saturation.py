"""Saturation predicate, defect scan and blocked pendant colors."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Union

from .graphcore import EdgeColoredGraph, colors_of, full_palette
from .rainbow import contains_rainbow_path, through_edge_colors


class NotRainbowFreeError(ValueError):
    """The graph already contains a rainbow path of the requested order."""


class _AllBlocked:
    """No rainbow path of the requested order starts at the vertex.

    Acts like the whole palette when reasoning about pendant extensions.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ALL"

    def __reduce__(self):
        return (_AllBlocked, ())


ALL_BLOCKED = _AllBlocked()
Blocked = Union[frozenset, _AllBlocked]


@dataclass(frozen=True, order=True)
class Defect:
    u: int
    v: int
    color: int

    def as_dict(self) -> dict:
        return {"u": self.u, "v": self.v, "color": self.color}


def is_rainbow_free(g: EdgeColoredGraph, ell: int) -> bool:
    if ell < 2:
        raise ValueError(f"path order must be at least 2, got {ell}")
    return not contains_rainbow_path(g, ell)


def _pair_defects(g: EdgeColoredGraph, pairs: list[tuple[int, int]], ell: int, t: int,
                  first_only: bool) -> list[Defect]:
    palette = full_palette(t)
    out = []
    for u, v in pairs:
        bad = palette & ~through_edge_colors(g, u, v, ell, palette)
        for c in colors_of(bad):
            out.append(Defect(u, v, c))
            if first_only:
                return out
    return out


def _chunks(items: list, parts: int) -> list[list]:
    return [items[i::parts] for i in range(parts) if items[i::parts]]


def saturation_defects(g: EdgeColoredGraph, ell: int, t: int | None = None,
                       jobs: int = 1) -> list[Defect]:
    """Every (non-edge, color) whose addition creates no rainbow path on ``ell`` vertices.

    Only paths through the added edge are searched, which is exact because ``g``
    itself must be rainbow-free.
    """
    t = g.t if t is None else t
    if t != g.t:
        raise ValueError(f"palette mismatch: graph has t={g.t}, asked for t={t}")
    if not is_rainbow_free(g, ell):
        raise NotRainbowFreeError(f"graph contains a rainbow path on {ell} vertices")
    pairs = g.non_edges()
    if jobs <= 1 or len(pairs) < 2:
        return _pair_defects(g, pairs, ell, t, first_only=False)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_pair_defects, g, chunk, ell, t, False)
                   for chunk in _chunks(pairs, jobs)]
        found = [d for f in futures for d in f.result()]
    return sorted(found)


def first_defect(g: EdgeColoredGraph, ell: int, t: int | None = None) -> Defect | None:
    """Canonically first defect, or ``None`` when saturated (``g`` must be rainbow-free)."""
    t = g.t if t is None else t
    found = _pair_defects(g, g.non_edges(), ell, t, first_only=True)
    return found[0] if found else None


def is_saturated(g: EdgeColoredGraph, ell: int, t: int | None = None) -> bool:
    if not is_rainbow_free(g, ell):
        return False
    return first_defect(g, ell, t) is None


def blocked_mask(g: EdgeColoredGraph, v: int, order: int) -> int | None:
    """Bitmask form of :func:`blocked_pendant_colors`; ``None`` means all blocked."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    if not 1 <= order <= g.n:
        raise ValueError(f"order must lie in 1..{g.n}, got {order}")
    adj = g.adj
    inter: int | None = None

    def rec(last: int, vm: int, cm: int, k: int) -> bool:
        # returns True once the intersection is empty
        nonlocal inter
        if k == order:
            inter = cm if inter is None else inter & cm
            return inter == 0
        for w, c in adj[last]:
            if vm >> w & 1 or cm >> c & 1:
                continue
            cm2 = cm | 1 << c
            if inter is not None and not inter & ~cm2:
                # every completion keeps the intersection as it is
                continue
            if rec(w, vm | 1 << w, cm2, k + 1):
                return True
        return False

    rec(v, 1 << v, 0, 1)
    return inter


def blocked_pendant_colors(g: EdgeColoredGraph, v: int, order: int) -> Blocked:
    """Colors common to every rainbow path on ``order`` vertices starting at ``v``.

    Color ``c`` is in the result iff hanging a new vertex off ``v`` by an edge of
    color ``c`` gives no rainbow path on ``order + 1`` vertices ending there.
    """
    mask = blocked_mask(g, v, order)
    if mask is None:
        return ALL_BLOCKED
    return frozenset(colors_of(mask))


def blocked_table(g: EdgeColoredGraph, order: int) -> dict[int, Blocked]:
    return {v: blocked_pendant_colors(g, v, order) for v in range(g.n)}


def format_blocked(b: Blocked) -> str:
    if b is ALL_BLOCKED:
        return "ALL"
    return "{" + ",".join(str(c) for c in sorted(b)) + "}"
