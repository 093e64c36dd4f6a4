"""Rainbow path search.

Depth-first extension of simple paths carrying the visited-vertex mask and the
used-color mask; any step repeating a color is cut. Starting vertices and
neighbors are tried in ascending id order, so the first witness found is the
lexicographically least vertex sequence.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

from .graphcore import EdgeColoredGraph, PathWitness

NAIVE_MAX_ORDER = 9
NAIVE_MAX_N = 10


def _walk(
    g: EdgeColoredGraph,
    start: int,
    order: int,
    vmask: int = 0,
    cmask: int = 0,
) -> Iterator[tuple[list[int], list[int]]]:
    """Yield every rainbow path on ``order`` vertices beginning at ``start``.

    The yielded lists are reused between iterations; copy them to keep them.
    """
    adj = g.adj
    verts = [start]
    cols: list[int] = []

    def rec(last: int, vm: int, cm: int) -> Iterator[tuple[list[int], list[int]]]:
        if len(verts) == order:
            yield verts, cols
            return
        for w, c in adj[last]:
            if vm >> w & 1 or cm >> c & 1:
                continue
            verts.append(w)
            cols.append(c)
            yield from rec(w, vm | 1 << w, cm | 1 << c)
            verts.pop()
            cols.pop()

    yield from rec(start, vmask | 1 << start, cmask)


def _check_required(g: EdgeColoredGraph, edge: tuple[int, int]) -> tuple[int, int]:
    a, b = edge
    if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
        raise ValueError(f"required edge {edge} is not an edge of the graph")
    return a, b


def find_rainbow_path(
    g: EdgeColoredGraph,
    order: int,
    require_edge: tuple[int, int] | None = None,
) -> PathWitness | None:
    """Lexicographically least rainbow path on ``order`` vertices, if any."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if require_edge is not None:
        a, b = _check_required(g, require_edge)
        return _find_through(g, order, a, b)
    if order > g.n:
        return None
    for s in range(g.n):
        for verts, cols in _walk(g, s, order):
            return PathWitness(tuple(verts), tuple(cols))
    return None


def _find_through(g: EdgeColoredGraph, order: int, a: int, b: int) -> PathWitness | None:
    if order > g.n or order < 2:
        return None
    adj = g.adj
    bit_a, bit_b = 1 << a, 1 << b
    verts: list[int] = []
    cols: list[int] = []

    def rec(last: int, vm: int, cm: int, used: bool) -> bool:
        if len(verts) == order:
            return used
        for w, c in adj[last]:
            if vm >> w & 1 or cm >> c & 1:
                continue
            now_used = used or (last == a and w == b) or (last == b and w == a)
            # an endpoint of the required edge left behind without the edge is fatal
            if not now_used and (vm & bit_a and last != a or vm & bit_b and last != b):
                continue
            if not now_used and (last == a or last == b):
                continue
            verts.append(w)
            cols.append(c)
            if rec(w, vm | 1 << w, cm | 1 << c, now_used):
                return True
            verts.pop()
            cols.pop()
        return False

    for s in range(g.n):
        verts[:] = [s]
        cols.clear()
        if rec(s, 1 << s, 0, False):
            return PathWitness(tuple(verts), tuple(cols))
    return None


def contains_rainbow_path(g: EdgeColoredGraph, order: int) -> bool:
    return find_rainbow_path(g, order) is not None


def enumerate_rainbow_paths_from(g: EdgeColoredGraph, v: int, order: int) -> list[PathWitness]:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    return [PathWitness(tuple(vs), tuple(cs)) for vs, cs in _walk(g, v, order)]


def naive_contains_rainbow_path(g: EdgeColoredGraph, order: int) -> bool:
    """Reference check over all ordered vertex tuples, without pruning."""
    if order > NAIVE_MAX_ORDER or g.n > NAIVE_MAX_N:
        raise ValueError(
            f"naive oracle limited to order <= {NAIVE_MAX_ORDER} and n <= {NAIVE_MAX_N}"
        )
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    for seq in permutations(range(g.n), order):
        colors = [g.color(x, y) for x, y in zip(seq, seq[1:])]
        if None in colors:
            continue
        if len(set(colors)) == len(colors):
            return True
    return False


def through_edge_colors(
    g: EdgeColoredGraph,
    u: int,
    v: int,
    order: int,
    candidates: int,
) -> int:
    """Colors ``c`` in ``candidates`` for which ``g + uv@c`` has a rainbow path on
    ``order`` vertices using ``uv``. ``uv`` must be a non-edge.

    The path splits into a rainbow half ending at ``u`` and one starting at ``v``;
    a color is good once some compatible pair of halves avoids it. Search stops
    as soon as every candidate is known good.
    """
    if order < 2 or order > g.n:
        return 0
    adj = g.adj
    remaining = candidates

    def right(last: int, vm: int, cm: int, need: int) -> None:
        nonlocal remaining
        if need == 0:
            remaining &= cm
            return
        for w, c in adj[last]:
            if vm >> w & 1 or cm >> c & 1:
                continue
            cm2 = cm | 1 << c
            if not remaining & ~cm2:
                continue
            right(w, vm | 1 << w, cm2, need - 1)
            if not remaining:
                return

    def left(last: int, vm: int, cm: int, k: int) -> None:
        if not remaining & ~cm:
            return
        right(v, vm | 1 << v, cm, order - k - 1)
        if not remaining or k == order - 1:
            return
        for w, c in adj[last]:
            if vm >> w & 1 or cm >> c & 1:
                continue
            left(w, vm | 1 << w, cm | 1 << c, k + 1)
            if not remaining:
                return

    left(u, 1 << u | 1 << v, 0, 1)
    return candidates & ~remaining
