"""Edge-colored simple graphs, color sets, path witnesses and the ECG text format.

Vertices are ``0..n-1`` and colors are ``1..t`` with ``t <= 64``. A color set is a
plain ``int`` bitmask where bit ``c`` stands for color ``c``; helpers below convert
between masks and sorted tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_COLORS = 64


class GraphError(ValueError):
    """Base class for rejected graph input."""


class DuplicateEdgeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class ColorRangeError(GraphError):
    pass


class PaletteMismatchError(GraphError):
    pass


class ECGSyntaxError(GraphError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


# -- color sets ---------------------------------------------------------------


def color_bit(c: int) -> int:
    return 1 << c


def colorset(colors: Iterable[int]) -> int:
    mask = 0
    for c in colors:
        mask |= 1 << c
    return mask


def colors_of(mask: int) -> tuple[int, ...]:
    """Sorted colors contained in ``mask``."""
    out = []
    c = 0
    while mask:
        if mask & 1:
            out.append(c)
        mask >>= 1
        c += 1
    return tuple(out)


def full_palette(t: int) -> int:
    """Mask of every color in ``1..t``."""
    return ((1 << (t + 1)) - 1) & ~1


# -- graphs -------------------------------------------------------------------


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EdgeColoredGraph:
    """Immutable t-edge-colored simple graph.

    ``edges`` maps each pair ``(u, v)`` with ``u < v`` to its color. Use
    :func:`from_edge_list` to build one with validation.
    """

    n: int
    t: int
    edges: dict[tuple[int, int], int]
    adj: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False, compare=False)

    def __hash__(self) -> int:
        return hash((self.n, self.t, frozenset(self.edges.items())))

    @property
    def m(self) -> int:
        return len(self.edges)

    def color(self, u: int, v: int) -> int | None:
        return self.edges.get(_norm(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """``(neighbor, color)`` pairs, ascending by neighbor id."""
        return self.adj[v]

    def edge_list(self) -> list[tuple[int, int, int]]:
        """Edges as ``(u, v, c)`` in canonical order."""
        return [(u, v, c) for (u, v), c in sorted(self.edges.items())]

    def colors_used(self) -> int:
        return colorset(self.edges.values())

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in self.edges
        ]

    def with_edge(self, u: int, v: int, c: int) -> EdgeColoredGraph:
        return from_edge_list(self.n, self.t, self.edge_list() + [(u, v, c)])

    def without_vertex(self, x: int) -> EdgeColoredGraph:
        """Delete ``x``; vertices above ``x`` shift down by one."""
        shift = lambda w: w - 1 if w > x else w  # noqa: E731
        kept = [(shift(u), shift(v), c) for u, v, c in self.edge_list() if x not in (u, v)]
        return from_edge_list(self.n - 1, self.t, kept)

    def relabel(self, perm: Sequence[int], color_map: dict[int, int] | None = None) -> EdgeColoredGraph:
        """Image under vertex permutation ``perm`` (and optional color bijection)."""
        cm = color_map or {}
        return from_edge_list(
            self.n, self.t, [(perm[u], perm[v], cm.get(c, c)) for u, v, c in self.edge_list()]
        )

    def induced(self, vertices: Sequence[int]) -> EdgeColoredGraph:
        index = {w: i for i, w in enumerate(vertices)}
        kept = [
            (index[u], index[v], c)
            for u, v, c in self.edge_list()
            if u in index and v in index
        ]
        return from_edge_list(len(vertices), self.t, kept)


def from_edge_list(n: int, t: int, edges: Iterable[tuple[int, int, int]]) -> EdgeColoredGraph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    if not 1 <= t <= MAX_COLORS:
        raise ColorRangeError(f"palette size must lie in 1..{MAX_COLORS}, got {t}")
    emap: dict[tuple[int, int], int] = {}
    for u, v, c in edges:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if not 1 <= c <= t:
            raise ColorRangeError(f"color {c} of edge ({u}, {v}) exceeds palette {t}")
        key = _norm(u, v)
        if key in emap:
            raise DuplicateEdgeError(f"duplicate pair {key}")
        emap[key] = c
    emap = dict(sorted(emap.items()))
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (u, v), c in emap.items():
        adj[u].append((v, c))
        adj[v].append((u, c))
    return EdgeColoredGraph(n, t, emap, tuple(tuple(sorted(a)) for a in adj))


def empty_graph(n: int, t: int) -> EdgeColoredGraph:
    return from_edge_list(n, t, [])


def disjoint_union(parts: Sequence[EdgeColoredGraph]) -> EdgeColoredGraph:
    if not parts:
        raise GraphError("disjoint_union needs at least one part")
    t = parts[0].t
    if any(p.t != t for p in parts):
        raise PaletteMismatchError(f"palettes differ: {[p.t for p in parts]}")
    edges = []
    offset = 0
    for p in parts:
        edges.extend((u + offset, v + offset, c) for u, v, c in p.edge_list())
        offset += p.n
    return from_edge_list(offset, t, edges)


def is_proper_coloring(g: EdgeColoredGraph) -> bool:
    for nbrs in g.adj:
        seen = 0
        for _, c in nbrs:
            if seen >> c & 1:
                return False
            seen |= 1 << c
    return True


# -- path witnesses -----------------------------------------------------------


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def is_rainbow(self) -> bool:
        return len(set(self.colors)) == len(self.colors)

    @property
    def color_mask(self) -> int:
        return colorset(self.colors)

    def validate(self, g: EdgeColoredGraph) -> None:
        """Raise ``ValueError`` unless this is a genuine path of ``g``."""
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"repeated vertex in {self.vertices}")
        if len(self.colors) != max(len(self.vertices) - 1, 0):
            raise ValueError("color sequence length must be one less than vertex count")
        for (a, b), c in zip(zip(self.vertices, self.vertices[1:]), self.colors):
            actual = g.color(a, b)
            if actual is None:
                raise ValueError(f"{a}-{b} is not an edge")
            if actual != c:
                raise ValueError(f"edge {a}-{b} has color {actual}, witness says {c}")


def witness_from_vertices(g: EdgeColoredGraph, vertices: Sequence[int]) -> PathWitness:
    colors = []
    for a, b in zip(vertices, vertices[1:]):
        c = g.color(a, b)
        if c is None:
            raise ValueError(f"{a}-{b} is not an edge")
        colors.append(c)
    w = PathWitness(tuple(vertices), tuple(colors))
    w.validate(g)
    return w


# -- ECG text format ----------------------------------------------------------


def parse_ecg(text: str) -> EdgeColoredGraph:
    """Parse ECG text: header ``n t``, then one ``u v c`` line per edge, ``#`` comments."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw
        if "\r" in line:
            raise ECGSyntaxError("carriage return found; ECG is LF-only", lineno)
        if line.startswith("#") or not line.strip():
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise ECGSyntaxError(f"non-integer field in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 2:
                raise ECGSyntaxError("header must be 'n t'", lineno)
            header = (nums[0], nums[1])
            n, t = header
            if n < 0:
                raise ECGSyntaxError(f"negative vertex count {n}", lineno)
            if not 1 <= t <= MAX_COLORS:
                raise ECGSyntaxError(f"palette {t} outside 1..{MAX_COLORS}", lineno)
            continue
        if len(nums) != 3:
            raise ECGSyntaxError("edge line must be 'u v c'", lineno)
        u, v, c = nums
        n, t = header
        if u == v:
            raise ECGSyntaxError(f"self-loop at vertex {u}", lineno)
        if not u < v:
            raise ECGSyntaxError(f"endpoints must satisfy u < v, got {u} {v}", lineno)
        if not v < n or u < 0:
            raise ECGSyntaxError(f"vertex out of range 0..{n - 1}", lineno)
        if not 1 <= c <= t:
            raise ECGSyntaxError(f"color {c} exceeds palette {t}", lineno)
        if (u, v) in seen:
            raise ECGSyntaxError(f"duplicate pair ({u}, {v})", lineno)
        seen.add((u, v))
        edges.append((u, v, c))
    if header is None:
        raise ECGSyntaxError("missing header", 1)
    return from_edge_list(header[0], header[1], edges)


def write_ecg(g: EdgeColoredGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.append(f"{g.n} {g.t}")
    lines.extend(f"{u} {v} {c}" for u, v, c in g.edge_list())
    return "\n".join(lines) + "\n"
