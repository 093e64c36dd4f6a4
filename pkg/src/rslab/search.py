"""Exhaustive small-case search for minimum saturated graphs, plus the bound formulas."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import comb
from typing import Callable, Iterable, Iterator, Sequence

from .graphcore import EdgeColoredGraph, from_edge_list
from .saturation import is_saturated

BUDGET_ENV = "RS_LAB_BUDGET_SECS"
DEFAULT_TIME_LIMIT = 600.0


class BudgetExceeded(RuntimeError):
    pass


def _default_time_limit() -> float:
    raw = os.environ.get(BUDGET_ENV)
    return float(raw) if raw else DEFAULT_TIME_LIMIT


@dataclass(frozen=True)
class SearchBudget:
    max_n: int = 6
    max_t: int = 8
    max_edges: int | None = None  # None: up to C(n, 2)
    max_colorings: int = 50_000_000
    time_limit: float = field(default_factory=_default_time_limit)

    def __post_init__(self):
        for name in ("max_n", "max_t", "max_colorings"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.max_edges is not None and self.max_edges <= 0:
            raise ValueError("max_edges must be positive")
        if self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


@dataclass
class SearchOutcome:
    minimum: int | None
    witness: EdgeColoredGraph | None
    exhausted: bool
    nodes: int = 0
    elapsed: float = 0.0
    reason: str | None = None  # why the search stopped early

    def as_dict(self) -> dict:
        from .graphcore import write_ecg

        return {
            "minimum": self.minimum,
            "exhausted": self.exhausted,
            "witness": write_ecg(self.witness) if self.witness is not None else None,
            "nodes": self.nodes,
            "reason": self.reason,
        }


# -- graph enumeration --------------------------------------------------------

Pairs = tuple[tuple[int, int], ...]


def _degree_classes(n: int, pairs: Pairs) -> list[list[int]]:
    deg = [0] * n
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
    order = sorted(set(deg), reverse=True)
    return [[w for w in range(n) if deg[w] == d] for d in order]


def canonical_form(n: int, pairs: Iterable[tuple[int, int]]) -> Pairs:
    """Least sorted edge tuple over relabelings that list vertices by descending degree.

    The admissible relabelings are defined from degrees alone, so isomorphic
    graphs get the same form.
    """
    pairs = tuple(pairs)
    classes = _degree_classes(n, pairs)
    best: Pairs | None = None
    for choice in product(*(permutations(c) for c in classes)):
        perm = [0] * n
        pos = 0
        for block in choice:
            for w in block:
                perm[w] = pos
                pos += 1
        image = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in pairs))
        if best is None or image < best:
            best = image
    return best if best is not None else ()


def graphs_with_edges(n: int, m: int, prune: bool = True) -> list[Pairs]:
    """Edge sets on ``n`` labeled vertices with ``m`` edges.

    With ``prune`` only one canonical representative per isomorphism class is kept.
    """
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not prune:
        return [tuple(c) for c in combinations(all_pairs, m)]
    reps: set[Pairs] = {()}
    for _ in range(m):
        grown: set[Pairs] = set()
        for rep in reps:
            present = set(rep)
            for p in all_pairs:
                if p not in present:
                    grown.add(canonical_form(n, rep + (p,)))
        reps = grown
    return sorted(reps)


def restricted_growth_colorings(m: int, t: int) -> Iterator[tuple[int, ...]]:
    """Colorings of ``m`` ordered edges where each new color is the next unused label."""
    seq = [0] * m

    def rec(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == m:
            yield tuple(seq)
            return
        for c in range(1, min(top + 1, t) + 1):
            seq[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(0, 0)


def colorings(m: int, t: int, prune: bool = True) -> Iterator[tuple[int, ...]]:
    if prune:
        return restricted_growth_colorings(m, t)
    return product(range(1, t + 1), repeat=m)


# -- minimum search -----------------------------------------------------------


def _scan_graphs(n: int, ell: int, t: int, graphs: Sequence[Pairs], prune: bool,
                 deadline: float, max_colorings: int) -> tuple[int | None, tuple | None, int, str | None]:
    """First saturated coloring over ``graphs`` in order.

    Returns ``(graph index, coloring, nodes, abort reason)``.
    """
    nodes = 0
    for gi, pairs in enumerate(graphs):
        for cols in colorings(len(pairs), t, prune):
            nodes += 1
            if nodes > max_colorings:
                return None, None, nodes, "coloring budget exceeded"
            if nodes % 256 == 0 and time.monotonic() > deadline:
                return None, None, nodes, "time budget exceeded"
            g = from_edge_list(n, t, [(u, v, c) for (u, v), c in zip(pairs, cols)])
            if is_saturated(g, ell, t):
                return gi, cols, nodes, None
    return None, None, nodes, None


def _scan_chunk(args):
    n, ell, t, graphs, offset, prune, deadline, max_colorings = args
    gi, cols, nodes, reason = _scan_graphs(n, ell, t, graphs, prune, deadline, max_colorings)
    return (None if gi is None else gi + offset), cols, nodes, reason


def _search(n: int, ell: int, t: int, m_max: int, budget: SearchBudget, prune: bool,
            jobs: int) -> SearchOutcome:
    start = time.monotonic()
    deadline = start + budget.time_limit
    nodes = 0
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for m in range(m_max + 1):
            graphs = graphs_with_edges(n, m, prune)
            if pool is None:
                gi, cols, k, reason = _scan_graphs(n, ell, t, graphs, prune, deadline,
                                                   budget.max_colorings - nodes)
                nodes += k
                hits = [] if gi is None else [(gi, cols)]
                reasons = [reason] if reason else []
            else:
                # contiguous chunks; the lowest global index wins regardless of timing
                size = -(-len(graphs) // jobs) or 1
                tasks = [(n, ell, t, graphs[i:i + size], i, prune, deadline,
                          budget.max_colorings) for i in range(0, len(graphs), size)]
                hits, reasons = [], []
                # the first chunk, in graph order, that hit or aborted decides; node
                # counts then match what the serial scan would report
                for gi, cols, k, reason in pool.map(_scan_chunk, tasks):
                    nodes += k
                    if gi is not None:
                        hits.append((gi, cols))
                        break
                    if reason:
                        reasons.append(reason)
                        break
            if hits:
                gi, cols = hits[0]
                pairs = graphs[gi]
                witness = from_edge_list(n, t, [(u, v, c) for (u, v), c in zip(pairs, cols)])
                return SearchOutcome(m, witness, True, nodes, time.monotonic() - start)
            if reasons:
                return SearchOutcome(None, None, False, nodes, time.monotonic() - start,
                                     reason=f"{reasons[0]} at m={m}")
        return SearchOutcome(None, None, True, nodes, time.monotonic() - start)
    finally:
        if pool is not None:
            pool.shutdown()


def _check_args(n: int, ell: int, t: int) -> None:
    if ell < 3:
        raise ValueError(f"path order must be at least 3, got {ell}")
    if n < ell:
        raise ValueError(f"need n >= l (no path on {ell} vertices fits in {n}), got n={n}")
    if t < 1:
        raise ValueError(f"palette must be positive, got {t}")


def _over_budget(n: int, t: int, budget: SearchBudget) -> str | None:
    if n > budget.max_n:
        return f"n={n} exceeds budget max_n={budget.max_n}"
    if t > budget.max_t:
        return f"t={t} exceeds budget max_t={budget.max_t}"
    return None


def min_saturated_size(n: int, ell: int, t: int, budget: SearchBudget | None = None,
                       prune: bool = True, jobs: int = 1) -> SearchOutcome:
    """Least edge count of a saturated ``t``-colored graph on ``n`` vertices, with witness."""
    _check_args(n, ell, t)
    budget = budget or SearchBudget()
    reason = _over_budget(n, t, budget)
    if reason:
        return SearchOutcome(None, None, False, reason=reason)
    m_max = comb(n, 2) if budget.max_edges is None else min(budget.max_edges, comb(n, 2))
    out = _search(n, ell, t, m_max, budget, prune, jobs)
    if out.minimum is None and out.exhausted and m_max < comb(n, 2):
        out.exhausted = False
        out.reason = f"edge budget max_edges={m_max} reached"
    return out


def verify_lower_bound(n: int, ell: int, t: int, budget: SearchBudget | None = None,
                       jobs: int = 1) -> bool:
    """True iff no saturated ``t``-colored graph on ``n`` vertices has at most ``n-2`` edges."""
    if ell < 4:
        raise ValueError(f"lower bound is stated for l >= 4, got {ell}")
    _check_args(n, ell, t)
    budget = budget or SearchBudget()
    reason = _over_budget(n, t, budget)
    if reason:
        raise BudgetExceeded(reason)
    out = _search(n, ell, t, max(n - 2, -1), budget, True, jobs)
    if not out.exhausted:
        raise BudgetExceeded(out.reason)
    return out.minimum is None


# -- bounds -------------------------------------------------------------------


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def bound_new(n: int, ell: int) -> int:
    if ell < 5 or n < 1:
        raise ValueError(f"need l >= 5 and n >= 1, got n={n}, l={ell}")
    return _ceil_div(n, ell) * (comb(ell - 2, 2) + 4)


def bound_old(n: int, ell: int) -> int:
    if ell < 2 or n < 1:
        raise ValueError(f"need l >= 2 and n >= 1, got n={n}, l={ell}")
    return _ceil_div(n, ell - 1) * comb(ell - 1, 2)


def bounds_table(ells: Iterable[int], n_rule: Callable[[int], int] | int) -> list[dict]:
    """Rows ``{ell, n, old, new, improved}``; an int ``n_rule`` means ``n = n_rule * ell``."""
    rule = (lambda ell: n_rule * ell) if isinstance(n_rule, int) else n_rule
    rows = []
    for ell in ells:
        n = rule(ell)
        old, new = bound_old(n, ell), bound_new(n, ell)
        rows.append({"ell": ell, "n": n, "old": old, "new": new, "improved": new < old})
    return rows
