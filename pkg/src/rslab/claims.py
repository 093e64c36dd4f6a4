"""Catalog of checkable statements about the H construction, and its runner.

Each :class:`Claim` names a construction through ``params`` and an evaluator
through ``kind``; :func:`verify_claims` executes them and never stops on a
failure. Verdicts: PASS, FAIL, INFEASIBLE (a prescribed component cannot be
built in the palette) and SKIPPED (search budget ran out).
"""

from __future__ import annotations

import fnmatch
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Any, Callable

from .construct import (
    InfeasibleRecipe,
    assemble_theorem_graph,
    block_edges,
    build_G_star,
    build_H,
    build_H_star,
    build_rainbow_K,
    closed_form_edges,
    palette_for,
)
from .graphcore import (
    EdgeColoredGraph,
    colors_of,
    from_edge_list,
    is_proper_coloring,
    witness_from_vertices,
    write_ecg,
)
from .rainbow import enumerate_rainbow_paths_from, find_rainbow_path
from .saturation import (
    ALL_BLOCKED,
    Defect,
    blocked_table,
    first_defect,
    is_rainbow_free,
    saturation_defects,
)
from .search import BudgetExceeded, SearchBudget, bound_new, bound_old, min_saturated_size, verify_lower_bound

PASS, FAIL, INFEASIBLE, SKIPPED = "PASS", "FAIL", "INFEASIBLE", "SKIPPED"
REPORT_SCHEMA = "rslab.claims/1"


@dataclass(frozen=True)
class Claim:
    id: str
    source: str
    kind: str
    params: dict
    expected: Any  # None marks an exploratory claim with no stated value
    note: str | None = None
    extrapolated: bool = False


@dataclass
class ClaimResult:
    id: str
    source: str
    params: dict
    expected: Any
    computed: Any
    verdict: str
    witness: Any = None
    note: str | None = None
    ms: float = 0.0

    def as_dict(self) -> dict:
        out = {
            "id": self.id,
            "source": self.source,
            "params": self.params,
            "expected": self.expected,
            "computed": self.computed,
            "verdict": self.verdict,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        out["ms"] = round(self.ms, 3)
        return out


class _Infeasible(Exception):
    pass


# -- graph selection ----------------------------------------------------------


def _graph(p: dict) -> EdgeColoredGraph:
    kind = p["graph"]
    if kind == "H":
        return build_H(p["ell"])
    if kind == "Hstar":
        return build_H_star(p["ell"])
    if kind == "Gstar":
        return build_G_star(p["k"], p["ell"])
    if kind == "case":
        a = assemble_theorem_graph(p["n"], p["ell"], t=p.get("t"))
        if not a.feasible:
            raise _Infeasible(a.infeasible)
        return a.graph
    if kind == "custom":
        return from_edge_list(p["n"], p["t"], [tuple(e) for e in p["edges"]])
    raise ValueError(f"unknown graph kind {kind!r}")


def _order(p: dict) -> int:
    return p.get("order", p.get("ell"))


def _blocked_json(b) -> Any:
    return "ALL" if b is ALL_BLOCKED else sorted(b)


def _defect_note(g: EdgeColoredGraph, ell: int, d: Defect) -> str:
    return f"adding {d.u}-{d.v} in color {d.color} creates no rainbow path on {ell} vertices"


# -- evaluators: each returns (computed, passed, witness, note) -------------------


def _ev_edge_count(p):
    return _graph(p).m, None, None


def _ev_palette(p):
    return list(colors_of(_graph(p).colors_used())), None, None


def _ev_proper(p):
    return is_proper_coloring(_graph(p)), None, None


def _ev_rainbow_free(p):
    g = _graph(p)
    w = find_rainbow_path(g, p["ell"])
    if w is None:
        return True, None, None
    return False, {"path": list(w.vertices), "colors": list(w.colors)}, "rainbow path found"


def _ev_blocked(p):
    g = _graph(p)
    table = blocked_table(g, _order(p))
    vertices = p.get("vertices")
    if vertices is None:
        return {str(v): _blocked_json(b) for v, b in table.items()}, None, None
    return {str(v): _blocked_json(table[v]) for v in vertices}, None, None


def _ev_paths_from(p):
    g = _graph(p)
    ws = enumerate_rainbow_paths_from(g, p["vertex"], _order(p))
    return [list(w.vertices) for w in ws], None, None


def _ev_saturated(p):
    g = _graph(p)
    ell = p["ell"]
    if not is_rainbow_free(g, ell):
        w = find_rainbow_path(g, ell)
        return False, {"rainbow_path": list(w.vertices)}, "graph is not rainbow-free"
    d = first_defect(g, ell)
    if d is None:
        return True, None, f"0 defects over {len(g.non_edges())} non-adjacent pairs"
    total = len(saturation_defects(g, ell))
    return False, {"defect": d.as_dict(), "defects": total}, _defect_note(g, ell, d) + f" ({total} defects)"


def _ev_witness_path(p):
    g = _graph(p)
    u, v, c = p["added_edge"]
    h = g.with_edge(u, v, c)
    listed = p["path"]
    try:
        w = witness_from_vertices(h, listed)
        ok = w.is_rainbow and w.order == p["ell"]
        note = None if ok else f"listed path colors {list(w.colors)} are not a rainbow P{p['ell']}"
    except ValueError as exc:
        ok, note = False, f"listed path invalid: {exc}"
    found = find_rainbow_path(h, p["ell"], require_edge=(u, v))
    witness = None if found is None else {"path": list(found.vertices), "colors": list(found.colors)}
    return ok and found is not None, witness, note


def _ev_bound_new(p):
    return bound_new(p["n"], p["ell"]), None, None


def _ev_bound_old(p):
    return bound_old(p["n"], p["ell"]), None, None


def _ev_improves(p):
    n, ell = p["n"], p["ell"]
    new, old = bound_new(n, ell), bound_old(n, ell)
    return new < old, {"new": new, "old": old}, None


def _ev_case_edges(p):
    a = assemble_theorem_graph(p["n"], p["ell"], t=p.get("t"))
    note = None if a.feasible else f"counted from components; {a.infeasible}"
    if a.feasible and a.graph.m != a.expected_edges:
        raise AssertionError("assembled graph disagrees with its component count")
    return a.expected_edges, {"copies": a.copies, "extras": [c.label() for c in a.recipe.extras]}, note


def _ev_case_palette(p):
    return assemble_theorem_graph(p["n"], p["ell"]).t, None, "sub-case palette as stated"


def _ev_case_bound(p):
    a = assemble_theorem_graph(p["n"], p["ell"], t=p.get("t"))
    bound = bound_new(p["n"], p["ell"])
    return a.expected_edges <= bound, {"edges": a.expected_edges, "bound": bound}, None


def _ev_rainbow_K(p):
    build_rainbow_K(p["a"], p["t"])  # InfeasibleRecipe propagates
    return True, None, None


def _ev_min_size(p, budget: SearchBudget, jobs: int):
    out = min_saturated_size(p["n"], p["ell"], p["t"], budget, jobs=jobs)
    if not out.exhausted:
        raise BudgetExceeded(out.reason)
    wit = None if out.witness is None else write_ecg(out.witness)
    return out.minimum, wit, f"{out.nodes} colored graphs tested"


def _ev_lower_bound(p, budget: SearchBudget, jobs: int):
    return verify_lower_bound(p["n"], p["ell"], p["t"], budget, jobs=jobs), None, None


_EVALUATORS: dict[str, Callable] = {
    "edge_count": _ev_edge_count,
    "palette": _ev_palette,
    "proper": _ev_proper,
    "rainbow_free": _ev_rainbow_free,
    "blocked": _ev_blocked,
    "paths_from": _ev_paths_from,
    "saturated": _ev_saturated,
    "witness_path": _ev_witness_path,
    "bound_new": _ev_bound_new,
    "bound_old": _ev_bound_old,
    "bound_improves": _ev_improves,
    "case_edges": _ev_case_edges,
    "case_palette": _ev_case_palette,
    "case_bound": _ev_case_bound,
    "rainbow_K": _ev_rainbow_K,
}
_SEARCH_EVALUATORS: dict[str, Callable] = {
    "min_size": _ev_min_size,
    "lower_bound": _ev_lower_bound,
}
KINDS = frozenset(_EVALUATORS) | frozenset(_SEARCH_EVALUATORS)


# -- catalog ------------------------------------------------------------------


def _frac_json(x: Fraction) -> Any:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _empty_except(n: int, special: dict[int, list[int]]) -> dict[str, list[int]]:
    return {str(v): special.get(v, []) for v in range(n)}


def _construction_claims(ell_max: int) -> list[Claim]:
    out = []
    for ell in range(5, ell_max + 1):
        H = {"graph": "H", "ell": ell}
        t = palette_for(ell)
        out += [
            Claim(f"D2.1-edges-{ell}", "Def. 2.1", "edge_count", H, block_edges(ell)),
            Claim(f"L2.2-palette-{ell}", "Lemma 2.2", "palette", H, list(range(1, t + 1))),
            Claim(f"L2.2-proper-{ell}", "Lemma 2.2", "proper", H, True),
            Claim(f"L2.2-rainbowfree-{ell}", "Lemma 2.2", "rainbow_free", H, True),
        ]
    return out


def _blocked_table_claims(ell_max: int) -> list[Claim]:
    out = []
    for ell in range(5, ell_max + 1):
        star = {"graph": "Hstar", "ell": ell, "order": ell - 1}
        others = [v for v in range(ell - 1) if v not in (ell - 4, ell - 3)]
        out.append(Claim(
            f"L2.3-empty-{ell}", "Lemma 2.3", "blocked", {**star, "vertices": others},
            {str(v): [] for v in others},
            note="blocked set empty off v_{l-4}, v_{l-3}",
            extrapolated=ell % 2 == 0,
        ))
        if ell >= 7:
            out.append(Claim(
                f"L2.3-Hstar-table-{ell}", "Lemma 2.3 (proof)", "blocked", star,
                _empty_except(ell - 1, {ell - 4: [2 * ell - 5], ell - 3: [2 * ell - 6]}),
                note="even l: pattern extrapolated from the odd case" if ell % 2 == 0 else None,
                extrapolated=ell % 2 == 0,
            ))
    return out


def _prop25_claims() -> list[Claim]:
    star = {"graph": "Hstar", "ell": 5, "order": 4}
    H = {"graph": "H", "ell": 5, "order": 4}
    G2 = {"graph": "Gstar", "k": 2, "ell": 5}
    out = [
        Claim("P2.5-blocked-v0", "Prop. 2.5", "blocked", {**star, "vertices": [0]}, {"0": []}),
        Claim("P2.5-blocked-v1", "Prop. 2.5", "blocked", {**star, "vertices": [1]}, {"1": [2, 5]}),
        Claim("P2.5-blocked-v2", "Prop. 2.5", "blocked", {**star, "vertices": [2]}, {"2": [1, 4]}),
        Claim("P2.5-blocked-v3", "Prop. 2.5", "blocked", {**star, "vertices": [3]}, {"3": []}),
        Claim("P2.5-H-blocked", "Prop. 2.5", "blocked", H,
              {"0": [], "1": [2], "2": [1], "3": [], "4": []}),
        Claim("P2.5-paths-v1", "Prop. 2.5", "paths_from", {**star, "vertex": 1},
              [[1, 0, 2, 3], [1, 3, 2, 0]]),
        Claim("P2.5-paths-v2", "Prop. 2.5", "paths_from", {**star, "vertex": 2},
              [[2, 0, 1, 3], [2, 3, 1, 0]]),
        Claim("P2.5-edges", "Prop. 2.5", "edge_count", G2, _frac_json(Fraction(7 * 10, 5))),
        Claim("P2.5-sat", "Prop. 2.5", "saturated", G2, True),
        # copy j of v_i is vertex 5*j + i
        Claim("P2.5-e1", "Prop. 2.5", "witness_path",
              {**G2, "added_edge": [1, 6, 2], "path": [2, 3, 1, 6, 7]}, True),
        Claim("P2.5-e2", "Prop. 2.5", "witness_path",
              {**G2, "added_edge": [2, 7, 1], "path": [1, 3, 2, 7, 6]}, True),
        Claim("P2.5-e3-c1", "Prop. 2.5", "witness_path",
              {**G2, "added_edge": [1, 7, 1], "path": [2, 3, 1, 7, 6]}, True),
        Claim("P2.5-e3-c2", "Prop. 2.5", "witness_path",
              {**G2, "added_edge": [1, 7, 2], "path": [2, 3, 1, 7, 6]}, True),
    ]
    return out


def _prop26_claims() -> list[Claim]:
    star = {"graph": "Hstar", "ell": 6, "order": 5}
    H = {"graph": "H", "ell": 6, "order": 5}
    G2 = {"graph": "Gstar", "k": 2, "ell": 6}
    return [
        Claim("P2.6-blocked-v2", "Prop. 2.6", "blocked", {**star, "vertices": [2]}, {"2": [1, 7]}),
        Claim("P2.6-blocked-v3", "Prop. 2.6", "blocked", {**star, "vertices": [3]}, {"3": [1, 6]}),
        Claim("P2.6-H-blocked", "Prop. 2.6", "blocked", H,
              {"0": [], "1": [], "2": [1], "3": [1], "4": [], "5": []}),
        Claim("P2.6-paths-v2", "Prop. 2.6", "paths_from", {**star, "vertex": 2},
              [[2, 0, 1, 3, 4], [2, 4, 3, 0, 1], [2, 4, 3, 1, 0]]),
        Claim("P2.6-paths-v3", "Prop. 2.6", "paths_from", {**star, "vertex": 3},
              [[3, 1, 0, 2, 4], [3, 4, 2, 0, 1], [3, 4, 2, 1, 0]]),
        Claim("P2.6-edges", "Prop. 2.6", "edge_count", G2, _frac_json(Fraction(5 * 12, 3))),
        Claim("P2.6-sat", "Prop. 2.6", "saturated", G2, True),
        # copy j of v_i is vertex 6*j + i
        Claim("P2.6-e1", "Prop. 2.6", "witness_path",
              {**G2, "added_edge": [2, 8, 1], "path": [0, 3, 4, 2, 8, 6]}, True,
              note="edge printed as v_2^1 v_2^1; read as v_2^1 v_2^2"),
        Claim("P2.6-e2", "Prop. 2.6", "witness_path",
              {**G2, "added_edge": [3, 9, 1], "path": [1, 2, 4, 3, 9, 7]}, True),
        Claim("P2.6-e3", "Prop. 2.6", "witness_path",
              {**G2, "added_edge": [2, 9, 1], "path": [0, 3, 4, 2, 9, 7]}, True),
    ]


def _saturation_claims(ell_max: int) -> list[Claim]:
    out = []
    for ell in range(7, ell_max + 1):
        H = {"graph": "H", "ell": ell}
        out.append(Claim(f"C2.4-sat-{ell}", "Cor. 2.4", "saturated", H, True))
        out.append(Claim(
            f"C2.4-blocked-x-{ell}", "Cor. 2.4", "blocked",
            {**H, "order": ell - 1, "vertices": [ell - 2, ell - 1]},
            {str(ell - 2): [], str(ell - 1): []},
        ))
    for ell in range(5, ell_max + 1):
        G2 = {"graph": "Gstar", "k": 2, "ell": ell}
        out.append(Claim(f"T2.7-edges-{ell}", "Thm. 2.7", "edge_count", G2, bound_new(2 * ell, ell)))
        out.append(Claim(f"T2.7-sat-{ell}", "Thm. 2.7", "saturated", G2, True))
    out += [
        Claim("X-H5-sat", "Cor. 2.4 (excluded l=5)", "saturated", {"graph": "H", "ell": 5}, None,
              note="exploratory: standalone H(5) at t=5"),
        Claim("X-H6-sat", "Cor. 2.4 (excluded l=6)", "saturated", {"graph": "H", "ell": 6}, None,
              note="exploratory: standalone H(6) at t=7"),
    ]
    return out


def _bound_claims(ell_max: int) -> list[Claim]:
    out = [
        Claim("T1.2-bound-10-5", "Thm. 1.2", "bound_new", {"n": 10, "ell": 5}, 14),
        Claim("T1.1iii-bound-10-5", "Thm. 1.1(iii)", "bound_old", {"n": 10, "ell": 5}, 18),
        Claim("T1.2-bound-12-6", "Thm. 1.2 vs Prop. 2.6", "bound_new", {"n": 12, "ell": 6},
              _frac_json(Fraction(5 * 12, 3))),
    ]
    for ell in range(5, ell_max + 1):
        out.append(Claim(f"T1.2-improves-{ell}", "Thm. 1.2 vs Thm. 1.1(iii)", "bound_improves",
                         {"n": 10 * ell, "ell": ell}, True))
    return out


def _case_claims() -> list[Claim]:
    out = []
    for case, ell in ((1, 5), (2, 6), (3, 7)):
        for r in range(ell):
            n = 2 * ell + r
            base = {"n": n, "ell": ell}
            pre = f"C{case}-n≡{r}"
            src = f"Sec. 3 Case {case}"
            out.append(Claim(f"{pre}-edges", src, "case_edges", base,
                             _frac_json(closed_form_edges(n, ell))))
            out.append(Claim(f"{pre}-sat", src, "saturated", {"graph": "case", **base}, True))
            out.append(Claim(f"{pre}-bound", src, "case_bound", base, True,
                             note=f"edges <= ceil(n/l)*(C(l-2,2)+4) = {bound_new(n, ell)}"))
    out += [
        Claim("C1-n≡1-palette", "Sec. 3 Case 1", "case_palette", {"n": 11, "ell": 5}, 5,
              note="block palette is 2l-5 = 5, sub-case states t=6"),
        Claim("C1-n≡4-K4", "Sec. 3 Case 1", "rainbow_K", {"a": 4, "t": 5}, True,
              note="rainbow K4 component under t=2l-5=5"),
        Claim("X-C1-n≡4-K4-t6", "Sec. 3 Case 1", "saturated",
              {"graph": "case", "n": 14, "ell": 5, "t": 6}, None,
              note="exploratory: same recipe with t=6"),
        Claim("X-C1-n≡1-disjoint-triangles", "Sec. 3 Case 1", "saturated",
              {"graph": "custom", "n": 11, "t": 6, "ell": 5,
               "edges": [list(e) for e in _disjoint_triangles_case()]}, None,
              note="exploratory: H(5) + triangles colored {1,2,3} and {4,5,6} at t=6"),
    ]
    return out


def _disjoint_triangles_case() -> list[tuple[int, int, int]]:
    edges = build_H(5).edge_list()
    edges += [(5, 6, 1), (5, 7, 2), (6, 7, 3), (8, 9, 4), (8, 10, 5), (9, 10, 6)]
    return edges


def _search_claims() -> list[Claim]:
    out = []
    for n in (5, 6):
        out.append(Claim(f"T1.1ii-P4-n{n}-t8", "Thm. 1.1(ii)", "min_size",
                         {"n": n, "ell": 4, "t": 8}, n - 1))
    out.append(Claim("X-P4-n4-t8", "Thm. 1.1(ii) (n = l)", "min_size",
                     {"n": 4, "ell": 4, "t": 8}, None,
                     note="exploratory: degenerate n = l, every 4-vertex path is spanning"))
    for n, ell, t in ((5, 5, 5), (6, 5, 5), (4, 4, 2), (5, 4, 8)):
        out.append(Claim(f"T1.1i-lower-n{n}-l{ell}-t{t}", "Thm. 1.1(i)", "lower_bound",
                         {"n": n, "ell": ell, "t": t}, True))
    for n in (5, 6):
        out.append(Claim(f"X-sat-n{n}-l5-t5", "Thm. 1.2 (small n)", "min_size",
                         {"n": n, "ell": 5, "t": 5}, None,
                         note="exploratory: exact minimum, no stated value"))
    return out


def claim_catalog(ell_max: int = 9) -> list[Claim]:
    if not 5 <= ell_max <= 12:
        raise ValueError(f"ell_max must lie in 5..12, got {ell_max}")
    claims = (
        _construction_claims(ell_max)
        + _blocked_table_claims(ell_max)
        + _prop25_claims()
        + _prop26_claims()
        + _saturation_claims(ell_max)
        + _bound_claims(ell_max)
        + _case_claims()
        + _search_claims()
    )
    ids = [c.id for c in claims]
    if len(ids) != len(set(ids)):
        raise AssertionError("duplicate claim ids")
    return claims


def filter_claims(claims: list[Claim], pattern: str | None) -> list[Claim]:
    if not pattern:
        return list(claims)
    return [c for c in claims if fnmatch.fnmatchcase(c.id, pattern)]


# -- runner -------------------------------------------------------------------


def evaluate(claim: Claim, budget: SearchBudget | None = None, jobs: int = 1) -> ClaimResult:
    budget = budget or SearchBudget()
    start = time.perf_counter()
    res = ClaimResult(claim.id, claim.source, claim.params, claim.expected, None, FAIL,
                      note=claim.note)
    notes = [claim.note] if claim.note else []
    try:
        if claim.kind in _SEARCH_EVALUATORS:
            computed, witness, note = _SEARCH_EVALUATORS[claim.kind](claim.params, budget, jobs)
        else:
            computed, witness, note = _EVALUATORS[claim.kind](claim.params)
        res.computed, res.witness = computed, witness
        if note:
            notes.append(note)
        if claim.expected is None:
            res.verdict = PASS
            notes.append("finding: no stated value to compare")
        else:
            res.verdict = PASS if computed == claim.expected else FAIL
    except (InfeasibleRecipe, _Infeasible) as exc:
        res.verdict = INFEASIBLE
        notes.append(str(exc))
    except BudgetExceeded as exc:
        res.verdict = SKIPPED
        notes.append(f"budget: {exc}")
    if res.verdict == FAIL and not notes:
        notes.append("computed value differs from the expected value")
    if claim.extrapolated:
        notes.append("extrapolated expectation")
    res.note = "; ".join(notes) or None
    res.ms = (time.perf_counter() - start) * 1000
    return res


def verify_claims(claims: list[Claim], budget: SearchBudget | None = None,
                  jobs: int = 1) -> tuple[list[ClaimResult], dict[str, int]]:
    """Run every claim; results come back ordered by claim id."""
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(evaluate, claims, [budget] * len(claims)))
    else:
        results = [evaluate(c, budget) for c in claims]
    results.sort(key=lambda r: r.id)
    return results, summarize(results)


def summarize(results: list[ClaimResult]) -> dict[str, int]:
    summary = {"pass": 0, "fail": 0, "infeasible": 0, "skipped": 0}
    for r in results:
        summary[r.verdict.lower()] += 1
    return summary


def report_json(results: list[ClaimResult], summary: dict[str, int]) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "claims": [r.as_dict() for r in results],
        "summary": summary,
    }


def known_discrepancies() -> dict[str, str]:
    """Claim ids whose non-PASS verdict reflects the source text, with reasons."""
    text = resources.files("rslab").joinpath("known_discrepancies.json").read_text()
    return json.loads(text)["claims"]


def regressions(results: list[ClaimResult], whitelist: dict[str, str] | None = None) -> list[ClaimResult]:
    """FAIL results not covered by the discrepancy whitelist."""
    wl = known_discrepancies() if whitelist is None else whitelist
    return [r for r in results if r.verdict == FAIL and r.id not in wl]


def format_table(results: list[ClaimResult], summary: dict[str, int],
                 whitelist: dict[str, str] | None = None) -> str:
    wl = whitelist or {}
    width = max([len(r.id) for r in results] + [5])
    lines = [f"{'claim':<{width}}  {'verdict':<18} expected -> computed"]
    for r in results:
        mark = " (known)" if r.id in wl and r.verdict != PASS else ""
        exp = json.dumps(r.expected, ensure_ascii=False)
        got = json.dumps(r.computed, ensure_ascii=False)
        if len(exp) > 40:
            exp = exp[:37] + "..."
        if len(got) > 40:
            got = got[:37] + "..."
        lines.append(f"{r.id:<{width}}  {r.verdict + mark:<18} {exp} -> {got}")
    lines.append(
        "summary: " + ", ".join(f"{k}={v}" for k, v in summary.items())
    )
    return "\n".join(lines) + "\n"
