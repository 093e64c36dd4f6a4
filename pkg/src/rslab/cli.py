"""Command-line front end: ``rslab <command> ...``.

Exit codes: 0 success (or the checked property holds), 1 the checked property
fails or a claim regressed, 2 usage or input error, 3 infeasible construction.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import claims as claims_mod
from .construct import (
    InfeasibleRecipe,
    assemble_theorem_graph,
    build_G_star,
    build_H,
    build_rainbow_K,
)
from .graphcore import GraphError, colors_of, parse_ecg, write_ecg
from .rainbow import find_rainbow_path
from .saturation import blocked_mask, is_rainbow_free, saturation_defects
from .search import SearchBudget, bounds_table, min_saturated_size

SCHEMA = "rslab.cli/1"


class _UsageError(Exception):
    pass


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj: dict) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _read_graph(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"{path}: {exc.strerror}") from None
    try:
        return parse_ecg(text)
    except GraphError as exc:
        raise _UsageError(f"{path}: {exc}") from None


# -- construct ----------------------------------------------------------------


def _cmd_construct(args) -> int:
    meta: dict = {"family": args.family}
    try:
        if args.family == "H":
            g = build_H(args.ell)
            meta["ell"] = args.ell
        elif args.family == "gstar":
            g = build_G_star(args.k, args.ell)
            meta.update(ell=args.ell, k=args.k)
        elif args.family == "rainbowK":
            g = build_rainbow_K(args.a, args.t)
            meta.update(a=args.a, t=args.t)
        else:
            asm = assemble_theorem_graph(args.n, args.ell, t=args.t)
            meta.update(
                n=args.n, ell=args.ell, t=asm.t, copies=asm.copies,
                extras=[c.label() for c in asm.recipe.extras],
                expected_edges=asm.expected_edges, notes=asm.notes,
            )
            if not asm.feasible:
                meta["infeasible"] = asm.infeasible
                if args.json:
                    _emit(_dump(meta), args.output)
                print(f"INFEASIBLE: {asm.infeasible}", file=sys.stderr)
                return 3
            g = asm.graph
    except InfeasibleRecipe as exc:
        if args.json:
            _emit(_dump({**meta, "infeasible": str(exc)}), args.output)
        print(f"INFEASIBLE: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    if args.json:
        _emit(_dump({**meta, "n": g.n, "t": g.t, "edges": g.m, "ecg": write_ecg(g)}), args.output)
    else:
        _emit(write_ecg(g), args.output)
    return 0


# -- check --------------------------------------------------------------------


def _cmd_check(args) -> int:
    g = _read_graph(args.file)
    if args.what == "rainbow-free":
        w = find_rainbow_path(g, args.ell)
        if args.json:
            payload = {"check": "rainbow-free", "ell": args.ell, "rainbow_free": w is None}
            if w is not None:
                payload["witness"] = {"vertices": list(w.vertices), "colors": list(w.colors)}
            _emit(_dump(payload))
        elif w is None:
            print("RAINBOW-FREE")
        else:
            print(f"CONTAINS RAINBOW PATH: {' '.join(map(str, w.vertices))} "
                  f"colors {' '.join(map(str, w.colors))}")
        return 0 if w is None else 1

    t = g.t if args.t is None else args.t
    if t != g.t:
        raise _UsageError(f"--t {t} does not match the file palette {g.t}")
    if not is_rainbow_free(g, args.ell):
        w = find_rainbow_path(g, args.ell)
        if args.json:
            _emit(_dump({"check": "saturated", "ell": args.ell, "t": t, "saturated": False,
                         "rainbow_free": False, "witness": {"vertices": list(w.vertices),
                                                            "colors": list(w.colors)}}))
        else:
            print(f"NOT RAINBOW-FREE: {' '.join(map(str, w.vertices))}")
        return 1
    defects = saturation_defects(g, args.ell, t, jobs=args.jobs)
    if args.json:
        _emit(_dump({"check": "saturated", "ell": args.ell, "t": t,
                     "saturated": not defects, "rainbow_free": True,
                     "defects": [d.as_dict() for d in defects]}))
    else:
        label = "SATURATED" if not defects else "NOT SATURATED"
        print(f"{label}, {len(defects)} defects")
        for d in defects:
            print(f"{d.u} {d.v} {d.color}")
    return 0 if not defects else 1


# -- colors -------------------------------------------------------------------


def _cmd_colors(args) -> int:
    g = _read_graph(args.file)
    try:
        mask = blocked_mask(g, args.vertex, args.order)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    colors = None if mask is None else list(colors_of(mask))
    if args.json:
        _emit(_dump({"vertex": args.vertex, "order": args.order,
                     "blocked": "ALL" if colors is None else colors}))
    else:
        print("ALL" if colors is None else "{" + ",".join(map(str, colors)) + "}")
    return 0


# -- search / bounds ----------------------------------------------------------


def _cmd_search(args) -> int:
    budget = SearchBudget(max_n=max(args.n, 6), max_t=max(args.t, 8),
                          **({"time_limit": args.time} if args.time else {}))
    try:
        out = min_saturated_size(args.n, args.ell, args.t, budget, jobs=args.jobs)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    payload = {"n": args.n, "ell": args.ell, "t": args.t, **out.as_dict()}
    if args.timing:
        payload["wall_time"] = round(out.elapsed, 3)
    _emit(_dump(payload))
    return 0 if out.exhausted else 1


def _cmd_bounds(args) -> int:
    if args.ell_from < 5 or args.ell_to < args.ell_from:
        raise _UsageError("need 5 <= --ell-from <= --ell-to")
    rows = bounds_table(range(args.ell_from, args.ell_to + 1), args.n_multiplier)
    if args.json:
        _emit(_dump({"n_multiplier": args.n_multiplier, "rows": rows}))
        return 0
    print(f"{'ell':>4} {'n':>6} {'old':>8} {'new':>8}  improved")
    for r in rows:
        print(f"{r['ell']:>4} {r['n']:>6} {r['old']:>8} {r['new']:>8}  {'yes' if r['improved'] else 'no'}")
    return 0


# -- verify-paper -------------------------------------------------------------


def _cmd_verify(args) -> int:
    try:
        catalog = claims_mod.claim_catalog(args.ell_max)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    selected = claims_mod.filter_claims(catalog, args.filter)
    if not selected:
        raise _UsageError(f"no claim id matches {args.filter!r}")
    budget = SearchBudget(**({"time_limit": args.time} if args.time else {}))
    results, summary = claims_mod.verify_claims(selected, budget, jobs=args.jobs)
    whitelist = claims_mod.known_discrepancies()
    regressions = claims_mod.regressions(results, whitelist)
    report = claims_mod.report_json(results, summary)
    report["regressions"] = [r.id for r in regressions]
    if not args.timing:
        for entry in report["claims"]:
            entry.pop("ms", None)
    if args.json:
        Path(args.json).write_text(
            json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    sys.stdout.write(claims_mod.format_table(results, summary, whitelist))
    if regressions:
        print("regressions: " + ", ".join(r.id for r in regressions))
        return 1
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rslab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="write a construction as ECG")
    csub = c.add_subparsers(dest="family", required=True)
    for name in ("H", "gstar", "case", "rainbowK"):
        f = csub.add_parser(name)
        f.add_argument("-o", "--output", help="write to FILE instead of stdout")
        f.add_argument("--json", action="store_true")
        if name in ("H", "gstar", "case"):
            f.add_argument("--ell", type=int, required=True)
        if name == "gstar":
            f.add_argument("--k", type=int, required=True)
        if name == "case":
            f.add_argument("--n", type=int, required=True)
            f.add_argument("--t", type=int, help="override the palette the recipe prescribes")
        if name == "rainbowK":
            f.add_argument("--a", type=int, required=True)
            f.add_argument("--t", type=int, required=True)
    c.set_defaults(func=_cmd_construct)

    k = sub.add_parser("check", help="rainbow-freeness and saturation of an ECG file")
    ksub = k.add_subparsers(dest="what", required=True)
    rf = ksub.add_parser("rainbow-free")
    rf.add_argument("--ell", type=int, required=True)
    rf.add_argument("--json", action="store_true")
    rf.add_argument("file")
    sat = ksub.add_parser("saturated")
    sat.add_argument("--ell", type=int, required=True)
    sat.add_argument("--t", type=int)
    sat.add_argument("--json", action="store_true")
    sat.add_argument("--jobs", type=int, default=1)
    sat.add_argument("file")
    k.set_defaults(func=_cmd_check)

    col = sub.add_parser("colors", help="blocked pendant colors")
    colsub = col.add_subparsers(dest="what", required=True)
    bl = colsub.add_parser("blocked")
    bl.add_argument("--vertex", type=int, required=True)
    bl.add_argument("--order", type=int, required=True)
    bl.add_argument("--json", action="store_true")
    bl.add_argument("file")
    col.set_defaults(func=_cmd_colors)

    s = sub.add_parser("search", help="exhaustive minimum saturated graph search")
    ssub = s.add_subparsers(dest="what", required=True)
    mn = ssub.add_parser("min")
    mn.add_argument("--n", type=int, required=True)
    mn.add_argument("--ell", type=int, required=True)
    mn.add_argument("--t", type=int, required=True)
    mn.add_argument("--jobs", type=int, default=1)
    mn.add_argument("--time", type=float, help="time budget in seconds")
    mn.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    mn.add_argument("--timing", action="store_true", help="include wall time in the output")
    s.set_defaults(func=_cmd_search)

    b = sub.add_parser("bounds", help="old vs new upper bound table")
    b.add_argument("--ell-from", type=int, required=True)
    b.add_argument("--ell-to", type=int, required=True)
    b.add_argument("--n-multiplier", type=int, required=True)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=_cmd_bounds)

    v = sub.add_parser("verify-paper", help="run the claim catalog")
    v.add_argument("--ell-max", type=int, default=9)
    v.add_argument("--filter", help="glob over claim ids")
    v.add_argument("--json", metavar="FILE", help="write the JSON report to FILE")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--time", type=float, help="search time budget in seconds")
    v.add_argument("--timing", action="store_true", help="keep per-claim milliseconds in the report")
    v.set_defaults(func=_cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"rslab: error: {exc}", file=sys.stderr)
        return 2


def run(argv: Sequence[str]) -> int:
    try:
        return main(argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
