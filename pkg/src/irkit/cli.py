"""Command-line front end.

Subcommands: invariant, bounds, code-search, core, equiv, critical, tables.
Graphs are given in the expression DSL (K(n), Kbar(n), C(n), W(n), KG(n,r),
M(e), schlafli, ~e, e*e, e|e, e x e, e+e, e^k, g6:..., @file).

Exit codes: 0 all requested computations conclusive; 2 usage/parse error;
3 inconclusive within budget; 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .cache import InvariantCache
from .config import RunConfig, config_from_env
from .exactness import LogRatio
from .fractional import fractional_chromatic
from .graphs import Graph, GraphError, ParseError, canonical_key, eval_text, parse, evaluate
from .hom import BudgetExhausted, core_of, is_core
from .invariants import chromatic_number, clique_cover_number, clique_number, independence_number, minrank_gf2
from .ratio import (
    CERTIFIED_CRITICAL,
    UNKNOWN,
    Workspace,
    criticality_check,
    equivalence_check,
    ir_bounds,
)
from .theta import ThetaError

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="irkit", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--tol", type=float, default=None, help="theta tolerance (default 1e-6)")
    ap.add_argument("--budget-nodes", type=int, default=None, help="search node budget")
    ap.add_argument("--budget-secs", type=float, default=None, help="soft wall-clock guard")
    ap.add_argument("--max-power", type=int, default=None, help="strong powers for capacity lower bounds")
    ap.add_argument("--cache-dir", default=None, help="invariant cache directory")
    ap.add_argument("--format", dest="fmt", choices=("text", "json"), default=None)
    ap.add_argument("--pivots", default=None, help="semicolon-separated pivot expressions")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="exact invariants of a graph expression")
    p.add_argument("expr")
    p.add_argument("names", nargs="+",
                   help="any of: alpha omega chi cover chif chibarf theta minrank capacity")

    p = sub.add_parser("bounds", help="certified bounds on Ir(channel/source)")
    p.add_argument("--source", required=True)
    p.add_argument("--channel", required=True)

    p = sub.add_parser("code-search", help="(k,n) code frontier for a pair")
    p.add_argument("--source", required=True)
    p.add_argument("--channel", required=True)
    p.add_argument("--kmax", type=int, default=2)
    p.add_argument("--nmax", type=int, default=2)

    p = sub.add_parser("core", help="core of a graph expression")
    p.add_argument("expr")

    p = sub.add_parser("equiv", help="information equivalence / order report")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("critical", help="information criticality check")
    p.add_argument("expr")

    sub.add_parser("tables", help="recompute the built-in reference table of known values")
    return ap


def _config(args) -> RunConfig:
    cfg = config_from_env()
    updates = {}
    if args.tol is not None:
        updates["tol"] = args.tol
    if args.budget_nodes is not None:
        updates["budget_nodes"] = args.budget_nodes
    if args.budget_secs is not None:
        updates["budget_seconds"] = args.budget_secs
    if args.max_power is not None:
        updates["max_power"] = args.max_power
    if args.cache_dir is not None:
        updates["cache_dir"] = args.cache_dir
    if args.fmt is not None:
        updates["output_format"] = args.fmt
    if args.pivots is not None:
        updates["pivots"] = tuple(p.strip() for p in args.pivots.split(";") if p.strip())
    if updates:
        from dataclasses import replace

        cfg = replace(cfg, **updates)
    return cfg


def _emit(cfg: RunConfig, payload: dict, text_lines: list[str]) -> None:
    if cfg.output_format == "json":
        print(json.dumps(payload, indent=2, default=str))
    else:
        for line in text_lines:
            print(line)


def _fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cmd_invariant(args, cfg: RunConfig) -> int:
    g = eval_text(args.expr, cfg.size_limit)
    ws = Workspace(cfg, _cache(cfg))
    payload: dict = {"expr": args.expr, "n": g.n, "edges": g.num_edges(), "invariants": {}}
    lines = [f"{args.expr}: {g.n} vertices, {g.num_edges()} edges"]
    rc = EXIT_OK
    for name in args.names:
        try:
            value, text = _one_invariant(ws, g, name)
        except (BudgetExhausted, ThetaError) as exc:
            payload["invariants"][name] = {"error": str(exc)}
            lines.append(f"  {name}: inconclusive ({exc})")
            rc = EXIT_INCONCLUSIVE
            continue
        payload["invariants"][name] = value
        lines.append(f"  {name} = {text}")
    _emit(cfg, payload, lines)
    return rc


def _one_invariant(ws: Workspace, g: Graph, name: str):
    if name == "alpha":
        w = ws.alpha(g)
        return {"value": w.value, "witness": list(w.witness)}, str(w.value)
    if name == "omega":
        w = clique_number(g)
        return {"value": w.value, "witness": list(w.witness)}, str(w.value)
    if name == "chi":
        w = chromatic_number(g)
        return {"value": w.value, "coloring": list(w.witness)}, str(w.value)
    if name == "cover":
        w = clique_cover_number(g)
        return {"value": w.value, "classes": list(w.witness)}, str(w.value)
    if name == "chif":
        fv = fractional_chromatic(g)
        return {"value": str(fv.value)}, _fraction_str(fv.value)
    if name == "chibarf":
        fv = ws.chibarf(g)
        return {"value": str(fv.value)}, _fraction_str(fv.value)
    if name == "theta":
        tv = ws.theta(g)
        if tv is None:
            raise ThetaError("theta unavailable at this size/tolerance")
        return {"value": tv.value, "tol": tv.tol}, f"{tv.value:.6f} (+/- {tv.tol:.2e})"
    if name == "minrank":
        mv = minrank_gf2(g, ws.config.minrank_limit, ws.config.budget_nodes)
        return {"value": mv.value, "field": mv.field_name}, str(mv.value)
    if name == "capacity":
        ci = ws.capacity(g)
        lo = float(ci.lower)
        return (
            {"lower": ci.lower.to_json(), "upper": ci.upper_float,
             "alpha_by_power": ci.alpha_by_power},
            f"[{lo:.6f}, {ci.upper_float:.6f}] (lower exact: {ci.lower!r})",
        )
    raise GraphError(f"unknown invariant {name!r}")


def cmd_bounds(args, cfg: RunConfig) -> int:
    se, ce = parse(args.source), parse(args.channel)
    s = evaluate(se, cfg.size_limit)
    c = evaluate(ce, cfg.size_limit)
    ws = Workspace(cfg, _cache(cfg))
    rb = ir_bounds(s, c, ws=ws, source_expr=se, channel_expr=ce)
    payload = rb.to_json()
    payload["pair"]["source_expr"] = args.source
    payload["pair"]["channel_expr"] = args.channel
    ex = rb.exact_value()
    lines = [
        f"Ir({args.channel} / {args.source})",
        f"  lower >= {rb.lower.lo:.6f}   [{rb.lower.rule}]",
        f"  upper <= {rb.upper.hi:.6f}   [{rb.upper.rule}]",
    ]
    if ex is not None:
        q = ex.as_rational()
        lines.append(f"  exact: {q if q is not None else ex!r}")
    if rb.flags:
        lines.append(f"  flags: {', '.join(rb.flags)}")
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_code_search(args, cfg: RunConfig) -> int:
    from .codes import ratio_frontier

    s = eval_text(args.source, cfg.size_limit)
    c = eval_text(args.channel, cfg.size_limit)
    fr = ratio_frontier(s, c, args.kmax, args.nmax, cfg.budget_nodes, cfg.code_state_limit)
    best = fr.best
    payload = {
        "source": args.source,
        "channel": args.channel,
        "cells": {f"{k},{n}": st for (k, n), st in sorted(fr.cells.items())},
        "best": None if best is None else str(best),
    }
    lines = [f"code frontier for source {args.source}, channel {args.channel}:"]
    for (k, n), st in sorted(fr.cells.items()):
        lines.append(f"  ({k},{n}): {st}")
    lines.append(f"  best achieved k/n: {best if best is not None else 'none'}")
    _emit(cfg, payload, lines)
    if any(st == "inconclusive" for st in fr.cells.values()):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_core(args, cfg: RunConfig) -> int:
    """Core of the expression, plus the complement-core reduction that the
    ratio engine substitutes for it (the ratio only depends on the latter)."""
    g = eval_text(args.expr, cfg.size_limit)
    from .graphs import to_graph6

    try:
        cr = core_of(g, cfg.budget_nodes)
        ccr = core_of(g.complement(), cfg.budget_nodes)
    except BudgetExhausted as exc:
        _emit(cfg, {"error": str(exc)}, [f"inconclusive: {exc}"])
        return EXIT_INCONCLUSIVE
    reduced = ccr.core.complement()
    payload = {
        "expr": args.expr,
        "core_vertices": cr.vertices,
        "core_graph6": to_graph6(cr.core),
        "core_order": cr.core.n,
        "complement_core_vertices": ccr.vertices,
        "complement_core_graph6": to_graph6(ccr.core),
        "ratio_equivalent_graph6": to_graph6(reduced),
        "retraction": cr.retraction.to_json(),
    }
    lines = [
        f"core of {args.expr}: {cr.core.n} vertices on {cr.vertices} "
        f"(graph6 {to_graph6(cr.core)})",
        f"core of complement: {ccr.core.n} vertices on {ccr.vertices} "
        f"(graph6 {to_graph6(ccr.core)})",
        f"ratio-equivalent replacement (complement of that core): "
        f"graph6 {to_graph6(reduced)}",
    ]
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_equiv(args, cfg: RunConfig) -> int:
    ae, be = parse(args.a), parse(args.b)
    a = evaluate(ae, cfg.size_limit)
    b = evaluate(be, cfg.size_limit)
    ws = Workspace(cfg, _cache(cfg))
    rep = equivalence_check(a, b, ws=ws, a_expr=ae, b_expr=be)
    payload = rep.to_json()
    lines = [
        f"{args.a} vs {args.b}:",
        f"  information equivalence: {rep.equivalence}",
        f"  weak equivalence:        {rep.weak}",
        f"  order:                   {rep.order}",
        f"  Ir({args.b}/{args.a}) in [{rep.forward.lower.lo:.6f}, {rep.forward.upper.hi:.6f}]",
        f"  Ir({args.a}/{args.b}) in [{rep.backward.lower.lo:.6f}, {rep.backward.upper.hi:.6f}]",
    ]
    _emit(cfg, payload, lines)
    return EXIT_OK if UNKNOWN not in (rep.equivalence,) else EXIT_INCONCLUSIVE


def cmd_critical(args, cfg: RunConfig) -> int:
    g = eval_text(args.expr, cfg.size_limit)
    ws = Workspace(cfg, _cache(cfg))
    rep = criticality_check(g, ws)
    payload = {
        "expr": args.expr,
        "status": rep.status,
        "edge": rep.edge,
        "power": rep.power,
        "independent_set": None if rep.independent_set is None else list(rep.independent_set),
        "chibarf": None if rep.chibarf is None else str(rep.chibarf),
    }
    lines = [f"{args.expr}: {rep.status}"]
    if rep.status == CERTIFIED_CRITICAL:
        lines.append(
            f"  edge {rep.edge}, independent set {list(rep.independent_set)} "
            f"beats chibarf = {_fraction_str(rep.chibarf)}"
        )
    _emit(cfg, payload, lines)
    return EXIT_OK


def _expect(rows, name, expected, computed, tol=1e-3, info=False):
    if info:
        rows.append((name, expected, computed, "INFO"))
        return
    status = "PASS" if abs(expected - computed) <= tol else "FAIL"
    rows.append((name, expected, computed, status))


def cmd_tables(args, cfg: RunConfig) -> int:
    """Recompute the reference table of known exact values and compare."""
    ws = Workspace(cfg, _cache(cfg))
    rows: list[tuple] = []

    sch = eval_text("schlafli", cfg.size_limit)
    sch_c = sch.complement()
    k2 = eval_text("Kbar(2)", cfg.size_limit)

    # three comparison rows: the candidate upper-bound families per pair
    th_s = ws.theta(sch).value
    th_c = ws.theta(sch_c).value
    cb_s = float(ws.chibarf(sch).value)
    cb_c = float(ws.chibarf(sch_c).value)
    _expect(rows, "pair (Kbar2 -> 27c): theta family", math.log2(9), math.log2(th_c))
    _expect(rows, "pair (Kbar2 -> 27c): cover family", math.log2(9), math.log2(cb_c))
    _expect(rows, "pair (Kbar2 -> 27c): capacity family (literature 2.807)",
            math.log2(7), math.log2(float(ws.capacity(sch_c).lower)), info=True)
    _expect(rows, "pair (27c -> 27): theta family", 0.5, math.log2(th_s) / math.log2(th_c))
    _expect(rows, "pair (27c -> 27): cover family", math.log2(4.5) / math.log2(9),
            math.log2(cb_s) / math.log2(cb_c))
    _expect(rows, "pair (27c -> 27): capacity family (literature 0.565)",
            math.log2(3) / math.log2(7),
            math.log2(float(ws.capacity(sch).lower)) / math.log2(float(ws.capacity(sch_c).lower)),
            info=True)
    _expect(rows, "pair (27 -> 27c): theta family", 2.0, math.log2(th_c) / math.log2(th_s))
    _expect(rows, "pair (27 -> 27c): cover family", math.log2(9) / math.log2(4.5),
            math.log2(cb_c) / math.log2(cb_s))
    _expect(rows, "pair (27 -> 27c): capacity family (literature 1.631)",
            math.log2(6) / math.log2(3),
            math.log2(float(ws.capacity(sch_c).lower)) / math.log2(float(ws.capacity(sch).lower)),
            info=True)

    rb = ir_bounds(sch_c, sch, ws=ws)
    _expect(rows, "Ir(27 / 27c) tight", 0.5, rb.lower.lo, tol=1e-6)
    _expect(rows, "Ir(27 / 27c) tight upper", 0.5, rb.upper.hi, tol=1e-6)

    # exact families over the pentagon
    c5e = parse("C(5)")
    c52e = parse("C(5)^2")
    c5 = evaluate(c5e)
    for (se, ce, expected, label) in [
        (c5e, c52e, 2.0, "Ir(C5^2/C5)"),
        (c52e, c5e, 0.5, "Ir(C5/C5^2)"),
    ]:
        rbx = ir_bounds(evaluate(se), evaluate(ce), ws=ws, source_expr=se, channel_expr=ce)
        _expect(rows, label, expected, rbx.lower.lo, tol=1e-9)
    log_cb = math.log2(2.5)
    log_th = math.log2(math.sqrt(5))
    ffe = parse("C(5)+C(5)")
    rbx = ir_bounds(c5, evaluate(ffe), ws=ws, source_expr=c5e, channel_expr=ffe)
    _expect(rows, "Ir(C5+C5/C5)", 1 + 1 / log_cb, rbx.lower.lo, tol=1e-9)
    rbx = ir_bounds(evaluate(ffe), c5, ws=ws, source_expr=ffe, channel_expr=c5e)
    _expect(rows, "Ir(C5/C5+C5)", log_th / (1 + log_th), rbx.lower.lo, tol=1e-7)
    pe = parse("(C(5)^2)+(C(5)^2)")
    rbx = ir_bounds(evaluate(pe), evaluate(ffe), ws=ws, source_expr=pe, channel_expr=ffe)
    _expect(rows, "Ir(C5+C5 / C5^2+C5^2)", (1 + log_cb) / (1 + 2 * log_cb), rbx.lower.lo, tol=1e-9)

    # clique unions: Ir = log t / log s
    for s_parts, t_parts, s, t in [
        ((2, 3), (4, 4, 4, 4), 2, 4),
        ((5, 1, 2), (7, 7), 3, 2),
        ((1, 2, 3, 4, 5), (2, 2, 2, 2, 2), 5, 5),
    ]:
        stxt = "+".join(f"K({m})" for m in s_parts)
        ttxt = "+".join(f"K({m})" for m in t_parts)
        rbx = ir_bounds(eval_text(stxt), eval_text(ttxt), ws=ws)
        _expect(rows, f"clique unions s={s},t={t}", math.log2(t) / math.log2(s),
                rbx.lower.lo, tol=1e-9)

    # criticality examples
    for expr, want in [("~C(5)", True), ("~C(7)", True), ("~C(9)", True),
                       ("~W(9)", True), ("~KG(5,2)", True), ("~M(C(5))", True),
                       ("C(4)", False)]:
        rep = criticality_check(eval_text(expr), ws)
        got = rep.status == CERTIFIED_CRITICAL
        rows.append((f"criticality {expr}", want, got, "PASS" if got == want else "FAIL"))

    payload = {"rows": [{"name": n, "expected": e, "computed": c, "status": st}
                        for n, e, c, st in rows]}
    lines = []
    width = max(len(r[0]) for r in rows)
    for n, e, c, st in rows:
        if isinstance(e, float):
            lines.append(f"{st:4} {n:<{width}}  expected {e:.6f}  computed {c:.6f}")
        else:
            lines.append(f"{st:4} {n:<{width}}  expected {e}  computed {c}")
    fails = sum(1 for r in rows if r[3] == "FAIL")
    lines.append(f"{len(rows)} rows, {fails} FAIL")
    _emit(cfg, payload, lines)
    return EXIT_OK if fails == 0 else EXIT_INTERNAL


def _cache(cfg: RunConfig):
    return InvariantCache(cfg.cache_dir) if cfg.cache_dir else None


_COMMANDS = {
    "invariant": cmd_invariant,
    "bounds": cmd_bounds,
    "code-search": cmd_code_search,
    "core": cmd_core,
    "equiv": cmd_equiv,
    "critical": cmd_critical,
    "tables": cmd_tables,
}


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        cfg = _config(args)
        return _COMMANDS[args.command](args, cfg)
    except (ParseError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExhausted, ThetaError) as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
