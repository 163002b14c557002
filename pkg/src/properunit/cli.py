"""Command-line front end.

Exit codes: 0 success, 1 mathematical obstruction (certificate printed),
2 input error.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter
from pathlib import Path

from . import oracle
from .core import find_claw, intersection_graph, is_proper, is_unit
from .formats import (
    ParseError,
    format_representation,
    parse_graphs,
    parse_poset,
    parse_representation,
    read_text,
    write_atomic,
)
from .orders import CycleError, OrderClass, classify
from .sweep import sweep_graphs, sweep_posets
from .svg import render_svg
from .transform import ClawObstruction, properize, unitize_steps

EXIT_OK = 0
EXIT_OBSTRUCTION = 1
EXIT_INPUT = 2

POSET_SWEEP_CAP = 5


class InputError(Exception):
    pass


def _yes(flag):
    return "yes" if flag else "no"


def _load_rep(path):
    try:
        return parse_representation(read_text(path), source=path)
    except OSError as exc:
        raise InputError(str(exc)) from None


def cmd_check(args, out):
    if args.kind == "rep":
        rep = _load_rep(args.path)
        g = intersection_graph(rep)
        claw = find_claw(g)
        print(f"vertices: {g.n}", file=out)
        print(f"edges: {g.edge_count()}", file=out)
        print(f"proper: {_yes(is_proper(rep))}", file=out)
        print(f"unit: {_yes(is_unit(rep))}", file=out)
        print(f"claw: {claw if claw else 'none'}", file=out)
        return EXIT_OK

    try:
        graphs = parse_graphs(read_text(args.path), args.format, source=args.path)
    except OSError as exc:
        raise InputError(str(exc)) from None
    cap = oracle.default_cap(oracle.UNIT_CAP) if args.cap is None else args.cap
    for i, g in enumerate(graphs):
        if len(graphs) > 1:
            print(f"graph {i}:", file=out)
        claw = find_claw(g)
        print(f"vertices: {g.n}", file=out)
        print(f"edges: {g.edge_count()}", file=out)
        print(f"claw: {claw if claw else 'none'}", file=out)
        if g.n > cap:
            raise InputError(f"oracle checks need n <= {cap}, graph has n={g.n} (raise with --cap)")
        rep = oracle.interval_rep_brute(g, cap=cap)
        unit = oracle.unit_rep_feasible(g, cap=cap)
        print(f"interval: {_yes(rep is not None)}", file=out)
        print(f"unit interval: {_yes(unit is not None)}", file=out)
    return EXIT_OK


def cmd_unitize(args, out):
    rep = _load_rep(args.path)
    try:
        proper, trace = properize(rep)
    except ClawObstruction as exc:
        print(f"claw: {exc.witness}", file=sys.stderr)
        return EXIT_OBSTRUCTION
    states = list(unitize_steps(proper))
    unit = states[-1].result if states else proper
    assert is_unit(unit) and intersection_graph(unit) == intersection_graph(rep)
    comments = []
    if args.trace:
        comments.append(f"properize: {len(trace.steps)} step(s)")
        comments.extend(f"  {step}" for step in trace.steps)
        comments.append(f"unitize: {len(states)} pivot(s)")
        comments.extend(f"  {state}" for state in states)
    text = format_representation(unit, comments)
    if args.output:
        write_atomic(args.output, text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_classify_poset(args, out):
    try:
        p = parse_poset(read_text(args.path), source=args.path)
    except OSError as exc:
        raise InputError(str(exc)) from None
    c = classify(p)
    if c.is_semiorder:
        label = "linear order, semiorder" if c.label is OrderClass.LINEAR_ORDER else "semiorder"
        print(f"{label}; f = {c.values}", file=out)
        print("unit representation:", file=out)
        out.write(format_representation(c.representation))
    elif c.label is OrderClass.INTERVAL_ORDER:
        print(f"interval order, not semiorder; 1+3 witness: {c.one_plus_three}", file=out)
        print("interval representation:", file=out)
        out.write(format_representation(c.representation))
    else:
        print(f"not an interval order; 2+2 witness: {c.two_plus_two}", file=out)
    return EXIT_OK


def cmd_sweep(args, out):
    cap = oracle.default_cap(oracle.UNIT_CAP) if args.cap is None else args.cap
    n = args.n
    if n > cap:
        raise InputError(f"sweep: n={n} exceeds oracle cap {cap}")
    outdir = Path(args.out_dir)
    started = time.time()
    lines = []
    tally = Counter()
    disagreements = 0
    for rec in sweep_graphs(n, cap=cap):
        lines.append(rec.line())
        tally[rec.transform] += 1
        disagreements += not rec.agree
    write_atomic(outdir / f"graphs-n{n}.txt", "\n".join(lines) + "\n")
    summary = [
        f"graphs n={n}: {len(lines)} instances, {disagreements} disagreements",
        "graphs by transform verdict: " + ", ".join(f"{k}={v}" for k, v in sorted(tally.items())),
    ]

    poset_cap = POSET_SWEEP_CAP if args.poset_cap is None else args.poset_cap
    if n <= poset_cap:
        plines = []
        pbad = 0
        for rec in sweep_posets(n, cap=poset_cap):
            plines.append(rec.line())
            pbad += not rec.agree
        write_atomic(outdir / f"posets-n{n}.txt", "\n".join(plines) + "\n")
        summary.append(f"posets n={n}: {len(plines)} instances, {pbad} disagreements")
        disagreements += pbad
    else:
        summary.append(f"posets n={n}: skipped (poset sweep cap {poset_cap})")
    summary.append(f"elapsed: {time.time() - started:.1f}s")
    write_atomic(outdir / f"summary-n{n}.txt", "\n".join(summary) + "\n")
    for line in summary:
        print(line, file=out)
    return EXIT_OBSTRUCTION if disagreements else EXIT_OK


def cmd_draw(args, out):
    rep = _load_rep(args.path)
    write_atomic(args.svg_out, render_svg(rep, title=Path(args.path).name))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="properunit",
        description="Proper and unit interval representations, with certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="report class verdicts for a representation or graph file")
    p.add_argument("path")
    p.add_argument("--kind", choices=["rep", "graph"], default="rep")
    p.add_argument("--format", choices=["edges", "graph6"], default="edges")
    p.add_argument("--cap", type=int, default=None, help="oracle size cap")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("unitize", help="transform a representation into a unit one")
    p.add_argument("path")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--trace", action="store_true", help="include the step trace as comments")
    p.set_defaults(func=cmd_unitize)

    p = sub.add_parser("classify-poset", help="classify a poset given as 'x < y' lines")
    p.add_argument("path")
    p.set_defaults(func=cmd_classify_poset)

    p = sub.add_parser("sweep", help="cross-check transforms against oracles on all graphs of size n")
    p.add_argument("n", type=int)
    p.add_argument("out_dir")
    p.add_argument("--cap", type=int, default=None, help="oracle size cap")
    p.add_argument("--poset-cap", type=int, default=None, help="largest n for the poset sweep")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("draw", help="write an SVG diagram of a representation")
    p.add_argument("path")
    p.add_argument("svg_out")
    p.set_defaults(func=cmd_draw)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, CycleError, InputError, oracle.CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
