"""Command-line front end.

Exit codes are uniform across subcommands: 0 affirmative verdict, 1
negative verdict, 2 input error, 3 internal inconsistency (an oracle or
special-class test disagreeing with the pattern-level verdict, which is
always a bug).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction

from . import analysis, coloring, networks, oracle
from .errors import SsctrlError
from .patterns import (
    PatternMatrix,
    StructuredSystem,
    compact_rows,
    parse_pattern,
    parse_system,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_INCONSISTENT = 3


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_system(paths: list[str]) -> StructuredSystem:
    if len(paths) == 1:
        return parse_system(_read(paths[0]))
    a = parse_pattern(_read(paths[0]))
    b = parse_pattern(_read(paths[1]))
    return StructuredSystem(a, b)


def _frac(v: Fraction) -> str:
    return str(v)


def _matrix_json(m) -> list[list[str]]:
    return [[_frac(v) for v in row] for row in m.entries]


def _trace_json(trace):
    if trace is None:
        return None
    return [[i, j] for i, j in trace.changes]


def _trace_lines(trace) -> list[str]:
    if trace is None:
        return ["  (derived from condition 2; rerun with --full for the trace)"]
    if not trace.changes:
        return ["  (no color changes)"]
    return [f"  node {i} colors {j}" for i, j in trace.changes]


def _witness_json(w):
    if w is None:
        return None
    return {
        "A0": _matrix_json(w.a0),
        "B0": _matrix_json(w.b0),
        "lambda": _frac(w.lam),
        "x": [_frac(v) for v in w.x],
    }


def cmd_check(args) -> int:
    system = _load_system(args.paths)
    report = analysis.strong_controllability(system, full_traces=args.full)
    if args.format == "json":
        payload = {
            "verdict": report.verdict,
            "condition1": report.condition1[0],
            "condition2": report.condition2[0],
            "shortcut_used": report.shortcut_used,
            "trace1": _trace_json(report.condition1[1]),
            "trace2": _trace_json(report.condition2[1]),
            "witness": _witness_json(report.witness),
        }
        print(json.dumps(payload, indent=2))
    else:
        print("verdict:", "controllable" if report.verdict else "not controllable")
        print(f"condition 1 (graph of [A B]): {'colorable' if report.condition1[0] else 'not colorable'}")
        for line in _trace_lines(report.condition1[1]):
            print(line)
        print(f"condition 2 (graph of [Abar B]): {'colorable' if report.condition2[0] else 'not colorable'}")
        for line in _trace_lines(report.condition2[1]):
            print(line)
        if report.shortcut_used:
            print("shortcut: no zero diagonal entry in A; condition 1 implied by condition 2")
        if report.witness is not None:
            w = report.witness
            print("uncontrollable member (Hautus failure):")
            print("  A0 =", _matrix_json(w.a0))
            print("  B0 =", _matrix_json(w.b0))
            print("  lambda =", _frac(w.lam))
            print("  x =", [_frac(v) for v in w.x])
    return EXIT_YES if report.verdict else EXIT_NO


def cmd_colorable(args) -> int:
    m = parse_pattern(_read(args.path))
    ok, trace = coloring.colorability(m)
    graph = coloring.build_graph(m)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(coloring.export_dot(graph, trace))
    if args.format == "json":
        payload = {
            "pattern": compact_rows(m),
            "colorable": ok,
            "trace": _trace_json(trace),
            "final_black": sorted(trace.final_black),
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "dot":
        print(coloring.export_dot(graph, trace), end="")
    else:
        print("colorable" if ok else "not colorable")
        for line in _trace_lines(trace):
            print(line)
    return EXIT_YES if ok else EXIT_NO


def _parse_values(text: str) -> list[Fraction]:
    return [Fraction(tok) for tok in text.split(",") if tok.strip()]


def cmd_oracle(args) -> int:
    system = _load_system(args.paths)
    mc = oracle.monte_carlo_ssc(system, args.trials, args.seed)
    verdicts = [mc]
    if oracle.free_entry_count(system) <= 12:
        if args.values:
            vals = _parse_values(args.values)
            stars = [v for v in vals if v != 0]
            qmarks = [Fraction(0)] + vals
        else:
            stars = [Fraction(v) for v in (1, -1, 2, -2)]
            qmarks = [Fraction(v) for v in (0, 1, -1)]
        verdicts.append(oracle.exhaustive_small(system, stars, qmarks))
    if args.format == "json":
        payload = []
        for v in verdicts:
            payload.append(
                {
                    "mode": v.mode,
                    "trials": v.trials,
                    "counterexample": None
                    if v.counterexample is None
                    else {
                        "A0": _matrix_json(v.counterexample[0]),
                        "B0": _matrix_json(v.counterexample[1]),
                    },
                    "agrees": v.agrees,
                }
            )
        print(json.dumps(payload, indent=2))
    else:
        for v in verdicts:
            status = "agrees" if v.agrees else "DISAGREES"
            extra = "counterexample found" if v.counterexample else "no counterexample"
            print(f"{v.mode} ({v.trials} trials): {status}, {extra}")
    return EXIT_YES if all(v.agrees for v in verdicts) else EXIT_INCONSISTENT


def _net_sweep(limit: int) -> int:
    mismatches = 0
    for n in range(1, limit + 1):
        nodes = range(1, n + 1)
        pairs = [(u, v) for u in nodes for v in nodes]
        loopless = [(u, v) for u, v in pairs if u != v]
        leader_sets = [
            combo
            for r in range(1, n + 1)
            for combo in itertools.combinations(nodes, r)
        ]
        for edges in itertools.chain.from_iterable(
            itertools.combinations(pairs, k) for k in range(len(pairs) + 1)
        ):
            eset = frozenset(edges)
            is_loopless = all(u != v for u, v in eset)
            for leaders in leader_sets:
                net = networks.LeaderNetwork(n, eset, leaders)
                td = networks.td_controllability(net)
                ref = analysis.is_strongly_controllable(
                    networks.pattern_from_network_star(net)
                )
                if td != ref:
                    mismatches += 1
                    print(f"TD mismatch: n={n} edges={sorted(eset)} leaders={leaders}")
                if is_loopless:
                    mzc = networks.mzc_controllability(net)
                    ref2 = analysis.is_strongly_controllable(
                        networks.pattern_from_network_qdiag(net)
                    )
                    if mzc != ref2:
                        mismatches += 1
                        print(f"MZC mismatch: n={n} edges={sorted(eset)} leaders={leaders}")
    print(f"sweep up to n={limit}: {'zero mismatches' if not mismatches else f'{mismatches} mismatches'}")
    return EXIT_YES if mismatches == 0 else EXIT_INCONSISTENT


def cmd_net(args) -> int:
    if args.sweep:
        return _net_sweep(args.sweep)
    if not args.path:
        raise SsctrlError("a network file or --sweep N is required")
    net, loops_allowed = networks.parse_network(_read(args.path))
    if loops_allowed:
        special = networks.td_controllability(net)
        label = "loopy zero forcing (star family)"
        system = networks.pattern_from_network_star(net)
    else:
        special = networks.mzc_controllability(net)
        label = "ordinary zero forcing (?-diagonal family)"
        system = networks.pattern_from_network_qdiag(net)
    general = analysis.is_strongly_controllable(system)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "special_test": label,
                    "special_verdict": special,
                    "pattern_verdict": general,
                    "match": special == general,
                },
                indent=2,
            )
        )
    else:
        print(f"{label}: {special}")
        print(f"two-graph pattern test: {general}")
        print("match" if special == general else "MISMATCH")
    if special != general:
        return EXIT_INCONSISTENT
    return EXIT_YES if general else EXIT_NO


def cmd_weak(args) -> int:
    system = _load_system(args.paths)
    verdict = analysis.weak_controllability(system)
    if args.format == "json":
        print(json.dumps({"weakly_controllable": verdict}, indent=2))
    else:
        print("weakly controllable" if verdict else "not weakly controllable")
    return EXIT_YES if verdict else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ssctrl",
        description="Strong structural controllability of zero/nonzero/arbitrary patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("human", "json", "dot"), default="human")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=200)
        p.add_argument("--full", action="store_true", help="always report both traces")

    p = sub.add_parser("check", help="two-graph controllability test")
    p.add_argument("paths", nargs="+", help="A and B pattern files, or one combined [A|B] file")
    add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("colorable", help="colorability of a single pattern")
    p.add_argument("path")
    p.add_argument("--dot", help="write the colored graph to this DOT file")
    add_common(p)
    p.set_defaults(func=cmd_colorable)

    p = sub.add_parser("oracle", help="cross-check the verdict with exact sampling")
    p.add_argument("paths", nargs="+")
    p.add_argument("--values", help="comma-separated grid values for the exhaustive check")
    add_common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("net", help="leader-network zero forcing comparison")
    p.add_argument("path", nargs="?")
    p.add_argument("--sweep", type=int, metavar="N", help="exhaustive equivalence sweep up to n=N")
    add_common(p)
    p.set_defaults(func=cmd_net)

    p = sub.add_parser("weak", help="weak structural controllability")
    p.add_argument("paths", nargs="+")
    add_common(p)
    p.set_defaults(func=cmd_weak)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SsctrlError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
