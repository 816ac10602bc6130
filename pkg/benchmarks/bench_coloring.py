"""Compare the compiled propagation kernel against the pure-Python fallback.

Both backends run the same colorability workload on identical random
patterns; verdicts and traces are cross-checked entry by entry before
timings are reported.

Usage: python3 benchmarks/bench_coloring.py [--patterns N] [--size ROWSxCOLS]
"""

from __future__ import annotations

import argparse
import random
import time
from array import array

from ssctrl import _propagate_py
from ssctrl import coloring
from ssctrl.patterns import QMARK, STAR, ZERO, PatternMatrix

try:
    from ssctrl import _propagate as _compiled
except ImportError:
    _compiled = None


def make_patterns(count: int, rows: int, cols: int, seed: int) -> list[PatternMatrix]:
    rng = random.Random(seed)
    syms = (ZERO, STAR, QMARK)
    weights = (0.55, 0.3, 0.15)
    return [
        PatternMatrix(
            tuple(
                tuple(rng.choices(syms, weights=weights)[0] for _ in range(cols))
                for _ in range(rows)
            )
        )
        for _ in range(count)
    ]


def run_backend(module, patterns) -> tuple[float, list]:
    """End-to-end colorability timing with the given kernel module installed."""
    original = coloring._kernel
    coloring._kernel = module
    try:
        start = time.perf_counter()
        results = [coloring.colorability(m) for m in patterns]
        elapsed = time.perf_counter() - start
    finally:
        coloring._kernel = original
    return elapsed, results


def kernel_inputs(m: PatternMatrix):
    """CSR arrays for the graph of ``m``, matching the coloring module's layout."""
    graph = coloring.build_graph(m)
    n = graph.node_count
    incoming = [[] for _ in range(n)]
    for u, v in graph.e_star:
        incoming[v - 1].append((u - 1, True))
    for u, v in graph.e_qmark:
        incoming[v - 1].append((u - 1, False))
    wdeg = array("i", [0] * n)
    for lst in incoming:
        for u, _ in lst:
            wdeg[u] += 1
    indptr = array("i", [0] * (n + 1))
    tails = array("i", [0] * sum(len(lst) for lst in incoming))
    star = bytearray(len(tails))
    pos = 0
    for v in range(n):
        indptr[v] = pos
        for u, is_star in sorted(incoming[v], key=lambda e: (e[0] == v, e[0])):
            tails[pos] = u
            star[pos] = 1 if is_star else 0
            pos += 1
    indptr[n] = pos
    return n, indptr, tails, star, wdeg


def run_kernel_only(module, inputs) -> tuple[float, list]:
    """Timing of the propagation loop alone, on prebuilt CSR inputs."""
    start = time.perf_counter()
    results = []
    for n, indptr, tails, star, wdeg in inputs:
        results.append(
            module.run(
                n,
                indptr,
                tails,
                star,
                array("i", wdeg),
                bytearray(n),
                False,
                bytearray(n),
            )
        )
    elapsed = time.perf_counter() - start
    return elapsed, results


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--patterns", type=int, default=2000)
    parser.add_argument("--size", default="30x40", help="pattern shape, e.g. 30x40")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rows, cols = (int(v) for v in args.size.lower().split("x"))

    patterns = make_patterns(args.patterns, rows, cols, args.seed)
    print(f"workload: {args.patterns} patterns of {rows}x{cols}")

    py_time, py_results = run_backend(_propagate_py, patterns)
    print(f"end-to-end, python backend:  {py_time:8.3f}s")
    if _compiled is None:
        print("cython backend not built; skipping comparison")
        return
    cy_time, cy_results = run_backend(_compiled, patterns)
    print(f"end-to-end, cython backend:  {cy_time:8.3f}s  ({py_time / cy_time:.2f}x)")
    mismatches = sum(a != b for a, b in zip(py_results, cy_results))
    if mismatches:
        raise SystemExit(f"backend mismatch on {mismatches} patterns")

    inputs = [kernel_inputs(m) for m in patterns]
    pyk_time, pyk_results = run_kernel_only(_propagate_py, inputs)
    cyk_time, cyk_results = run_kernel_only(_compiled, inputs)
    if any(list(a) != list(b) for a, b in zip(pyk_results, cyk_results)):
        raise SystemExit("kernel output mismatch")
    print(f"kernel only, python backend: {pyk_time:8.3f}s")
    print(f"kernel only, cython backend: {cyk_time:8.3f}s  ({pyk_time / cyk_time:.2f}x)")
    print("results identical across backends")


if __name__ == "__main__":
    main()
