"""Graphs of pattern matrices, the color change rule, and zero forcing.

The graph of a p x q pattern (p <= q) has nodes 1..q and an edge (j, i) for
every nonzero symbol at row i, column j; star and ?-edges are kept apart.
A node with exactly one white out-neighbor reachable over a star edge forces
that neighbor black, and the pattern has full row rank exactly when the row
nodes 1..p can all be forced from an all-white start.  The loopy and
ordinary zero forcing variants reuse the same propagation engine.
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Optional

from .errors import (
    SelfLoopForbiddenError,
    UnknownNodeError,
    WideMatrixRequiredError,
    WitnessUnavailableError,
)
from .patterns import (
    QMARK,
    STAR,
    ZERO,
    PatternMatrix,
    RationalMatrix,
    sample_instance,
)

if os.environ.get("SSCTRL_PURE"):
    from . import _propagate_py as _kernel
else:
    try:
        from . import _propagate as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _propagate_py as _kernel


def kernel_backend() -> str:
    """Name of the propagation backend in use ("cython" or "python")."""
    return _kernel.BACKEND


@dataclass(frozen=True)
class PatternGraph:
    """Directed graph of a pattern matrix, 1-based nodes, split edge sets."""

    node_count: int
    row_count: int
    e_star: FrozenSet[tuple[int, int]]
    e_qmark: FrozenSet[tuple[int, int]]


@dataclass(frozen=True)
class ColorTrace:
    """Chronological (forcer, forced) changes and the resulting black set."""

    changes: tuple[tuple[int, int], ...]
    final_black: FrozenSet[int]


@dataclass(frozen=True)
class Digraph:
    """Plain directed graph on nodes 1..n used by the zero forcing variants."""

    n: int
    edges: FrozenSet[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise UnknownNodeError(f"edge ({u}, {v}) leaves node range 1..{self.n}")


def build_graph(m: PatternMatrix) -> PatternGraph:
    if m.rows > m.cols:
        raise WideMatrixRequiredError(f"{m.rows}x{m.cols} pattern has more rows than columns")
    e_star, e_qmark = set(), set()
    for i, row in enumerate(m.entries, start=1):
        for j, sym in enumerate(row, start=1):
            if sym == STAR:
                e_star.add((j, i))
            elif sym == QMARK:
                e_qmark.add((j, i))
    return PatternGraph(m.cols, m.rows, frozenset(e_star), frozenset(e_qmark))


def _run_kernel(n, edges_star, edges_other, init_black, require_black, forbid_nodes):
    """Build CSR arrays over 0-based edges and run the propagation backend.

    ``edges_star`` are edges that may carry a force; ``edges_other`` only
    count towards white out-degrees.  Returns 0-based (forcer, forced) pairs
    and the final black bytearray.
    """
    incoming = [[] for _ in range(n)]
    for u, v in edges_star:
        incoming[v].append((u, True))
    for u, v in edges_other:
        incoming[v].append((u, False))
    black = bytearray(n)
    for v in init_black:
        black[v] = 1
    wdeg = array("i", [0] * n)
    for u, v in edges_star:
        if not black[v]:
            wdeg[u] += 1
    for u, v in edges_other:
        if not black[v]:
            wdeg[u] += 1
    indptr = array("i", [0] * (n + 1))
    tails = array("i", [0] * sum(len(lst) for lst in incoming))
    star = bytearray(len(tails))
    pos = 0
    for v in range(n):
        indptr[v] = pos
        # Self-forces are legal but fire only when no other forcer can; this
        # matches the narrated traces and keeps ties on the forcer ascending.
        for u, is_star in sorted(incoming[v], key=lambda e: (e[0] == v, e[0])):
            tails[pos] = u
            star[pos] = 1 if is_star else 0
            pos += 1
    indptr[n] = pos
    forbid = bytearray(n)
    for v in forbid_nodes:
        forbid[v] = 1
    changes = _kernel.run(n, indptr, tails, star, wdeg, black, require_black, forbid)
    return changes, black


def colorability(m: PatternMatrix) -> tuple[bool, ColorTrace]:
    """Decide whether the graph of ``m`` is colorable, with the full trace.

    Deterministic order: among all currently legal changes, the one forcing
    the lowest node fires first; ties go to the lowest non-self forcer, with
    a self-force only as a last resort.  The scan restarts after every
    change.
    """
    if m.rows > m.cols:
        raise WideMatrixRequiredError(f"{m.rows}x{m.cols} pattern has more rows than columns")
    star_edges, other_edges = [], []
    for i, row in enumerate(m.entries):
        for j, sym in enumerate(row):
            if sym == STAR:
                star_edges.append((j, i))
            elif sym == QMARK:
                other_edges.append((j, i))
    changes, black = _run_kernel(m.cols, star_edges, other_edges, (), False, ())
    ok = all(black[i] for i in range(m.rows))
    trace = ColorTrace(
        tuple((i + 1, j + 1) for i, j in changes),
        frozenset(j + 1 for _, j in changes),
    )
    return ok, trace


def _zero_forcing(h: Digraph, s, require_black: bool, forbid_nodes=()) -> tuple[bool, ColorTrace]:
    leaders = set(s)
    for v in leaders:
        if not (1 <= v <= h.n):
            raise UnknownNodeError(f"node {v} outside 1..{h.n}")
    edges = [(u - 1, v - 1) for u, v in h.edges]
    init = [v - 1 for v in leaders]
    changes, black = _run_kernel(
        h.n, edges, [], init, require_black, [v - 1 for v in forbid_nodes]
    )
    ok = all(black)
    trace = ColorTrace(
        tuple((i + 1, j + 1) for i, j in changes),
        frozenset(j + 1 for _, j in changes),
    )
    return ok, trace


def loopy_zero_forcing(h: Digraph, s) -> tuple[bool, ColorTrace]:
    """Forcers of any color; self-loops count as out-neighbors."""
    return _zero_forcing(h, s, require_black=False)


def loopy_zero_forcing_forbidden(h: Digraph, s, forbid_nodes) -> tuple[bool, ColorTrace]:
    """Loopy rule with self-forces ``i -> i`` disallowed at the given nodes."""
    return _zero_forcing(h, s, require_black=False, forbid_nodes=forbid_nodes)


def ordinary_zero_forcing(h: Digraph, s) -> tuple[bool, ColorTrace]:
    """Only black nodes may force; the graph must be loop-free."""
    for u, v in h.edges:
        if u == v:
            raise SelfLoopForbiddenError(f"self-loop at node {u}")
    return _zero_forcing(h, s, require_black=True)


def replay_trace(m: PatternMatrix, trace: ColorTrace) -> bool:
    """Independently re-check that every change in a colorability trace was legal."""
    graph = build_graph(m)
    out = {}
    for u, v in graph.e_star | graph.e_qmark:
        out.setdefault(u, set()).add(v)
    black: set[int] = set()
    for forcer, forced in trace.changes:
        if forced in black:
            return False
        white_out = {v for v in out.get(forcer, ()) if v not in black}
        if white_out != {forced}:
            return False
        if (forcer, forced) not in graph.e_star:
            return False
        black.add(forced)
    return black == set(trace.final_black)


@dataclass(frozen=True)
class RankWitness:
    """A class member with an exact nonzero left null vector."""

    instance: RationalMatrix
    left_null: tuple[Fraction, ...]


def rank_deficiency_witness(m: PatternMatrix, trace: ColorTrace) -> RankWitness:
    """Construct a rank-deficient member of a non-colorable pattern.

    The rows that stayed white support the null vector; every column summed
    over those rows is forced to zero by the stable-fixpoint case analysis
    (all zero / single ? / at least two entries among star and ?).
    """
    white = [i for i in range(m.rows) if (i + 1) not in trace.final_black]
    if not white:
        raise WitnessUnavailableError("pattern is colorable; no rank witness exists")
    base = sample_instance(m, 0)
    grid = [list(row) for row in base.entries]
    for c in range(m.cols):
        stars = [r for r in white if m.entries[r][c] == STAR]
        qmarks = [r for r in white if m.entries[r][c] == QMARK]
        if not stars and not qmarks:
            continue
        if not stars and len(qmarks) == 1:
            grid[qmarks[0]][c] = Fraction(0)
            continue
        # Stable fixpoint rules out a lone star; at least two free entries here.
        assert len(stars) + len(qmarks) >= 2
        if not qmarks:
            for r in stars[:-1]:
                grid[r][c] = Fraction(1)
            grid[stars[-1]][c] = Fraction(-(len(stars) - 1))
        else:
            for r in stars:
                grid[r][c] = Fraction(1)
            grid[qmarks[0]][c] = Fraction(-len(stars))
            for r in qmarks[1:]:
                grid[r][c] = Fraction(0)
    instance = RationalMatrix(tuple(tuple(row) for row in grid))
    null = tuple(Fraction(1 if r in white else 0) for r in range(m.rows))
    return RankWitness(instance, null)


def export_dot(g: PatternGraph, trace: Optional[ColorTrace] = None) -> str:
    """Canonical DOT text: solid star edges, dashed ?-edges, black fill from a trace."""
    black = set(trace.final_black) if trace is not None else set()
    lines = ["digraph pattern {", "  node [shape=circle];"]
    for v in range(1, g.node_count + 1):
        if v in black:
            lines.append(f"  {v} [style=filled, fillcolor=black, fontcolor=white];")
        else:
            lines.append(f"  {v};")
    styled = [(u, v, False) for u, v in g.e_star] + [(u, v, True) for u, v in g.e_qmark]
    for u, v, dashed in sorted(styled):
        if dashed:
            lines.append(f"  {u} -> {v} [style=dashed];")
        else:
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    """Edge-list format: one ``u v`` pair per line, ``#`` comments allowed."""
    edges = set()
    max_node = 0
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise UnknownNodeError(f"bad edge line: {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u < 1 or v < 1:
            raise UnknownNodeError(f"node ids must be positive: {line!r}")
        edges.add((u, v))
        max_node = max(max_node, u, v)
    return Digraph(max_node, frozenset(edges))
