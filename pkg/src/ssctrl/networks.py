"""Leader-selection networks and the two special-class zero forcing tests.

A network is a digraph plus an ordered leader set.  Two pattern families
are derived from it: the star family (edges become star entries, loops
allowed) and the ?-diagonal family (loop-free graphs, every diagonal entry
arbitrary).  The loopy and ordinary zero forcing criteria decide
controllability on those families and are cross-validated against the
general two-graph test.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    Digraph,
    loopy_zero_forcing,
    loopy_zero_forcing_forbidden,
    ordinary_zero_forcing,
    parse_digraph,
)
from .errors import SelfLoopForbiddenError, UnknownNodeError
from .patterns import QMARK, STAR, ZERO, PatternMatrix, StructuredSystem


@dataclass(frozen=True)
class LeaderNetwork:
    node_count: int
    edges: frozenset[tuple[int, int]]
    leaders: tuple[int, ...]

    def __post_init__(self):
        for u, v in self.edges:
            if not (1 <= u <= self.node_count and 1 <= v <= self.node_count):
                raise UnknownNodeError(f"edge ({u}, {v}) leaves node range")
        if len(set(self.leaders)) != len(self.leaders):
            raise UnknownNodeError("duplicate leader")
        for w in self.leaders:
            if not (1 <= w <= self.node_count):
                raise UnknownNodeError(f"leader {w} outside 1..{self.node_count}")

    @property
    def digraph(self) -> Digraph:
        return Digraph(self.node_count, self.edges)


def _leader_pattern(n: int, leaders: tuple[int, ...]) -> PatternMatrix:
    # One star per column at the leader's row, zero elsewhere.
    return PatternMatrix(
        tuple(
            tuple(STAR if i + 1 == w else ZERO for w in leaders)
            for i in range(n)
        )
    )


def pattern_from_network_star(net: LeaderNetwork) -> StructuredSystem:
    """Star entries at edges, fixed zeros elsewhere (loops permitted)."""
    n = net.node_count
    a = PatternMatrix(
        tuple(
            tuple(STAR if (j + 1, i + 1) in net.edges else ZERO for j in range(n))
            for i in range(n)
        )
    )
    return StructuredSystem(a, _leader_pattern(n, net.leaders))


def pattern_from_network_qdiag(net: LeaderNetwork) -> StructuredSystem:
    """Star entries at edges, arbitrary diagonal; the graph must be loop-free."""
    n = net.node_count
    for u, v in net.edges:
        if u == v:
            raise SelfLoopForbiddenError(f"self-loop at node {u}")
    a = PatternMatrix(
        tuple(
            tuple(
                QMARK
                if i == j
                else (STAR if (j + 1, i + 1) in net.edges else ZERO)
                for j in range(n)
            )
            for i in range(n)
        )
    )
    return StructuredSystem(a, _leader_pattern(n, net.leaders))


def td_controllability(net: LeaderNetwork) -> bool:
    """Zero forcing test for the star family.

    The leaders must loopy-force the graph itself, and also the graph with a
    self-loop added at every node while never using a self-force at a node
    that had a loop already.  The second condition is decided greedily with
    the forbidden moves pruned.
    """
    h = net.digraph
    ok1, _ = loopy_zero_forcing(h, net.leaders)
    if not ok1:
        return False
    looped = frozenset(u for u, v in net.edges if u == v)
    h_star = Digraph(
        net.node_count,
        net.edges | frozenset((v, v) for v in range(1, net.node_count + 1)),
    )
    ok2, _ = loopy_zero_forcing_forbidden(h_star, net.leaders, looped)
    return ok2


def mzc_controllability(net: LeaderNetwork) -> bool:
    """Zero forcing test for the ?-diagonal family (loop-free graphs only)."""
    for u, v in net.edges:
        if u == v:
            raise SelfLoopForbiddenError(f"self-loop at node {u}")
    ok, _ = ordinary_zero_forcing(net.digraph, net.leaders)
    return ok


def parse_network(text: str) -> tuple[LeaderNetwork, bool]:
    """Parse a network file; returns the network and whether loops are allowed.

    Format: edge-list lines ``u v``, a mandatory ``leaders: 3 5`` header, an
    optional ``loops: allowed|forbidden`` header (default allowed) and an
    optional ``nodes: n`` header for isolated trailing nodes.
    """
    leaders: tuple[int, ...] | None = None
    loops_allowed = True
    node_count = 0
    edge_lines = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("leaders:"):
            leaders = tuple(int(t) for t in line.split(":", 1)[1].split())
        elif line.startswith("loops:"):
            mode = line.split(":", 1)[1].strip()
            if mode not in ("allowed", "forbidden"):
                raise UnknownNodeError(f"bad loops header: {mode!r}")
            loops_allowed = mode == "allowed"
        elif line.startswith("nodes:"):
            node_count = int(line.split(":", 1)[1])
        else:
            edge_lines.append(line)
    if leaders is None or not leaders:
        raise UnknownNodeError("missing or empty leaders: header")
    digraph = parse_digraph("\n".join(edge_lines)) if edge_lines else Digraph(0, frozenset())
    n = max(node_count, digraph.n, max(leaders))
    net = LeaderNetwork(n, digraph.edges, leaders)
    if not loops_allowed:
        for u, v in net.edges:
            if u == v:
                raise SelfLoopForbiddenError(f"self-loop at node {u} under loops: forbidden")
    return net, loops_allowed
