"""Top-level controllability decisions for structured systems.

A structured system is strongly structurally controllable exactly when the
graphs of [A B] and of [Abar B] are both colorable, where Abar is the
diagonal modification of A.  On a negative verdict a concrete
uncontrollable member of the class is produced, certified by an exact
left null vector of the Hautus matrix at a rational eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .coloring import (
    ColorTrace,
    colorability,
    rank_deficiency_witness,
)
from .errors import WideMatrixRequiredError, WitnessUnavailableError
from .patterns import (
    QMARK,
    STAR,
    ZERO,
    PatternMatrix,
    RationalMatrix,
    StructuredSystem,
    concat_horizontal,
    modified_diagonal,
    weak_relaxation,
)


@dataclass(frozen=True)
class UncontrollabilityWitness:
    """Concrete (A0, B0) in the pattern classes failing the Hautus test at lambda."""

    a0: RationalMatrix
    b0: RationalMatrix
    lam: Fraction
    x: tuple[Fraction, ...]


@dataclass(frozen=True)
class AnalysisReport:
    verdict: bool
    condition1: tuple[bool, Optional[ColorTrace]]
    condition2: tuple[bool, ColorTrace]
    shortcut_used: bool
    witness: Optional[UncontrollabilityWitness]


def _split_columns(m: RationalMatrix, n: int) -> tuple[RationalMatrix, RationalMatrix]:
    left = RationalMatrix(tuple(row[:n] for row in m.entries))
    right = RationalMatrix(tuple(row[n:] for row in m.entries))
    return left, right


def is_strongly_controllable(s: StructuredSystem) -> bool:
    """Verdict-only fast path (no traces, no witness)."""
    abar = modified_diagonal(s.a)
    ok2, _ = colorability(concat_horizontal(abar, s.b))
    if not ok2:
        return False
    if all(s.a.entries[i][i] != ZERO for i in range(s.n)):
        return True
    ok1, _ = colorability(concat_horizontal(s.a, s.b))
    return ok1


def strong_controllability(
    s: StructuredSystem, full_traces: bool = False, include_witness: bool = True
) -> AnalysisReport:
    """Run the two-graph colorability test on a structured system.

    When no diagonal entry of A is a fixed zero, the class of A is contained
    in the class of Abar, so a colorable [Abar B] already settles the first
    condition; the first trace is then omitted unless ``full_traces`` asks
    for it.
    """
    abar = modified_diagonal(s.a)
    ab = concat_horizontal(s.a, s.b)
    abar_b = concat_horizontal(abar, s.b)
    ok2, trace2 = colorability(abar_b)
    shortcut = all(s.a.entries[i][i] != ZERO for i in range(s.n))
    if shortcut and ok2 and not full_traces:
        condition1: tuple[bool, Optional[ColorTrace]] = (True, None)
    else:
        condition1 = colorability(ab)
    verdict = condition1[0] and ok2
    witness = None
    if not verdict and include_witness:
        witness = _build_witness(s, abar, ab, abar_b, condition1, (ok2, trace2))
    return AnalysisReport(verdict, condition1, (ok2, trace2), shortcut, witness)


def _build_witness(s, abar, ab, abar_b, condition1, condition2) -> UncontrollabilityWitness:
    n = s.n
    ok1, trace1 = condition1
    ok2, trace2 = condition2
    if not ok1:
        # Hautus failure at lambda = 0, straight from the rank witness of [A B].
        rw = rank_deficiency_witness(ab, trace1)
        a0, b0 = _split_columns(rw.instance, n)
        return UncontrollabilityWitness(a0, b0, Fraction(0), rw.left_null)
    # Only the second condition fails: rescale the diagonal and shift.
    rw = rank_deficiency_witness(abar_b, trace2)
    abar0, b0 = _split_columns(rw.instance, n)
    excluded = {
        abar0.entries[i][i] for i in range(n) if s.a.entries[i][i] == STAR
    }
    alpha = Fraction(1)
    while alpha in excluded:
        alpha += 1
    diag = [
        Fraction(1) if abar.entries[i][i] == QMARK else alpha / abar0.entries[i][i]
        for i in range(n)
    ]
    a0 = RationalMatrix(
        tuple(
            tuple(
                abar0.entries[i][j] * diag[j] - (alpha if i == j else 0)
                for j in range(n)
            )
            for i in range(n)
        )
    )
    return UncontrollabilityWitness(a0, b0, -alpha, rw.left_null)


def uncontrollability_witness(
    s: StructuredSystem, report: AnalysisReport
) -> UncontrollabilityWitness:
    """Witness for a negative report; regenerates traces if the report lacks them."""
    if report.verdict:
        raise WitnessUnavailableError("system is controllable")
    if report.witness is not None:
        return report.witness
    full = strong_controllability(s, full_traces=True, include_witness=True)
    assert full.witness is not None
    return full.witness


def strong_stabilizability(s: StructuredSystem) -> bool:
    """Structured stabilizability coincides with structured controllability."""
    return is_strongly_controllable(s)


@dataclass(frozen=True)
class FormThreeResult:
    """Outcome of the greedy echelon decomposition of a pattern matrix.

    ``row_order`` / ``col_order`` give, per target position, the 1-based
    source row or column; applying them yields the anti-staircase shape with
    star pivots and fixed zeros strictly to the right of each pivot.
    """

    is_form3: bool
    row_order: Optional[tuple[int, ...]]
    col_order: Optional[tuple[int, ...]]


def form_three(m: PatternMatrix) -> FormThreeResult:
    """Greedy pivot search: a column with a single star and zeros elsewhere
    yields a pivot; its row and column are removed and the search repeats."""
    if m.rows > m.cols:
        raise WideMatrixRequiredError(f"{m.rows}x{m.cols} pattern has more rows than columns")
    live_rows = list(range(m.rows))
    live_cols = list(range(m.cols))
    pivots: list[tuple[int, int]] = []
    while live_rows:
        found = None
        for c in live_cols:
            hits = [r for r in live_rows if m.entries[r][c] != ZERO]
            if len(hits) == 1 and m.entries[hits[0]][c] == STAR:
                found = (hits[0], c)
                break
        if found is None:
            return FormThreeResult(False, None, None)
        pivots.append(found)
        live_rows.remove(found[0])
        live_cols.remove(found[1])
    # First pivot found lands bottom-right, last found lands on top.
    p, q = m.rows, m.cols
    row_order = [0] * p
    col_order = [0] * q
    for t, (r, c) in enumerate(pivots):
        row_order[p - 1 - t] = r + 1
        col_order[q - 1 - t] = c + 1
    rest = sorted(live_cols)
    for k, c in enumerate(rest):
        col_order[k] = c + 1
    return FormThreeResult(True, tuple(row_order), tuple(col_order))


def _reachable_rows(ab: PatternMatrix, n: int) -> bool:
    """Every state node reachable from some input column in the graph of [A' B']."""
    adj: dict[int, list[int]] = {}
    for i in range(n):
        for j in range(ab.cols):
            if ab.entries[i][j] != ZERO:
                adj.setdefault(j, []).append(i)
    seen = set()
    stack = list(range(n, ab.cols))
    while stack:
        u = stack.pop()
        for v in adj.get(u, ()):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == n


def term_rank(m: PatternMatrix) -> int:
    """Maximum matching between rows and columns over non-fixed-zero entries."""
    match_col: dict[int, int] = {}

    def augment(r: int, visited: set[int]) -> bool:
        for c in range(m.cols):
            if m.entries[r][c] == ZERO or c in visited:
                continue
            visited.add(c)
            if c not in match_col or augment(match_col[c], visited):
                match_col[c] = r
                return True
        return False

    size = 0
    for r in range(m.rows):
        if augment(r, set()):
            size += 1
    return size


def weak_controllability(s: StructuredSystem) -> bool:
    """Generic controllability of the relaxed {0, ?} structure.

    Classical two-part test: input-to-state reachability plus full term rank
    of the concatenated relaxed pattern.
    """
    ab = concat_horizontal(weak_relaxation(s.a), weak_relaxation(s.b))
    return _reachable_rows(ab, s.n) and term_rank(ab) == s.n
