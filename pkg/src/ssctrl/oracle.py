"""Exact-arithmetic ground truth for pattern-level verdicts.

Rank is computed by fraction-free elimination over integers (rows are
scaled by their denominator lcm first, which leaves the rank unchanged), so
no floating point appears anywhere.  The Kalman rank test over sampled or
exhaustively enumerated class members cross-checks the graph-theoretic
verdicts; a negative pattern verdict always injects its constructive
witness as trial zero, making the counterexample deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .analysis import strong_controllability
from .errors import (
    DimensionMismatchError,
    TooManyFreeEntriesError,
    ZeroVectorError,
)
from .patterns import (
    QMARK,
    STAR,
    ZERO,
    RationalMatrix,
    StructuredSystem,
    sample_instance,
)

MASK64 = (1 << 64) - 1


def mix64(seed: int, index: int) -> int:
    """splitmix64 over seed + index; the documented per-trial seed derivation."""
    x = (seed + index * 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def rank_exact(x: RationalMatrix) -> int:
    """Exact rank via Bareiss fraction-free elimination on integer rows."""
    rows = []
    for row in x.entries:
        scale = 1
        for v in row:
            scale = _lcm(scale, v.denominator)
        rows.append([int(v * scale) for v in row])
    n, m = len(rows), len(rows[0])
    rank = 0
    prev = 1
    col = 0
    while rank < n and col < m:
        piv = next((r for r in range(rank, n) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(rank + 1, n):
            for c in range(col + 1, m):
                rows[r][c] = (rows[rank][col] * rows[r][c] - rows[r][col] * rows[rank][c]) // prev
            rows[r][col] = 0
        prev = rows[rank][col]
        rank += 1
        col += 1
    return rank


def kalman_controllable(a: RationalMatrix, b: RationalMatrix) -> bool:
    """Full rank of [B, AB, ..., A^(n-1) B]."""
    if a.rows != a.cols or b.rows != a.rows:
        raise DimensionMismatchError("incompatible state/input dimensions")
    n = a.rows
    block = b
    ctrb = b
    for _ in range(n - 1):
        block = a @ block
        ctrb = ctrb.hstack(block)
    return rank_exact(ctrb) == n


def hautus_check(
    a: RationalMatrix, b: RationalMatrix, lam: Fraction, x: Sequence[Fraction]
) -> bool:
    """True iff x certifies a Hautus failure: x'(A - lam I) = 0 and x'B = 0."""
    if all(v == 0 for v in x):
        raise ZeroVectorError("certificate vector must be nonzero")
    n = a.rows
    for j in range(n):
        acc = sum(x[i] * a.entries[i][j] for i in range(n)) - lam * x[j]
        if acc != 0:
            return False
    for j in range(b.cols):
        if sum(x[i] * b.entries[i][j] for i in range(n)) != 0:
            return False
    return True


@dataclass(frozen=True)
class OracleVerdict:
    mode: str  # "monte_carlo" or "exhaustive"
    trials: int
    counterexample: Optional[tuple[RationalMatrix, RationalMatrix]]
    agrees: bool


def monte_carlo_ssc(s: StructuredSystem, trials: int, seed: int) -> OracleVerdict:
    """Sample class members and Kalman-test each one.

    On a negative pattern verdict the constructive witness is injected as
    trial 0, so a counterexample is found deterministically.  The verdict
    depends only on (system, trials, seed); the lowest failing trial index
    wins.
    """
    report = strong_controllability(s, include_witness=True)
    pairs = []
    if not report.verdict:
        assert report.witness is not None
        pairs.append((report.witness.a0, report.witness.b0))
    for t in range(len(pairs), trials):
        a = sample_instance(s.a, mix64(seed, 2 * t))
        b = sample_instance(s.b, mix64(seed, 2 * t + 1))
        pairs.append((a, b))
    counterexample = None
    for a, b in pairs:
        if not kalman_controllable(a, b):
            counterexample = (a, b)
            break
    agrees = report.verdict == (counterexample is None)
    return OracleVerdict("monte_carlo", trials, counterexample, agrees)


def free_entry_count(s: StructuredSystem) -> int:
    return sum(
        sym != ZERO
        for m in (s.a, s.b)
        for row in m.entries
        for sym in row
    )


def exhaustive_small(
    s: StructuredSystem,
    star_values: Sequence[Fraction] = (1, -1, 2, -2),
    qmark_values: Sequence[Fraction] = (0, 1, -1),
    max_free: int = 12,
) -> OracleVerdict:
    """Enumerate every assignment over a finite value grid and Kalman-test it.

    A counterexample is conclusive; its absence only certifies the grid.
    The first counterexample in lexicographic assignment order is reported.
    """
    if any(v == 0 for v in star_values):
        raise ZeroVectorError("star values must exclude zero")
    free = free_entry_count(s)
    if free > max_free:
        raise TooManyFreeEntriesError(f"{free} free entries exceed the limit of {max_free}")
    slots = []  # (matrix index, row, col, values) in row-major A-then-B order
    for mi, m in enumerate((s.a, s.b)):
        for i, row in enumerate(m.entries):
            for j, sym in enumerate(row):
                if sym == STAR:
                    slots.append((mi, i, j, tuple(Fraction(v) for v in star_values)))
                elif sym == QMARK:
                    slots.append((mi, i, j, tuple(Fraction(v) for v in qmark_values)))
    report_verdict = strong_controllability(s, include_witness=False).verdict
    n, mcols = s.n, s.m
    count = 0
    counterexample = None
    for combo in itertools.product(*(values for _, _, _, values in slots)):
        agrid = [[Fraction(0)] * n for _ in range(n)]
        bgrid = [[Fraction(0)] * mcols for _ in range(n)]
        for (mi, i, j, _), v in zip(slots, combo):
            (agrid if mi == 0 else bgrid)[i][j] = v
        a = RationalMatrix(tuple(tuple(r) for r in agrid))
        b = RationalMatrix(tuple(tuple(r) for r in bgrid))
        count += 1
        if not kalman_controllable(a, b):
            counterexample = (a, b)
            break
    # One-sided proxy: a clean grid never contradicts a negative verdict,
    # but a controllable verdict demands a clean grid.
    agrees = counterexample is None or not report_verdict
    return OracleVerdict("exhaustive", count, counterexample, agrees)
