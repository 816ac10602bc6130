"""Shared helpers and independent reference implementations for the tests.

The reference routines here deliberately avoid the package's propagation
kernel so they can serve as oracles for it.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ssctrl.patterns import (
    QMARK,
    STAR,
    ZERO,
    PatternMatrix,
    RationalMatrix,
    StructuredSystem,
    parse_pattern,
)

# Worked examples from the README-level electrical circuit / three-agent
# network systems used throughout the suite.
CIRCUIT_A = parse_pattern("* 0 *\n0 0 *\n? * *")
CIRCUIT_B = parse_pattern("* 0\n0 *\n? 0")
NETWORK_A = parse_pattern("* 0 *\n? * 0\n0 * 0")
NETWORK_B = parse_pattern("0\n0\n*")
GRAPH_4X5_M = parse_pattern("0 0 * 0 0\n0 * * ? *\n* 0 ? 0 0\n0 * 0 0 ?")
WIDE_4X6_M = parse_pattern("* 0 0 0 * 0\n0 ? 0 * 0 *\n* 0 0 * 0 0\n0 ? * * 0 0")


def circuit_system() -> StructuredSystem:
    return StructuredSystem(CIRCUIT_A, CIRCUIT_B)


def network_system() -> StructuredSystem:
    return StructuredSystem(NETWORK_A, NETWORK_B)


def random_pattern(rng: random.Random, p: int, q: int,
                   weights=(0.5, 0.3, 0.2)) -> PatternMatrix:
    syms = (ZERO, STAR, QMARK)
    return PatternMatrix(
        tuple(
            tuple(rng.choices(syms, weights=weights)[0] for _ in range(q))
            for _ in range(p)
        )
    )


def random_system(rng: random.Random, max_n: int = 4, max_m: int = 2) -> StructuredSystem:
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    return StructuredSystem(random_pattern(rng, n, n), random_pattern(rng, n, m))


def all_patterns(p: int, q: int):
    """Every p x q pattern, in lexicographic symbol order."""
    import itertools

    syms = (ZERO, STAR, QMARK)
    for combo in itertools.product(syms, repeat=p * q):
        yield PatternMatrix(
            tuple(tuple(combo[i * q: (i + 1) * q]) for i in range(p))
        )


def reference_colorable(m: PatternMatrix, rng: random.Random | None = None) -> bool:
    """Slow, kernel-independent colorability check with an arbitrary scan order."""
    p, q = m.rows, m.cols
    out = {i: set() for i in range(q)}
    star = set()
    for i in range(p):
        for j in range(q):
            if m.entries[i][j] != ZERO:
                out[j].add(i)
            if m.entries[i][j] == STAR:
                star.add((j, i))
    black: set[int] = set()
    while True:
        legal = []
        for i in range(q):
            white_out = [v for v in out[i] if v not in black]
            if len(white_out) == 1 and (i, white_out[0]) in star:
                legal.append(white_out[0])
        legal = [v for v in legal if v not in black]
        if not legal:
            break
        pick = rng.choice(legal) if rng is not None else legal[0]
        black.add(pick)
    return black == set(range(p))


def left_mul(x, m: RationalMatrix) -> list[Fraction]:
    """Row vector times matrix, exact."""
    return [
        sum(x[i] * m.entries[i][j] for i in range(m.rows))
        for j in range(m.cols)
    ]


def permute_pattern(m: PatternMatrix, row_perm, col_perm) -> PatternMatrix:
    return PatternMatrix(
        tuple(
            tuple(m.entries[row_perm[i]][col_perm[j]] for j in range(m.cols))
            for i in range(m.rows)
        )
    )
