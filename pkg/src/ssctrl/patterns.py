"""Pattern matrices with zero / nonzero / arbitrary entries.

A pattern matrix is a grid over the symbols ``0`` (fixed zero), ``*``
(arbitrary nonzero) and ``?`` (arbitrary, zero allowed).  Its pattern class
is the set of real matrices whose entries respect those constraints
entrywise.  This module provides the pattern types, text/JSON formats, the
diagonal modification used by the two-condition controllability test, and
deterministic sampling of concrete rational members.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    BadTokenError,
    DimensionMismatchError,
    EmptyInputError,
    NotSquareError,
    RaggedRowsError,
    RowMismatchError,
)

ZERO = "0"
STAR = "*"
QMARK = "?"
SYMBOLS = frozenset((ZERO, STAR, QMARK))


@dataclass(frozen=True)
class PatternMatrix:
    """Immutable p x q grid of pattern symbols."""

    entries: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise EmptyInputError("pattern matrix must have at least one entry")
        q = len(self.entries[0])
        for i, row in enumerate(self.entries):
            if len(row) != q:
                raise RaggedRowsError(i)
            for j, sym in enumerate(row):
                if sym not in SYMBOLS:
                    raise BadTokenError(i, j, sym)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, pos: tuple[int, int]) -> str:
        i, j = pos
        return self.entries[i][j]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[str]]) -> "PatternMatrix":
        return cls(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class StructuredSystem:
    """A pair of pattern matrices (state n x n, input n x m)."""

    a: PatternMatrix
    b: PatternMatrix

    def __post_init__(self):
        if self.a.rows != self.a.cols:
            raise NotSquareError("state pattern must be square")
        if self.b.rows != self.a.rows:
            raise RowMismatchError("input pattern must have as many rows as the state pattern")

    @property
    def n(self) -> int:
        return self.a.rows

    @property
    def m(self) -> int:
        return self.b.cols


@dataclass(frozen=True)
class RationalMatrix:
    """Exact-arithmetic matrix with Fraction entries."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise EmptyInputError("rational matrix must have at least one entry")
        q = len(self.entries[0])
        for i, row in enumerate(self.entries):
            if len(row) != q:
                raise RaggedRowsError(i)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, pos: tuple[int, int]) -> Fraction:
        i, j = pos
        return self.entries[i][j]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RationalMatrix":
        return cls(tuple(tuple(Fraction(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError("inner dimensions do not match")
        cols = list(zip(*other.entries))
        return RationalMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise RowMismatchError("row counts differ")
        return RationalMatrix(
            tuple(left + right for left, right in zip(self.entries, other.entries))
        )


def parse_pattern(text: str) -> PatternMatrix:
    """Parse whitespace-separated symbol rows into a pattern matrix."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise EmptyInputError("no pattern rows in input")
    grid: list[tuple[str, ...]] = []
    width = None
    for i, line in enumerate(lines):
        tokens = line.split()
        for j, tok in enumerate(tokens):
            if tok not in SYMBOLS:
                raise BadTokenError(i, j, tok)
        if width is None:
            width = len(tokens)
        elif len(tokens) != width:
            raise RaggedRowsError(i)
        grid.append(tuple(tokens))
    return PatternMatrix(tuple(grid))


def render_pattern(m: PatternMatrix) -> str:
    """Canonical text form: single spaces, newline-separated rows."""
    return "\n".join(" ".join(row) for row in m.entries)


def compact_rows(m: PatternMatrix) -> list[str]:
    """JSON-friendly row strings with no separators, e.g. ``"*0?"``."""
    return ["".join(row) for row in m.entries]


def parse_system(text: str) -> StructuredSystem:
    """Parse a combined ``[A|B]`` block with a ``|`` column separator per row."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise EmptyInputError("no pattern rows in input")
    left_rows, right_rows = [], []
    for line in lines:
        if "|" not in line:
            raise BadTokenError(len(left_rows), line.count(" "), "|-separator missing")
        left, _, right = line.partition("|")
        left_rows.append(left)
        right_rows.append(right)
    a = parse_pattern("\n".join(left_rows))
    b = parse_pattern("\n".join(right_rows))
    return StructuredSystem(a, b)


def modified_diagonal(a: PatternMatrix) -> PatternMatrix:
    """Diagonal modification: 0 on the diagonal becomes *, anything else becomes ?."""
    if a.rows != a.cols:
        raise NotSquareError("diagonal modification needs a square pattern")
    return PatternMatrix(
        tuple(
            tuple(
                (STAR if sym == ZERO else QMARK) if i == j else sym
                for j, sym in enumerate(row)
            )
            for i, row in enumerate(a.entries)
        )
    )


def concat_horizontal(left: PatternMatrix, right: PatternMatrix | None) -> PatternMatrix:
    """Concatenate two patterns side by side.  ``right`` may be None (empty block)."""
    if right is None:
        return left
    if left.rows != right.rows:
        raise RowMismatchError("row counts differ")
    return PatternMatrix(tuple(l + r for l, r in zip(left.entries, right.entries)))


def weak_relaxation(m: PatternMatrix) -> PatternMatrix:
    """Replace every * by ?, keeping the fixed zeros."""
    return PatternMatrix(
        tuple(tuple(QMARK if sym == STAR else sym for sym in row) for row in m.entries)
    )


# Sampling draws small integers so downstream exact arithmetic stays cheap;
# ? entries hit zero with probability 1/3 to probe degenerate class members.
_NONZERO_POOL = tuple(v for v in range(-10, 11) if v != 0)


def _rng_for(m: PatternMatrix, seed: int) -> random.Random:
    digest = hashlib.blake2b(
        f"{seed}:{render_pattern(m)}".encode(), digest_size=16
    ).digest()
    return random.Random(int.from_bytes(digest, "big"))


def sample_instance(m: PatternMatrix, seed: int) -> RationalMatrix:
    """Deterministically sample a member of the pattern class of ``m``."""
    rng = _rng_for(m, seed)
    out = []
    for row in m.entries:
        vals = []
        for sym in row:
            if sym == ZERO:
                vals.append(Fraction(0))
            elif sym == STAR:
                vals.append(Fraction(rng.choice(_NONZERO_POOL)))
            else:
                if rng.random() < 1 / 3:
                    vals.append(Fraction(0))
                else:
                    vals.append(Fraction(rng.choice(_NONZERO_POOL)))
        out.append(tuple(vals))
    return RationalMatrix(tuple(out))


def is_member(x: RationalMatrix, m: PatternMatrix) -> bool:
    """True iff ``x`` belongs to the pattern class of ``m``."""
    if x.rows != m.rows or x.cols != m.cols:
        raise DimensionMismatchError(
            f"{x.rows}x{x.cols} instance vs {m.rows}x{m.cols} pattern"
        )
    for xrow, mrow in zip(x.entries, m.entries):
        for val, sym in zip(xrow, mrow):
            if sym == ZERO and val != 0:
                return False
            if sym == STAR and val == 0:
                return False
    return True
