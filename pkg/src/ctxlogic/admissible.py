"""Admissible (selector) matrices.

An admissible ``M x N`` matrix has 0/1 entries with exactly one 1 per
column.  It is stored as its column->row map; applying ``G rho G^T`` to a
diagonal ``rho`` then just pushes each outcome's mass into the row that
its column selects.  Row numbers are 1-based everywhere outside this module's
internals.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import EmptyError, RowOutOfRange, ShapeMismatch
from .prob_core import Proposition, exact_ratio


@dataclass(frozen=True)
class AdmissibleMatrix:
    rows: int
    col_map: tuple[int, ...]

    def __post_init__(self) -> None:
        col_map = tuple(int(r) for r in self.col_map)
        if not col_map:
            raise EmptyError("a selector needs at least one column")
        if self.rows < 1:
            raise RowOutOfRange(f"row count must be positive, got {self.rows}")
        for j, r in enumerate(col_map, start=1):
            if not 1 <= r <= self.rows:
                raise RowOutOfRange(f"column {j} points at row {r}, outside 1..{self.rows}")
        object.__setattr__(self, "col_map", col_map)

    @property
    def cols(self) -> int:
        return len(self.col_map)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __str__(self) -> str:
        return f"{self.rows}x{self.cols} [{', '.join(map(str, self.col_map))}]"

    def to_json(self, dense: bool = False) -> dict:
        out: dict = {"rows": self.rows, "col_map": list(self.col_map)}
        if dense:
            out["dense"] = as_dense(self)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "AdmissibleMatrix":
        return make_admissible(obj["rows"], obj["col_map"])


def make_admissible(rows: int, col_map: Sequence[int]) -> AdmissibleMatrix:
    return AdmissibleMatrix(rows, tuple(col_map))


def identity(n: int) -> AdmissibleMatrix:
    return AdmissibleMatrix(n, tuple(range(1, n + 1)))


def collapse(n: int) -> AdmissibleMatrix:
    """The 1 x n selector sending every outcome to the single row."""
    return AdmissibleMatrix(1, (1,) * n)


def from_dense(grid: Sequence[Sequence[int]]) -> AdmissibleMatrix:
    if not grid or not grid[0]:
        raise EmptyError("empty grid")
    rows, cols = len(grid), len(grid[0])
    if any(len(row) != cols for row in grid):
        raise ShapeMismatch("ragged grid")
    col_map = []
    for j in range(cols):
        column = [grid[i][j] for i in range(rows)]
        if any(v not in (0, 1) for v in column) or sum(column) != 1:
            raise RowOutOfRange(f"column {j + 1} is not a unit column")
        col_map.append(column.index(1) + 1)
    return AdmissibleMatrix(rows, tuple(col_map))


def as_dense(g: AdmissibleMatrix) -> list[list[int]]:
    grid = [[0] * g.cols for _ in range(g.rows)]
    for j, r in enumerate(g.col_map):
        grid[r - 1][j] = 1
    return grid


def apply(g: AdmissibleMatrix, a: Proposition) -> Proposition:
    """Diagonal of ``G diag(a) G^T``: ``out[i] = sum of a[j] over col_map[j] == i``."""
    if g.cols != len(a):
        raise ShapeMismatch(f"selector has {g.cols} columns, proposition has {len(a)} outcomes")
    # bucket integer numerators over a common denominator
    den, nums = a.scaled
    buckets = [0] * g.rows
    for r, k in zip(g.col_map, nums):
        buckets[r - 1] += k
    # the pushforward keeps entries nonnegative and total mass 1
    assert sum(buckets) == den and min(buckets) >= 0
    return Proposition._trusted(tuple(exact_ratio(b, den) for b in buckets))


def compose(outer: AdmissibleMatrix, inner: AdmissibleMatrix) -> AdmissibleMatrix:
    """Selector for ``outer`` after ``inner`` (the matrix product outer @ inner)."""
    if outer.cols != inner.rows:
        raise ShapeMismatch(f"cannot compose {outer.shape} after {inner.shape}")
    return AdmissibleMatrix(outer.rows, tuple(outer.col_map[r - 1] for r in inner.col_map))


def count_selectors(rows: int, cols: int) -> int:
    return rows**cols


def enumerate_selectors(rows: int, cols: int) -> Iterator[AdmissibleMatrix]:
    """Yield all ``rows**cols`` selectors in lexicographic col_map order."""
    if rows < 1 or cols < 1:
        raise EmptyError("rows and cols must be positive")
    for col_map in itertools.product(range(1, rows + 1), repeat=cols):
        yield AdmissibleMatrix(rows, col_map)
