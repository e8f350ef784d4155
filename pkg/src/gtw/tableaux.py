"""Semistandard Young tableaux and the bijection to integral GT patterns."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import GTPattern, check_compatible
from .errors import (
    ColumnNotStrictlyIncreasing,
    EntryOutOfRange,
    InvalidPartition,
    MalformedPattern,
    NotAPartitionShape,
    NotInImage,
    RowNotWeaklyIncreasing,
)


@dataclass(frozen=True)
class Tableau:
    """Semistandard tableau stored row-wise over the alphabet ``1..n``.

    Trailing empty rows are dropped. Construction validates, checking the
    diagram shape first, then rows, then columns.
    """

    rows: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        try:
            rows = [tuple(int(v) for v in row) for row in self.rows]
        except (TypeError, ValueError) as exc:
            raise MalformedPattern("tableau rows must be sequences of integers") from exc
        while rows and not rows[-1]:
            rows.pop()
        rows = tuple(rows)
        object.__setattr__(self, "rows", rows)
        n = int(self.n)
        object.__setattr__(self, "n", n)
        if n < 1:
            raise MalformedPattern("alphabet bound n must be positive")
        lengths = [len(r) for r in rows]
        if any(a < b for a, b in zip(lengths, lengths[1:])) or 0 in lengths:
            raise NotAPartitionShape(f"row lengths {lengths} do not form a Young diagram")
        for r, row in enumerate(rows, start=1):
            for v in row:
                if not 1 <= v <= n:
                    raise EntryOutOfRange(f"entry {v} in row {r} is outside 1..{n}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise RowNotWeaklyIncreasing(r)
        for c in range(lengths[0] if lengths else 0):
            col = self.column(c + 1)
            if any(a >= b for a, b in zip(col, col[1:])):
                raise ColumnNotStrictlyIncreasing(c + 1)

    def column(self, c: int) -> tuple[int, ...]:
        """Column ``c`` (1-based) read top to bottom."""
        return tuple(row[c - 1] for row in self.rows if len(row) >= c)

    def columns(self) -> list[tuple[int, ...]]:
        width = len(self.rows[0]) if self.rows else 0
        return [self.column(c) for c in range(1, width + 1)]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def to_dict(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self):
        return "\n".join(" ".join(map(str, row)) for row in self.rows)


def validate_tableau(rows: Sequence[Sequence[int]], n: int) -> Tableau:
    return Tableau(rows, n)


def tableau_from_dict(d: dict) -> Tableau:
    try:
        return Tableau(d["rows"], d["n"])
    except (KeyError, TypeError) as exc:
        raise MalformedPattern("tableau JSON needs integer 'n' and 'rows'") from exc


def tableau_from_json(text: str) -> Tableau:
    return tableau_from_dict(json.loads(text))


def shape(t: Tableau) -> tuple[int, ...]:
    lengths = [len(r) for r in t.rows]
    return tuple(lengths + [0] * (t.n - len(lengths)))


def content(t: Tableau) -> tuple[int, ...]:
    counts = [0] * t.n
    for v in t.reading_word():
        counts[v - 1] += 1
    return tuple(counts)


def _check_shape(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise InvalidPartition(f"{lam} is not a weakly decreasing sequence of nonnegative integers")
    return lam


def iter_ssyt(lam: Sequence[int], mu: Sequence[int]) -> Iterator[Tableau]:
    """Yield semistandard tableaux of shape ``lam`` and content ``mu``.

    Cells are filled in row-major order trying values in increasing order, so
    the output comes out sorted by reading word.
    """
    lam = _check_shape(lam)
    mu = tuple(int(x) for x in mu)
    check_compatible(lam, mu)
    n = len(mu)
    rows_len = [x for x in lam if x > 0]
    if len(rows_len) > n:
        return
    cells = [(r, c) for r, length in enumerate(rows_len) for c in range(length)]
    # height of column c, for the room-below bound
    heights = [sum(1 for length in rows_len if length > c) for c in range(rows_len[0] if rows_len else 0)]
    grid = [[0] * length for length in rows_len]
    remaining = list(mu)

    def fill(k):
        if k == len(cells):
            yield Tableau(tuple(tuple(row) for row in grid), n)
            return
        r, c = cells[k]
        lo = r + 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        hi = n - (heights[c] - r - 1)
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[r][c] = v
            yield from fill(k + 1)
            remaining[v - 1] += 1
        grid[r][c] = 0

    yield from fill(0)


def enumerate_ssyt(lam: Sequence[int], mu: Sequence[int]) -> list[Tableau]:
    return list(iter_ssyt(lam, mu))


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    return sum(1 for _ in iter_ssyt(lam, mu))


def phi(t: Tableau) -> GTPattern:
    """GT pattern whose row ``j`` is the shape of the entries ``<= j``."""
    n = t.n
    rows = []
    for j in range(n, 0, -1):
        row = [sum(1 for v in tr if v <= j) for tr in t.rows[:j]]
        rows.append(row + [0] * (j - len(row)))
    return GTPattern(rows)


def phi_inverse(p: GTPattern) -> Tableau:
    if not p.is_integral():
        raise NotInImage("pattern has non-integral entries")
    if min(p.flat()) < 0:
        raise NotInImage("pattern has negative entries")
    n = p.n
    rows = []
    for i in range(1, n + 1):
        row = []
        prev = 0
        for j in range(i, n + 1):
            cur = int(p.x(i, j))
            if cur < prev:
                raise NotInImage(f"row {i} shrinks between rows {j - 1} and {j}")
            row.extend([j] * (cur - prev))
            prev = cur
        rows.append(row)
    return Tableau(rows, n)
