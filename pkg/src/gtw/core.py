"""Exact scalars, partitions, contents and Gelfand-Tsetlin patterns.

A pattern of size ``n`` is stored as its rows listed top-down: ``rows[0]`` is
row ``n`` (length ``n``) and ``rows[-1]`` is row 1 (a single entry). Entries
are addressed with the usual 1-based ``x(i, j)`` for ``1 <= i <= j <= n``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import (
    ContentMismatch,
    InterlacingViolation,
    InvalidContent,
    InvalidPartition,
    MalformedPattern,
    SizeMismatch,
)

Rational = Fraction


def as_rational(x) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string. Floats are refused."""
    if isinstance(x, bool):
        raise MalformedPattern(f"not a rational entry: {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if "." in s or "e" in s.lower():
            raise MalformedPattern(f"decimal notation is not exact: {x!r}")
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedPattern(f"not a rational entry: {x!r}") from exc
    raise MalformedPattern(f"not a rational entry: {x!r}")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


@dataclass(frozen=True)
class Partition:
    """Dominant weight: weakly decreasing, ``parts[0] >= 1``, last part 0."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        if len(parts) < 1:
            raise InvalidPartition("partition must have at least one part")
        if any(x < 0 for x in parts):
            raise InvalidPartition(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidPartition(f"{parts} is not weakly decreasing")
        if parts[0] < 1:
            raise InvalidPartition("the largest part must be at least 1")
        if parts[-1] != 0:
            shifted = tuple(x - parts[-1] for x in parts)
            raise InvalidPartition(
                f"last part of {parts} must be 0; subtract {parts[-1]} from "
                f"every part, i.e. use {shifted}"
            )

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, k):
        return self.parts[k]


@dataclass(frozen=True)
class Content:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(x < 0 for x in parts):
            raise InvalidContent(f"negative entry in content {parts}")

    @property
    def n(self) -> int:
        return len(self.parts)

    def partial_sums(self) -> tuple[int, ...]:
        out, s = [], 0
        for x in self.parts:
            s += x
            out.append(s)
        return tuple(out)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, k):
        return self.parts[k]


def check_compatible(lam: Sequence[int], mu: Sequence[int]) -> None:
    if len(lam) != len(mu):
        raise ContentMismatch(f"shape has {len(lam)} parts but content has {len(mu)}")
    if sum(lam) != sum(mu):
        raise ContentMismatch(f"|shape| = {sum(lam)} differs from |content| = {sum(mu)}")


def _rows_of(entries) -> tuple[tuple[Fraction, ...], ...]:
    try:
        rows = tuple(tuple(as_rational(x) for x in row) for row in entries)
    except TypeError as exc:
        raise MalformedPattern("pattern rows must be sequences") from exc
    n = len(rows)
    if n < 1:
        raise MalformedPattern("pattern must have at least one row")
    for r, row in enumerate(rows):
        if len(row) != n - r:
            raise MalformedPattern(
                f"row {r} from the top has length {len(row)}, expected {n - r}"
            )
    return rows


@dataclass(frozen=True)
class GTPattern:
    """Triangular array satisfying the interlacing inequalities.

    Construction validates; an ``InterlacingViolation`` names the first
    failing ``(i, j)`` scanning rows top-down and ``i`` left to right.
    """

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = _rows_of(self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for j in range(n - 1, 0, -1):
            upper = rows[n - j - 1]
            row = rows[n - j]
            for i in range(j):
                if not upper[i] >= row[i] >= upper[i + 1]:
                    raise InterlacingViolation(i + 1, j)

    @property
    def n(self) -> int:
        return len(self.rows)

    def x(self, i: int, j: int) -> Fraction:
        """Entry ``x_{ij}`` with 1-based indices."""
        return self.rows[self.n - j][i - 1]

    def row(self, j: int) -> tuple[Fraction, ...]:
        return self.rows[self.n - j]

    @property
    def top(self) -> tuple[Fraction, ...]:
        return self.rows[0]

    def flat(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self.rows for x in row)

    def row_sums(self) -> tuple[Fraction, ...]:
        """Row sums indexed by ``j = 1..n``."""
        return tuple(sum(self.row(j)) for j in range(1, self.n + 1))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.flat())

    def int_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(x) for x in row) for row in self.rows)

    def to_dict(self) -> dict:
        return {"n": self.n, "rows": [[format_rational(x) for x in row] for row in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self):
        width = max(len(format_rational(x)) for x in self.flat())
        lines = []
        for r, row in enumerate(self.rows):
            cells = [format_rational(x).rjust(width) for x in row]
            lines.append(" " * (r * (width + 1) // 2) + " ".join(cells))
        return "\n".join(lines)


def validate_pattern(entries: Iterable[Iterable]) -> GTPattern:
    return GTPattern(entries)


def pattern_from_flat(n: int, flat: Sequence) -> GTPattern:
    rows, k = [], 0
    for length in range(n, 0, -1):
        rows.append(flat[k:k + length])
        k += length
    return GTPattern(rows)


def pattern_from_dict(d: dict) -> GTPattern:
    try:
        n = int(d["n"])
        rows = d["rows"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedPattern("pattern JSON needs integer 'n' and 'rows'") from exc
    p = GTPattern(rows)
    if p.n != n:
        raise MalformedPattern(f"'n' is {n} but rows describe size {p.n}")
    return p


def pattern_from_json(text: str) -> GTPattern:
    return pattern_from_dict(json.loads(text))


def zero_pattern(n: int) -> GTPattern:
    return GTPattern([[0] * length for length in range(n, 0, -1)])


def denominator(p: GTPattern) -> int:
    return lcm(*(x.denominator for x in p.flat()))


def add_patterns(a: GTPattern, b: GTPattern) -> GTPattern:
    if a.n != b.n:
        raise SizeMismatch(f"cannot add patterns of sizes {a.n} and {b.n}")
    return GTPattern([[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)])


def scale_pattern(a: GTPattern, c) -> GTPattern:
    c = as_rational(c)
    if c < 0:
        raise ValueError("scale factor must be nonnegative")
    return GTPattern([[c * x for x in row] for row in a.rows])


def subtract_patterns(a: GTPattern, b: GTPattern) -> GTPattern:
    """``a - b``; raises ``InterlacingViolation`` if the difference is not a pattern."""
    if a.n != b.n:
        raise SizeMismatch(f"cannot subtract patterns of sizes {a.n} and {b.n}")
    return GTPattern([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)])
