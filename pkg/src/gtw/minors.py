"""Products of leading-column minors and degree-one semistability."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from . import linalg
from .core import as_rational, check_compatible, format_rational
from .errors import IndexOutOfRange, MalformedPattern, NotIncreasing
from .tableaux import Tableau, iter_ssyt


def as_matrix(entries: Sequence[Sequence]) -> list[list[Fraction]]:
    m = [[as_rational(x) for x in row] for row in entries]
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise MalformedPattern("matrix must be square and nonempty")
    return m


def matrix_from_dict(d: dict) -> list[list[Fraction]]:
    try:
        n = int(d["n"])
        m = as_matrix(d["entries"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedPattern("matrix JSON needs integer 'n' and 'entries'") from exc
    if len(m) != n:
        raise MalformedPattern(f"'n' is {n} but entries are {len(m)}x{len(m)}")
    return m


def matrix_from_json(text: str) -> list[list[Fraction]]:
    return matrix_from_dict(json.loads(text))


def matrix_to_dict(m) -> dict:
    return {"n": len(m), "entries": [[format_rational(x) for x in row] for row in m]}


def det_minor(g, rows: Sequence[int]) -> Fraction:
    """Determinant of ``g`` restricted to ``rows`` (1-based) and the first ``len(rows)`` columns."""
    n = len(g)
    rows = tuple(rows)
    for r in rows:
        if not 1 <= r <= n:
            raise IndexOutOfRange(f"row index {r} outside 1..{n}")
    if any(a >= b for a, b in zip(rows, rows[1:])):
        raise NotIncreasing(f"{rows} is not strictly increasing")
    k = len(rows)
    return linalg.det([[Fraction(g[r - 1][c]) for c in range(k)] for r in rows])


def eval_basis_vector(g, t: Tableau) -> Fraction:
    value = Fraction(1)
    for col in t.columns():
        value *= det_minor(g, col)
        if not value:
            break
    return value


def is_semistable(g, lam: Sequence[int], mu: Sequence[int]) -> tuple[bool, Tableau | None]:
    """Whether some basis vector of shape ``lam`` and content ``mu`` is nonzero at ``g``.

    Returns the first such tableau in enumeration order as the witness.
    """
    check_compatible(lam, mu)
    if len(mu) != len(g):
        raise MalformedPattern(f"matrix is {len(g)}x{len(g)} but weights have length {len(mu)}")
    cache: dict[tuple[int, ...], Fraction] = {}
    for t in iter_ssyt(lam, mu):
        nonzero = True
        for col in t.columns():
            if col not in cache:
                cache[col] = det_minor(g, col)
            if not cache[col]:
                nonzero = False
                break
        if nonzero:
            return True, t
    return False, None
