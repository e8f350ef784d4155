"""The graded semigroup of integral GT patterns and its essential generators."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Sequence

from .core import GTPattern, add_patterns, pattern_from_flat
from .errors import InvalidElement, TooLarge
from .polytope import GTPolytope, build, contains, count_lattice_points, iter_lattice_rows
from .tableaux import Tableau, phi, phi_inverse

DEFAULT_LEVEL_GUARD = 10**6


def level_guard(guard: int | None = None) -> int:
    if guard is not None:
        return guard
    env = os.environ.get("GTW_GUARD")
    return int(env) if env else DEFAULT_LEVEL_GUARD


@dataclass(frozen=True)
class GradedElement:
    degree: int
    pattern: GTPattern

    def __add__(self, other: "GradedElement") -> "GradedElement":
        return GradedElement(self.degree + other.degree, add_patterns(self.pattern, other.pattern))


def graded_element(P: GTPolytope, degree: int, pattern: GTPattern) -> GradedElement:
    if degree < 1:
        raise InvalidElement(f"degree must be positive, got {degree}")
    if not pattern.is_integral():
        raise InvalidElement("semigroup elements are integral patterns")
    if not contains(P, pattern, degree):
        raise InvalidElement(f"pattern is not in the degree-{degree} dilate")
    return GradedElement(degree, pattern)


Rows = tuple[tuple[int, ...], ...]


def _flat(rows: Rows) -> tuple[int, ...]:
    return tuple(x for row in rows for x in row)


def _interlaces(n: int, flat: Sequence[int]) -> bool:
    # flat entries run top-down, row n first
    start = 0
    for length in range(n, 1, -1):
        below = start + length
        for i in range(length - 1):
            x = flat[below + i]
            if not flat[start + i] >= x >= flat[start + i + 1]:
                return False
        start = below
    return True


def _level(P: GTPolytope, d: int, guard: int) -> list[tuple[int, ...]]:
    size = count_lattice_points(P, d)
    if size > guard:
        raise TooLarge(f"level {d} has {size} points, guard is {guard}", level=d, size=size, guard=guard)
    return [_flat(rows) for rows in iter_lattice_rows(P, d)]


def _decomposes(e: Sequence[int], d: int, levels: dict[int, list], lookup) -> bool:
    for d1 in range(1, d // 2 + 1):
        for y in levels[d1]:
            z = tuple(a - b for a, b in zip(e, y))
            if lookup(d - d1, z):
                return True
    return False


def is_essential(e: GradedElement, lam: Sequence[int], mu: Sequence[int], guard: int | None = None) -> bool:
    """Whether ``e`` is not a sum of two elements of strictly lower degree.

    Only the levels up to ``degree // 2`` are enumerated; the complementary
    summand is checked for membership directly (its top row and row sums are
    automatically right, so only interlacing needs testing).
    """
    P = build(lam, mu)
    e = graded_element(P, e.degree, e.pattern)
    guard = level_guard(guard)
    d = e.degree
    levels = {d1: _level(P, d1, guard) for d1 in range(1, d // 2 + 1)}
    n = P.n
    return not _decomposes(_flat(e.pattern.int_rows()), d, levels, lambda _, z: _interlaces(n, z))


@dataclass
class GeneratorReport:
    max_degree: int
    generators: dict[int, list[GTPattern]] = field(default_factory=dict)
    level_sizes: dict[int, int] = field(default_factory=dict)

    @property
    def counts(self) -> dict[int, int]:
        return {d: len(g) for d, g in self.generators.items()}

    @property
    def max_essential_degree(self) -> int:
        return max((d for d, g in self.generators.items() if g), default=0)

    def to_dict(self, full: bool = False) -> dict:
        out = {
            "max_degree": self.max_degree,
            "max_essential_degree": self.max_essential_degree,
            "degrees": [
                {"degree": d, "level_size": self.level_sizes[d], "essential": len(self.generators[d])}
                for d in sorted(self.generators)
            ],
        }
        if full:
            out["generators"] = {str(d): [p.to_dict() for p in g] for d, g in sorted(self.generators.items())}
        return out


def essential_generators(lam: Sequence[int], mu: Sequence[int], D: int, guard: int | None = None) -> GeneratorReport:
    """Essential generators of degree ``<= D``, computed level by level.

    Level ``d`` is fully built and indexed before level ``d + 1`` starts; the
    indexed lower levels answer the membership queries.
    """
    if D < 1:
        raise ValueError("degree cutoff must be at least 1")
    P = build(lam, mu)
    guard = level_guard(guard)
    levels: dict[int, list] = {}
    index: dict[int, frozenset] = {}
    report = GeneratorReport(D)
    n = P.n
    for d in range(1, D + 1):
        pts = _level(P, d, guard)
        ess = [e for e in pts if not _decomposes(e, d, levels, lambda k, z: z in index[k])]
        levels[d] = pts
        index[d] = frozenset(pts)
        report.level_sizes[d] = len(pts)
        report.generators[d] = [pattern_from_flat(n, e) for e in ess]
    return report


def multiply_degenerate(t1: Tableau, t2: Tableau) -> Tableau:
    """Product of basis elements in the degenerate ring: add the GT patterns."""
    return phi_inverse(add_patterns(phi(t1), phi(t2)))
