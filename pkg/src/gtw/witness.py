"""The exponential-denominator vertex of GT(k w3, (1,...,1)).

``build_witness(k)`` assembles the pattern block by block, ``tiling`` groups
equal adjacent entries, and ``rigidity_check`` decides whether a point of the
polytope can be perturbed while keeping each tile's entries equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .core import GTPattern, denominator, format_rational, scale_pattern
from .errors import GTError, InvalidK, NotMember, TooLarge
from .polytope import build, contains, is_vertex


@dataclass(frozen=True)
class WitnessSpec:
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 2:
            raise InvalidK(f"k must be an integer >= 2, got {self.k!r}")

    @property
    def n(self) -> int:
        return 3 * self.k

    @property
    def lam(self) -> tuple[int, ...]:
        return (self.k,) * 3 + (0,) * (self.n - 3)

    @property
    def mu(self) -> tuple[int, ...]:
        return (1,) * self.n

    @property
    def N(self) -> int:
        return self.k + self.k // 2 - 2


def t_sequences(k: int, jmax: int) -> tuple[list[Fraction], list[Fraction]]:
    """Values of the coupled recurrence for ``0 <= j <= jmax``."""
    t1 = [Fraction(k)]
    t2 = [Fraction(k) - Fraction(1, 2)]
    for _ in range(jmax):
        a = t2[-1] - 1
        t2.append((a + t1[-1]) / 2)
        t1.append(a)
    return t1, t2


def t1_closed(k: int, j: int) -> Fraction:
    return k - Fraction(2, 3) * j + Fraction(5, 9) * Fraction(-1, 2) ** j - Fraction(5, 9)


def t2_closed(k: int, j: int) -> Fraction:
    return k - Fraction(2, 3) * j - Fraction(5, 18) * Fraction(-1, 2) ** j - Fraction(2, 9)


def build_witness(k: int) -> GTPattern:
    spec = WitnessSpec(k)
    n, N = spec.n, spec.N
    t1, t2 = t_sequences(k, N)
    cells: dict[tuple[int, int], Fraction] = {}

    def put(block, assignments):
        for (i, j), v in assignments:
            if (i, j) in cells:
                raise GTError(f"{block} block overwrites x[{i},{j}]")
            if not 1 <= i <= j <= n:
                raise GTError(f"{block} block addresses x[{i},{j}] outside the array")
            cells[i, j] = Fraction(v)

    put("initial", [
        ((1, n), k), ((2, n), k), ((3, n), k),
        ((1, n - 1), k), ((2, n - 1), k), ((3, n - 1), k - 1),
        ((1, n - 2), k), ((2, n - 2), t2[0]),
        ((1, n - 3), k),
    ])
    for j in range(1, N):
        put(f"repeat j={j}", [
            ((3, n - 2 * j), t1[j]),
            ((2, n - 2 * j - 1), t1[j]), ((3, n - 2 * j - 1), t1[j]),
            ((1, n - 2 * j - 2), t2[j]), ((2, n - 2 * j - 2), t1[j]),
            ((1, n - 2 * j - 3), t1[j]),
        ])
    last = t1[N]
    if k % 2 == 0:
        put("even terminal", [
            ((3, 4), last),
            ((2, 3), last), ((3, 3), last),
            ((1, 2), 2 - last), ((2, 2), last),
            ((1, 1), 1),
        ])
    else:
        put("odd terminal", [
            ((3, 5), last),
            ((2, 4), last), ((3, 4), last),
            ((1, 3), last), ((2, 3), last), ((3, 3), 3 - 2 * last),
            ((1, 2), last), ((2, 2), 2 - last),
            ((1, 1), 1),
        ])
    rows = [[cells.get((i, j), Fraction(0)) for i in range(1, j + 1)] for j in range(n, 0, -1)]
    return GTPattern(rows)


@dataclass(frozen=True)
class Tile:
    value: Fraction
    cells: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class Tiling:
    n: int
    tiles: tuple[Tile, ...]

    def tile_of(self, i: int, j: int) -> int:
        return next(t for t, tile in enumerate(self.tiles) if (i, j) in tile.cells)

    def counts_by_value(self) -> dict[Fraction, int]:
        out: dict[Fraction, int] = {}
        for tile in self.tiles:
            out[tile.value] = out.get(tile.value, 0) + 1
        return out


def tiling(p: GTPattern) -> Tiling:
    """Maximal connected groups of equal entries.

    ``x_{ij}`` is adjacent to the two entries it is compared with above it,
    ``x_{i,j+1}`` and ``x_{i+1,j+1}``; entries in the same row never are.
    """
    n = p.n
    parent = {(i, j): (i, j) for j in range(1, n + 1) for i in range(1, j + 1)}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for j in range(1, n):
        for i in range(1, j + 1):
            for up in ((i, j + 1), (i + 1, j + 1)):
                if p.x(i, j) == p.x(*up):
                    parent[find((i, j))] = find(up)
    groups: dict[tuple[int, int], set] = {}
    for c in parent:
        groups.setdefault(find(c), set()).add(c)
    # top-down, left-to-right by first cell
    order = sorted(groups.values(), key=lambda g: min((-j, i) for i, j in g))
    return Tiling(n, tuple(Tile(p.x(*min(g, key=lambda c: (-c[1], c[0]))), frozenset(g)) for g in order))


def rigidity_check(p: GTPattern, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Whether the only tile-respecting perturbation of ``p`` is zero.

    One unknown per tile. Tiles meeting the top row, or containing an entry
    pinned by its interlacing bounds, are fixed outright; every row sum gives
    a linear equation. Equations with a single unfixed tile are propagated
    first, and whatever survives is settled by an exact rank computation.
    """
    P = build(lam, mu)
    if not contains(P, p, 1):
        raise NotMember("pattern is not a point of the polytope")
    n = p.n
    til = tiling(p)
    where = {c: t for t, tile in enumerate(til.tiles) for c in tile.cells}
    fixed = set()
    for t, tile in enumerate(til.tiles):
        for i, j in tile.cells:
            lo, hi = P.bounds(i, j)
            if j == n or lo == hi:
                fixed.add(t)
                break
    equations = []
    for j in range(1, n):
        eq: dict[int, int] = {}
        for i in range(1, j + 1):
            t = where[i, j]
            eq[t] = eq.get(t, 0) + 1
        equations.append(eq)
    progress = True
    while progress:
        progress = False
        for eq in equations:
            open_tiles = [t for t in eq if t not in fixed]
            if len(open_tiles) == 1:
                fixed.add(open_tiles[0])
                progress = True
    unknown = [t for t in range(len(til.tiles)) if t not in fixed]
    if not unknown:
        return True
    rows = [{t: c for t, c in eq.items() if t not in fixed} for eq in equations]
    return linalg.sparse_rank([r for r in rows if r]) == len(unknown)


def propagation_order(p: GTPattern, lam: Sequence[int], mu: Sequence[int]) -> list[Fraction]:
    """Tile values in the order the single-unknown propagation fixes them.

    Tiles pinned by the top row come first. Tiles that propagation alone
    cannot reach are left out.
    """
    P = build(lam, mu)
    n = p.n
    til = tiling(p)
    where = {c: t for t, tile in enumerate(til.tiles) for c in tile.cells}
    order = []
    fixed = set()
    for t, tile in enumerate(til.tiles):
        if any(j == n or P.bounds(i, j)[0] == P.bounds(i, j)[1] for i, j in tile.cells):
            fixed.add(t)
            order.append(t)
    changed = True
    while changed:
        changed = False
        for j in range(n - 1, 0, -1):
            open_tiles = {where[i, j] for i in range(1, j + 1)} - fixed
            if len(open_tiles) == 1:
                t = open_tiles.pop()
                fixed.add(t)
                order.append(t)
                changed = True
    return [til.tiles[t].value for t in order]


def _pow2_exceeds_bound(q: int, n: int) -> bool:
    """Exact test of ``q > 2^(n/2 - 3)`` by squaring both sides."""
    e = n - 6
    if e >= 0:
        return q * q > 2 ** e
    return q * q * 2 ** (-e) > 1


def verify_theorem2(k: int, essential_up_to_k: int = 3, guard: int | None = None) -> dict:
    """Check every quantity behind the exponential lower bound for one ``k``."""
    from .semigroup import GradedElement, is_essential

    spec = WitnessSpec(k)
    p = build_witness(k)
    P = build(spec.lam, spec.mu)
    member = contains(P, p, 1)
    den = denominator(p)
    expected = 2 ** spec.N
    report = {
        "k": k,
        "n": spec.n,
        "N": spec.N,
        "member": member,
        "is_vertex": is_vertex(P, p) if member else False,
        "rigid": rigidity_check(p, spec.lam, spec.mu) if member else False,
        "denominator": den,
        "expected_denominator": expected,
        "denominator_ok": den == expected,
        "bound": f"2^({spec.n}/2-3)",
        "bound_comparison": f"{den}^2 = {den * den} > 2^{spec.n - 6}" if spec.n >= 6 else "",
        "exceeds_bound": _pow2_exceeds_bound(den, spec.n),
        "essential": None,
    }
    if k <= essential_up_to_k:
        try:
            elem = GradedElement(den, scale_pattern(p, den))
            report["essential"] = is_essential(elem, spec.lam, spec.mu, guard)
        except TooLarge:
            report["essential"] = None
    report["pass"] = all([
        report["member"], report["is_vertex"], report["rigid"],
        report["denominator_ok"], report["exceeds_bound"],
        report["essential"] is not False,
    ])
    report["witness"] = p.to_dict()
    report["T1_N"] = format_rational(p.x(3, 4) if k % 2 == 0 else p.x(3, 5))
    return report
