"""The Gelfand-Tsetlin polytope GT(lam, mu) as an explicit linear system.

Coordinates are the pattern entries flattened top-down (row ``n`` first), so
a flat vector is exactly ``GTPattern.flat()``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb, gcd, lcm
from typing import Iterator, Sequence

from . import linalg
from .core import Content, GTPattern, Partition, check_compatible, denominator, pattern_from_flat
from .errors import (EmptyPolytope, InsufficientDilates, InternalInconsistency, NonpolynomialResidue, NotMember,
                     SizeMismatch, TooLarge)

DEFAULT_VERTEX_GUARD = 8


@dataclass(frozen=True)
class Constraint:
    """``sum(coeff * x[var]) (== or >=) rhs`` at dilate 1."""

    coeffs: tuple[tuple[int, int], ...]
    rhs: int
    label: str

    def value(self, flat: Sequence) -> Fraction:
        return sum((c * flat[v] for v, c in self.coeffs), Fraction(0))


def var_index(n: int, i: int, j: int) -> int:
    """Flat index of ``x_{ij}``."""
    return n * (n + 1) // 2 - j * (j + 1) // 2 + (i - 1)


@dataclass(frozen=True)
class GTPolytope:
    lam: Partition
    mu: Content
    equalities: tuple[Constraint, ...] = field(init=False)
    inequalities: tuple[Constraint, ...] = field(init=False)

    def __post_init__(self):
        lam, mu = self.lam, self.mu
        if not isinstance(lam, Partition):
            lam = Partition(tuple(lam))
        if not isinstance(mu, Content):
            mu = Content(tuple(mu))
        check_compatible(lam.parts, mu.parts)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        n = lam.n
        eqs = [Constraint(((var_index(n, i, n), 1),), lam[i - 1], f"top x[{i},{n}]")
               for i in range(1, n + 1)]
        sums = mu.partial_sums()
        for j in range(1, n):
            eqs.append(Constraint(tuple((var_index(n, i, j), 1) for i in range(1, j + 1)),
                                  sums[j - 1], f"row-sum {j}"))
        ineqs = []
        for j in range(n - 1, 0, -1):
            for i in range(1, j + 1):
                ineqs.append(Constraint(((var_index(n, i, j + 1), 1), (var_index(n, i, j), -1)), 0,
                                        f"x[{i},{j + 1}] >= x[{i},{j}]"))
                ineqs.append(Constraint(((var_index(n, i, j), 1), (var_index(n, i + 1, j + 1), -1)), 0,
                                        f"x[{i},{j}] >= x[{i + 1},{j + 1}]"))
        object.__setattr__(self, "equalities", tuple(eqs))
        object.__setattr__(self, "inequalities", tuple(ineqs))

    @property
    def n(self) -> int:
        return self.lam.n

    @property
    def nvars(self) -> int:
        return self.n * (self.n + 1) // 2

    def bounds(self, i: int, j: int) -> tuple[int, int]:
        """Range forced on ``x_{ij}`` by interlacing down from the top row."""
        return self.lam[i + self.n - j - 1], self.lam[i - 1]

    @cached_property
    def _reduced(self):
        return _reduce(self)

    def is_empty(self) -> bool:
        return self._reduced is None


def build(lam: Sequence[int], mu: Sequence[int]) -> GTPolytope:
    return GTPolytope(Partition(tuple(lam)), Content(tuple(mu)))


def contains(P: GTPolytope, p: GTPattern, d: int = 1) -> bool:
    if p.n != P.n:
        raise SizeMismatch(f"pattern has size {p.n}, polytope has size {P.n}")
    flat = p.flat()
    return all(c.value(flat) == d * c.rhs for c in P.equalities)


def _interlacing_rows(upper: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    """Integer rows below ``upper`` with the given sum, in lexicographic order."""
    m = len(upper) - 1
    lo = [upper[i + 1] for i in range(m)]
    hi = [upper[i] for i in range(m)]
    # suffix sums bound what the remaining entries can contribute
    lo_suf = [0] * (m + 1)
    hi_suf = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        lo_suf[i] = lo_suf[i + 1] + lo[i]
        hi_suf[i] = hi_suf[i + 1] + hi[i]
    row = [0] * m

    def rec(i, rest):
        if i == m:
            if rest == 0:
                yield tuple(row)
            return
        a = max(lo[i], rest - hi_suf[i + 1])
        b = min(hi[i], rest - lo_suf[i + 1])
        for v in range(a, b + 1):
            row[i] = v
            yield from rec(i + 1, rest - v)

    if lo_suf[0] <= total <= hi_suf[0]:
        yield from rec(0, total)


def iter_lattice_points(P: GTPolytope, d: int) -> Iterator[GTPattern]:
    """Integral points of the ``d``-th dilate, in lexicographic order."""
    for rows in iter_lattice_rows(P, d):
        yield GTPattern(rows)


def iter_lattice_rows(P: GTPolytope, d: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Like ``iter_lattice_points`` but yields plain integer row tuples."""
    n = P.n
    sums = [d * s for s in P.mu.partial_sums()]
    top = tuple(d * x for x in P.lam)
    rows = [top]

    def rec(j):
        if j == 0:
            yield tuple(rows)
            return
        for r in _interlacing_rows(rows[-1], sums[j - 1]):
            rows.append(r)
            yield from rec(j - 1)
            rows.pop()

    yield from rec(n - 1)


def lattice_points(P: GTPolytope, d: int) -> list[GTPattern]:
    return list(iter_lattice_points(P, d))


def count_lattice_points(P: GTPolytope, d: int) -> int:
    """Number of integral points of the ``d``-th dilate (memoized row recursion)."""
    sums = [d * s for s in P.mu.partial_sums()]

    @lru_cache(maxsize=None)
    def count(upper, j):
        if j == 0:
            return 1
        return sum(count(r, j - 1) for r in _interlacing_rows(upper, sums[j - 1]))

    return count(tuple(d * x for x in P.lam), P.n - 1)


# --- reduced coordinates -----------------------------------------------------


@dataclass
class _Reduced:
    """Affine parametrization ``x = base + sum(y_k * dirs[k])`` of the affine hull.

    ``ineqs`` are the interlacing constraints that are not identically tight,
    rewritten as ``a . y >= b``.
    """

    base: list[Fraction]
    dirs: list[list[Fraction]]
    ineqs: list[tuple[list[Fraction], Fraction]]

    @property
    def dim(self) -> int:
        return len(self.dirs)

    def point(self, y: Sequence[Fraction]) -> list[Fraction]:
        x = list(self.base)
        for yk, v in zip(y, self.dirs):
            if yk:
                for t, vt in enumerate(v):
                    if vt:
                        x[t] += yk * vt
        return x


def _affine_system(P: GTPolytope, extra_tight: Sequence[Constraint] = ()):
    """Parametrize the equalities (plus ``extra_tight``) after fixing bound-forced entries."""
    n = P.n
    N = P.nvars
    fixed: dict[int, Fraction] = {}
    for j in range(1, n + 1):
        for i in range(1, j + 1):
            lo, hi = P.bounds(i, j)
            if lo == hi:
                fixed[var_index(n, i, j)] = Fraction(lo)
    free = [v for v in range(N) if v not in fixed]
    pos = {v: k for k, v in enumerate(free)}
    a, b = [], []
    for c in list(P.equalities) + list(extra_tight):
        row = [Fraction(0)] * len(free)
        rhs = Fraction(c.rhs)
        for v, coef in c.coeffs:
            if v in fixed:
                rhs -= coef * fixed[v]
            else:
                row[pos[v]] += coef
        a.append(row)
        b.append(rhs)
    if free:
        sol = linalg.solve_affine(a, b, len(free))
        if sol is None:
            return None
        x0f, basis = sol
    elif any(b):
        return None
    else:
        x0f, basis = [], []
    base = [Fraction(0)] * N
    for v, val in fixed.items():
        base[v] = val
    for v, k in pos.items():
        base[v] = x0f[k]
    dirs = []
    for z in basis:
        full = [Fraction(0)] * N
        for v, k in pos.items():
            full[v] = z[k]
        dirs.append(full)
    return base, dirs


def _project(c: Constraint, base, dirs):
    a = [sum((coef * dvec[v] for v, coef in c.coeffs), Fraction(0)) for dvec in dirs]
    b = Fraction(c.rhs) - c.value(base)
    return a, b


def _reduce(P: GTPolytope):
    """Affine hull and essential inequalities, or ``None`` for an empty polytope.

    Inequalities tight on the whole polytope are found with exact LPs: one
    LP maximizes the sum of capped slacks over the undecided inequalities;
    positive slacks certify non-tightness, and a zero optimum proves every
    undecided inequality is an implicit equality.
    """
    system = _affine_system(P)
    if system is None:
        return None
    base, dirs = system
    projected = []
    for c in P.inequalities:
        a, b = _project(c, base, dirs)
        if not any(a):
            if b > 0:
                return None
            continue
        projected.append((c, a, b))
    implicit: list[Constraint] = []
    strict: set[int] = set()
    f = len(dirs)
    while True:
        undecided = [k for k in range(len(projected)) if k not in strict]
        if not undecided:
            break
        opt = _max_capped_slack(projected, undecided, f)
        if opt is None:
            return None
        value, slacks = opt
        if value == 0:
            implicit.extend(projected[k][0] for k in undecided)
            break
        for k, s in zip(undecided, slacks):
            if s > 0:
                strict.add(k)
    if implicit:
        system = _affine_system(P, implicit)
        if system is None:
            return None
        base, dirs = system
    ineqs = []
    seen = set()
    for c in P.inequalities:
        if c in implicit:
            continue
        a, b = _project(c, base, dirs)
        if not any(a):
            if b > 0:
                return None
            continue
        key = _normalize(a, b)
        if key not in seen:
            seen.add(key)
            ineqs.append((a, b))
    return _Reduced(base, dirs, ineqs)


def _normalize(a, b):
    lead = next(x for x in a if x)
    s = abs(lead)
    return tuple(x / s for x in a), b / s


def _max_capped_slack(projected, undecided, f):
    """LP over ``y = u - v``: maximize sum of ``t_k`` with ``a_k.y - b_k >= t_k``, ``0 <= t_k <= 1``.

    Every inequality must hold; returns ``(optimum, t values)`` or ``None``
    when infeasible.
    """
    m = len(projected)
    und = {k: idx for idx, k in enumerate(undecided)}
    nt = len(undecided)
    # variable layout: u (f), v (f), s (m), t (nt), w (nt)
    nvar = 2 * f + m + 2 * nt
    rows, rhs = [], []
    for k, (_, a, b) in enumerate(projected):
        row = [Fraction(0)] * nvar
        for q in range(f):
            row[q] = a[q]
            row[f + q] = -a[q]
        row[2 * f + k] = Fraction(-1)
        if k in und:
            row[2 * f + m + und[k]] = Fraction(-1)
        rows.append(row)
        rhs.append(b)
    for idx in range(nt):
        row = [Fraction(0)] * nvar
        row[2 * f + m + idx] = Fraction(1)
        row[2 * f + m + nt + idx] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))
    c = [0] * nvar
    for idx in range(nt):
        c[2 * f + m + idx] = 1
    res = linalg.maximize(c, rows, rhs)
    if res.status != "optimal":
        return None
    return res.value, [res.x[2 * f + m + idx] for idx in range(nt)]


def dimension(P: GTPolytope) -> int:
    """Dimension of the polytope, ``-1`` when empty."""
    red = P._reduced
    return -1 if red is None else red.dim


def affine_hull_dimension(points: Sequence[Sequence[Fraction]]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return linalg.rank([[x - y for x, y in zip(p, p0)] for p in points[1:]]) if len(points) > 1 else 0


VERTEX_METHODS = ("dd", "dfs")


def vertices(P: GTPolytope, guard: int = DEFAULT_VERTEX_GUARD, method: str = "dd") -> list[tuple[GTPattern, int]]:
    """All vertices with exact coordinates, each tagged with its denominator.

    ``method`` picks the enumerator: ``"dd"`` (double description, the
    default) or ``"dfs"`` (search over tight bases). Both work in the reduced
    coordinates of the affine hull and return the same sorted list.
    """
    if method not in VERTEX_METHODS:
        raise ValueError(f"unknown vertex method {method!r}")
    if P.n > guard:
        raise TooLarge(f"vertex enumeration guard is n <= {guard}, got n = {P.n}", n=P.n, guard=guard)
    red = P._reduced
    if red is None:
        return []
    found: dict[tuple, GTPattern] = {}

    def emit(y):
        x = red.point(y)
        if all(sum((ai * yi for ai, yi in zip(a, y)), Fraction(0)) >= b for a, b in red.ineqs):
            key = tuple(x)
            if key not in found:
                found[key] = pattern_from_flat(P.n, x)

    if red.dim == 0:
        emit([])
    elif method == "dd":
        for y in _double_description(red):
            emit(y)
    else:
        _tight_basis_search(red, emit)
    out = sorted(found.values(), key=lambda p: p.flat())
    return [(p, denominator(p)) for p in out]


def _integer_row(a, b) -> tuple[int, ...]:
    row = list(a) + [-b]
    den = lcm(*(Fraction(x).denominator for x in row))
    ints = [int(x * den) for x in row]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def _primitive(v) -> tuple[int, ...]:
    den = lcm(*(Fraction(x).denominator for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def _double_description(red: _Reduced) -> list[list[Fraction]]:
    """Vertices of ``{y : a.y >= b}`` via the cone ``{(y, t) : a.y - b t >= 0, t >= 0}``.

    The polytope is bounded and full-dimensional in these coordinates, so the
    cone is pointed and every extreme ray has ``t > 0``. Rays are kept as
    primitive integer vectors; adjacency uses the combinatorial test on
    zero sets stored as bitmasks.
    """
    f = red.dim
    d = f + 1
    rows = [_integer_row(a, b) for a, b in red.ineqs]
    rows.append((0,) * f + (1,))
    # a nonsingular d x d subsystem gives a simplicial starting cone
    stack = linalg.EchelonStack(d)
    first = []
    for k, r in enumerate(rows):
        if stack.push(r, Fraction(0)):
            first.append(k)
            if len(first) == d:
                break
    if len(first) < d:
        raise InternalInconsistency("constraint system is not pointed")
    inv = _inverse([[Fraction(x) for x in rows[k]] for k in first])
    rays: list[tuple[tuple[int, ...], int]] = []
    for col in range(d):
        ray = _primitive([inv[r][col] for r in range(d)])
        zero = 0
        for bit, k in enumerate(first):
            if bit != col:
                zero |= 1 << k
        rays.append((ray, zero))

    for k, h in enumerate(rows):
        if k in first:
            continue
        bit = 1 << k
        pos, neg, keep = [], [], []
        for ray, zero in rays:
            s = sum(x * y for x, y in zip(h, ray))
            if s > 0:
                pos.append((ray, zero, s))
                keep.append((ray, zero))
            elif s < 0:
                neg.append((ray, zero, s))
            else:
                keep.append((ray, zero | bit))
        zeros = [z for _, z in rays]
        for rp, zp, sp in pos:
            for rn, zn, sn in neg:
                common = zp & zn
                if common.bit_count() < d - 2:
                    continue
                if any(z & common == common and z != zp and z != zn for z in zeros):
                    continue
                new = _primitive([sp * x - sn * y for x, y in zip(rn, rp)])
                keep.append((new, common | bit))
        rays = keep
    out = []
    for ray, _ in rays:
        t = ray[-1]
        if t <= 0:
            raise InternalInconsistency("bounded polytope produced a ray at infinity")
        out.append([Fraction(x, t) for x in ray[:-1]])
    return out


def _inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(m)
    aug = [row + [Fraction(int(r == c)) for c in range(size)] for r, row in enumerate(m)]
    red, _ = linalg.rref(aug, size)
    return [row[size:] for row in red]


def _tight_basis_search(red: _Reduced, emit) -> None:
    """Depth-first search over sets of linearly independent tight inequalities.

    A branch is cut as soon as an inequality that has become constant on the
    current face is violated, or is tight although the search already passed
    it over: each vertex is reached only through the lexicographically first
    basis among its tight inequalities.
    """
    f = red.dim
    ineqs = red.ineqs
    stack = linalg.EchelonStack(f)
    must_be_slack: set[int] = set()

    def dead_branch():
        for k, (a, b) in enumerate(ineqs):
            ra, rb = stack.reduce(a, b)
            # with ra == 0 the face pins a.y to b - rb
            if not any(ra) and (rb > 0 or (rb == 0 and k in must_be_slack)):
                return True
        return False

    def dfs(start):
        if len(stack) == f:
            emit(stack.solve())
            return
        need = f - len(stack)
        skipped = []
        for k in range(start, len(ineqs) - need + 1):
            a, b = ineqs[k]
            if stack.push(a, b):
                if not dead_branch():
                    dfs(k + 1)
                stack.pop()
                must_be_slack.add(k)
                skipped.append(k)
        must_be_slack.difference_update(skipped)

    dfs(0)


def is_vertex(P: GTPolytope, p: GTPattern) -> bool:
    """Rank test: the constraints tight at ``p`` must pin down a single point."""
    if not contains(P, p, 1):
        raise NotMember("pattern is not a point of the polytope")
    flat = p.flat()
    rows = [dict(c.coeffs) for c in P.equalities]
    rows += [dict(c.coeffs) for c in P.inequalities if c.value(flat) == 0]
    return linalg.sparse_rank(rows) == P.nvars


# --- Ehrhart series and the degree bounds -----------------------------------


@dataclass(frozen=True)
class EhrhartReport:
    counts: tuple[int, ...]
    period: int
    dim: int
    numerator: tuple[int, ...]
    a_invariant: int

    def series_coefficients(self, upto: int) -> list[int]:
        """Expand ``numerator / (1 - t^period)^(dim+1)`` to degree ``upto``."""
        out = [0] * (upto + 1)
        e = self.dim + 1
        for deg, h in enumerate(self.numerator):
            if not h:
                continue
            k = 0
            while deg + self.period * k <= upto:
                out[deg + self.period * k] += h * comb(e - 1 + k, k)
                k += 1
        return out

    def to_dict(self) -> dict:
        return {
            "counts": list(self.counts),
            "period": self.period,
            "dim": self.dim,
            "numerator": list(self.numerator),
            "a_invariant": self.a_invariant,
        }


def period(P: GTPolytope, guard: int = DEFAULT_VERTEX_GUARD) -> int:
    return lcm(*(q for _, q in vertices(P, guard))) if not P.is_empty() else 1


def default_max_dilate(P: GTPolytope, guard: int = DEFAULT_VERTEX_GUARD) -> int:
    return period(P, guard) * (dimension(P) + 2)


def ehrhart(P: GTPolytope, D: int | None = None, guard: int = DEFAULT_VERTEX_GUARD) -> EhrhartReport:
    """Fit the Ehrhart series as ``h(t) / (1 - t^p)^(dim+1)`` from exact counts."""
    if P.is_empty():
        raise EmptyPolytope("GT polytope is empty")
    p = period(P, guard)
    dim = dimension(P)
    need = p * (dim + 2)
    if D is None:
        D = need
    if D < need:
        raise InsufficientDilates(f"need at least {need} dilates (period {p}, dim {dim}); got {D}",
                                  needed=need, got=D)
    counts = [count_lattice_points(P, d) for d in range(D + 1)]
    e = dim + 1
    conv = []
    for m in range(D + 1):
        s = 0
        for k in range(min(e, m // p) + 1):
            s += (-1) ** k * comb(e, k) * counts[m - p * k]
        conv.append(s)
    cut = p * e
    if any(conv[cut:]):
        bad = next(m for m in range(cut, D + 1) if conv[m])
        raise NonpolynomialResidue(f"coefficient of t^{bad} is {conv[bad]}, expected 0")
    numerator = conv[:cut]
    while numerator and numerator[-1] == 0:
        numerator.pop()
    report = EhrhartReport(tuple(counts), p, dim, tuple(numerator), len(numerator) - 1 - p * e)
    if report.series_coefficients(D) != counts:
        raise NonpolynomialResidue("fitted series does not reproduce the counts")
    return report


def krull_dimension(lam: Sequence[int], mu: Sequence[int]) -> int:
    P = build(lam, mu)
    d = dimension(P)
    if d < 0:
        raise EmptyPolytope("GT polytope is empty")
    return d + 1


def generation_bound(lam: Sequence[int], mu: Sequence[int], D: int | None = None,
                     guard: int = DEFAULT_VERTEX_GUARD) -> int:
    """Krull dimension plus a-invariant: the degree bound for ring generators."""
    P = build(lam, mu)
    report = ehrhart(P, D, guard)
    krull = report.dim + 1
    bound = krull + report.a_invariant
    assert bound < krull, "a-invariant must be negative"
    return bound
