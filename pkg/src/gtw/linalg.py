"""Exact linear algebra over the rationals.

Dense routines work on lists of lists of ``Fraction``; the sparse rank routine
takes rows as ``{column: coefficient}`` dicts, which is what the GT constraint
systems look like (two or three nonzeros per row).
"""
from fractions import Fraction
from math import lcm
from typing import Sequence


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(map(int, row)) for row in m]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[-1][-1]


def det(m: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a rational matrix.

    Each row is scaled to integers first so the elimination itself never
    forms a fraction.
    """
    scaled = []
    scale = 1
    for row in m:
        row = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        scale *= den
        scaled.append([int(x * den) for x in row])
    return Fraction(bareiss_det(scaled), scale)


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None):
    """Reduced row echelon form. Returns ``(rows, pivot_columns)``."""
    a = [[Fraction(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[1])


def solve_affine(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction], ncols: int):
    """Parametrize ``{x : a x = b}`` as ``x0 + Z y``.

    Returns ``(x0, basis)`` with ``basis`` a list of null-space vectors, or
    ``None`` when the system is inconsistent.
    """
    aug = [list(row) + [Fraction(v)] for row, v in zip(a, b)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x0 = [Fraction(0)] * ncols
    for row, c in zip(red, pivots):
        x0[c] = row[ncols]
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(v)
    return x0, basis


def sparse_rank(rows: Sequence[dict]) -> int:
    """Rank of a sparse rational matrix given as ``{col: value}`` rows."""
    pivot_rows: dict[int, dict] = {}
    r = 0
    for row in rows:
        v = {c: Fraction(x) for c, x in row.items() if x != 0}
        while v:
            c = min(v)
            if c not in pivot_rows:
                inv = 1 / v[c]
                pivot_rows[c] = {k: x * inv for k, x in v.items()}
                r += 1
                break
            p = pivot_rows[c]
            f = v[c]
            for k, x in p.items():
                y = v.get(k, 0) - f * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return r


class EchelonStack:
    """Incrementally built echelon basis of affine equations ``a . y = b``.

    Rows are pushed and popped in stack order, which is what a depth-first
    search over tight constraint sets needs.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[tuple[int, list[Fraction], Fraction]] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, a: Sequence[Fraction], b: Fraction):
        a = list(a)
        for piv, row, rhs in self.rows:
            f = a[piv]
            if f:
                a = [x - f * y for x, y in zip(a, row)]
                b = b - f * rhs
        return a, b

    def push(self, a: Sequence[Fraction], b: Fraction) -> bool:
        """Add a row if it is independent of the current basis."""
        a, b = self.reduce(a, b)
        piv = next((i for i, x in enumerate(a) if x), None)
        if piv is None:
            return False
        inv = 1 / a[piv]
        self.rows.append((piv, [x * inv for x in a], b * inv))
        return True

    def pop(self):
        self.rows.pop()

    def solve(self) -> list[Fraction]:
        """Unique solution; only valid when the basis has full rank."""
        assert len(self.rows) == self.dim
        y = [Fraction(0)] * self.dim
        # later rows were reduced against earlier ones only, so substitute
        # from the last pushed row back to the first
        for piv, row, rhs in reversed(self.rows):
            s = rhs
            for i, x in enumerate(row):
                if x and i != piv:
                    s -= x * y[i]
            y[piv] = s
        return y


class LPResult:
    __slots__ = ("status", "x", "value")

    def __init__(self, status: str, x=None, value=None):
        self.status = status
        self.x = x
        self.value = value

    def __repr__(self):
        return f"LPResult({self.status!r}, value={self.value})"


def _pivot(tab, basis, r, c):
    inv = 1 / tab[r][c]
    prow = [x * inv for x in tab[r]]
    tab[r] = prow
    nz = [k for k, x in enumerate(prow) if x]
    for i, row in enumerate(tab):
        if i != r:
            f = row[c]
            if f:
                for k in nz:
                    row[k] -= f * prow[k]
    basis[r] = c


def _run_simplex(tab, basis, allowed):
    """Maximize the objective stored as the last tableau row (reduced costs).

    Bland's rule; the objective row holds ``-c`` so a negative entry means the
    column can improve. Returns False when unbounded.
    """
    m = len(tab) - 1
    while True:
        obj = tab[-1]
        col = next((c for c in allowed if obj[c] < 0), None)
        if col is None:
            return True
        best = None
        for i in range(m):
            a = tab[i][col]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(tab, basis, best[1], col)


def maximize(c: Sequence, a_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    """Exact two-phase simplex for ``max c.x`` subject to ``A x = b, x >= 0``.

    ``status`` is ``"optimal"``, ``"infeasible"`` or ``"unbounded"``.
    """
    nvar = len(c)
    rows = []
    for row, b in zip(a_eq, b_eq):
        row = [Fraction(x) for x in row]
        b = Fraction(b)
        if b < 0:
            row = [-x for x in row]
            b = -b
        rows.append((row, b))
    m = len(rows)
    # columns: original vars, then one artificial per row, then rhs
    tab = []
    for i, (row, b) in enumerate(rows):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tab.append(row + art + [b])
    basis = [nvar + i for i in range(m)]
    # phase 1: maximize -sum(artificials)
    obj = [Fraction(0)] * (nvar + m + 1)
    for row in tab:
        for k in range(nvar):
            obj[k] -= row[k]
        obj[-1] -= row[-1]
    tab.append(obj)
    _run_simplex(tab, basis, range(nvar))
    if tab[-1][-1] != 0:
        return LPResult("infeasible")
    # drive artificials out of the basis; drop redundant rows
    i = 0
    while i < len(tab) - 1:
        if basis[i] >= nvar:
            col = next((k for k in range(nvar) if tab[i][k] != 0), None)
            if col is None:
                del tab[i]
                del basis[i]
                continue
            _pivot(tab, basis, i, col)
        i += 1
    tab = [row[:nvar] + [row[-1]] for row in tab[:-1]]
    obj = [-Fraction(x) for x in c] + [Fraction(0)]
    for i, row in enumerate(tab):
        f = obj[basis[i]]
        if f:
            obj = [x - f * y for x, y in zip(obj, row)]
    tab.append(obj)
    if not _run_simplex(tab, basis, range(nvar)):
        return LPResult("unbounded")
    x = [Fraction(0)] * nvar
    for i, b in enumerate(basis):
        x[b] = tab[i][-1]
    return LPResult("optimal", x, tab[-1][-1])


def feasible_point(a_eq: Sequence[Sequence], b_eq: Sequence, nvar: int):
    """Some ``x >= 0`` with ``A x = b``, or ``None``."""
    res = maximize([0] * nvar, a_eq, b_eq)
    return res.x if res.status == "optimal" else None
