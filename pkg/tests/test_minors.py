import random
from fractions import Fraction
from itertools import combinations

import pytest

from oracles import laplace_det
from gtw.errors import ContentMismatch, IndexOutOfRange, NotIncreasing
from gtw.minors import det_minor, eval_basis_vector, is_semistable, matrix_from_json, matrix_to_dict
from gtw.tableaux import Tableau, enumerate_ssyt, kostka, validate_tableau


def laplace_basis_vector(g, t):
    value = Fraction(1)
    for col in t.columns():
        value *= laplace_det([[g[r - 1][c] for c in range(len(col))] for r in col])
    return value


def identity(n):
    return [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]


def random_matrix(rng, n, lo=-5, hi=5):
    return [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]


def test_identity_minors():
    for n in range(1, 7):
        for ell in range(1, n + 1):
            assert det_minor(identity(n), range(1, ell + 1)) == 1
    assert det_minor(identity(6), (1, 4, 5)) == 0


def test_index_errors():
    with pytest.raises(IndexOutOfRange):
        det_minor(identity(3), (1, 4))
    with pytest.raises(NotIncreasing):
        det_minor(identity(3), (2, 1))


def test_two_by_two_cofactor():
    rng = random.Random(0)
    for _ in range(50):
        n = rng.randint(2, 5)
        g = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
        a, b = sorted(rng.sample(range(1, n + 1), 2))
        expected = g[a - 1][0] * g[b - 1][1] - g[a - 1][1] * g[b - 1][0]
        assert det_minor(g, (a, b)) == expected


def test_laplace_oracle():
    rng = random.Random(1)
    for n in range(1, 6):
        g = random_matrix(rng, n)
        for k in range(1, n + 1):
            for rows in combinations(range(1, n + 1), k):
                sub = [[g[r - 1][c] for c in range(k)] for r in rows]
                assert det_minor(g, rows) == laplace_det(sub)


def test_example_basis_vector():
    tau = validate_tableau([[1, 1, 5], [2, 4, 6], [3, 5], [5], [6]], 6)
    assert tau.columns() == [(1, 2, 3, 5, 6), (1, 4, 5), (5, 6)]
    assert eval_basis_vector(identity(6), tau) == 0
    g = random_matrix(random.Random(2), 6)
    expected = det_minor(g, (1, 2, 3, 5, 6)) * det_minor(g, (1, 4, 5)) * det_minor(g, (5, 6))
    assert eval_basis_vector(g, tau) == expected


def test_column_initial_tableaux_are_one():
    for lam in [(1, 0), (2, 1, 0), (3, 3, 1, 0), (4, 2, 2, 1, 0)]:
        (t,) = enumerate_ssyt(lam, lam)
        assert all(col == tuple(range(1, len(col) + 1)) for col in t.columns())
        assert eval_basis_vector(identity(len(lam)), t) == 1


def test_multiplicative_over_columns():
    g = random_matrix(random.Random(4), 3)
    t1 = validate_tableau([[1], [2]], 3)
    t2 = validate_tableau([[1], [3]], 3)
    both = validate_tableau([[1, 1], [2, 3]], 3)
    assert eval_basis_vector(g, t1) * eval_basis_vector(g, t2) == eval_basis_vector(g, both)


def test_semistable_small():
    ok, t = is_semistable(identity(2), (1, 0), (1, 0))
    assert ok and t.rows == ((1,),)
    g = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    assert is_semistable(g, (1, 0), (1, 0)) == (False, None)
    with pytest.raises(ContentMismatch):
        is_semistable(identity(2), (1, 0), (2, 0))


def test_semistable_generic_3x3():
    g = [[Fraction(2), Fraction(1), Fraction(0)], [Fraction(1), Fraction(3), Fraction(1)],
         [Fraction(1), Fraction(1), Fraction(4)]]
    ok, t = is_semistable(g, (2, 1, 0), (1, 1, 1))
    assert ok
    first = next(s for s in enumerate_ssyt((2, 1, 0), (1, 1, 1)) if eval_basis_vector(g, s))
    assert t == first


def test_witness_is_first_nonzero():
    rng = random.Random(5)
    for _ in range(30):
        g = random_matrix(rng, 3, -1, 1)
        ok, t = is_semistable(g, (2, 1, 0), (1, 1, 1))
        nonzero = [s for s in enumerate_ssyt((2, 1, 0), (1, 1, 1)) if eval_basis_vector(g, s)]
        assert ok == bool(nonzero)
        assert t == (nonzero[0] if nonzero else None)


def test_random_matrices_semistable():
    rng = random.Random(6)
    rare_failures = 0
    suite = [((2, 1, 0), (1, 1, 1)), ((2, 2, 0, 0), (1, 1, 1, 1)), ((3, 1, 0, 0), (2, 0, 1, 1)),
             ((2, 2, 2, 0, 0, 0), (1,) * 6)]
    for lam, mu in suite:
        assert kostka(lam, mu) > 0
        for _ in range(50):
            g = random_matrix(rng, len(lam), -9, 9)
            ok, _ = is_semistable(g, lam, mu)
            # a "no" is only acceptable if an independent evaluation agrees
            assert ok or all(laplace_basis_vector(g, t) == 0 for t in enumerate_ssyt(lam, mu))
            rare_failures += not ok
    assert rare_failures <= 10


def test_right_unipotent_invariance():
    rng = random.Random(7)
    for _ in range(20):
        n = 4
        g = random_matrix(rng, n, -2, 2)
        u = [[Fraction(int(r == c)) if r >= c else Fraction(rng.randint(-3, 3)) for c in range(n)]
             for r in range(n)]
        gu = [[sum(g[r][k] * u[k][c] for k in range(n)) for c in range(n)] for r in range(n)]
        for lam, mu in [((2, 1, 0, 0), (1, 1, 1, 0)), ((2, 2, 0, 0), (1, 1, 1, 1))]:
            assert is_semistable(g, lam, mu)[0] == is_semistable(gu, lam, mu)[0]


def test_matrix_json_round_trip():
    m = [[Fraction(1, 2), Fraction(0)], [Fraction(-3), Fraction(1)]]
    import json
    assert matrix_from_json(json.dumps(matrix_to_dict(m))) == m
