"""Degree-one semistability of a matrix through products of column minors.

Run: python demos/semistability.py
"""
from fractions import Fraction

from gtw.minors import eval_basis_vector, is_semistable
from gtw.tableaux import enumerate_ssyt

g = [[Fraction(x) for x in row] for row in ([2, 1, 0], [1, 0, 1], [0, 1, 3])]
lam, mu = (2, 1, 0), (1, 1, 1)
for t in enumerate_ssyt(lam, mu):
    print("rows", t.rows, "columns", t.columns(), "-> b =", eval_basis_vector(g, t))
ok, witness = is_semistable(g, lam, mu)
print("semistable:", ok, "witness:", witness.rows if witness else None)

# a matrix whose first column vanishes below the top kills every basis vector here
h = [[Fraction(x) for x in row] for row in ([1, 2, 3], [0, 1, 4], [0, 5, 6])]
print("second matrix semistable:", is_semistable(h, lam, mu)[0])
